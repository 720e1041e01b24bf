import json

import pytest

import edenca

PRODUCT_RULE = {
    "format": 1,
    "group": "Z",
    "memory": [0, 1],
    "alphabet": {"kind": "affine", "field": "fp:5", "coordinates": ["x"], "ideal": [], "basepoint": [1]},
    "rule": {"kind": "polynomial", "components": ["x_0*x_1"]},
    "metadata": {"irreducible": True, "complete": False},
}

AND_RULE = {
    "format": 1,
    "group": "Z",
    "memory": [0, 1],
    "alphabet": {"kind": "finite", "symbols": ["0", "1"]},
    "rule": {"kind": "table", "outputs": [0, 0, 0, 1]},
}


@pytest.fixture
def product():
    return edenca.CellularAutomaton.from_json(json.dumps(PRODUCT_RULE))


def test_version():
    assert edenca.__version__ == "0.1.0"


def test_registry_ids():
    ids = edenca.registry_ids()
    assert len(ids) == 8
    assert "product-rule-z" in ids


def test_run_registry_passes():
    report = edenca.run_registry("product-rule-z", field="fp:5", m_max=2)
    assert report["passed"]
    assert [row["dim"] for row in report["analyses"]["mdim"]["rows"]] == [1, 3, 5]


def test_unknown_entry():
    with pytest.raises(KeyError):
        edenca.run_registry("nope")


def test_spec_round_trip(product):
    again = edenca.CellularAutomaton.from_json(product.to_json())
    assert again.to_json() == product.to_json()
    assert product.group == "Z"
    assert product.memory == ["0", "1"]
    assert product.field == "fp:5"


def test_bad_spec():
    with pytest.raises(ValueError):
        edenca.CellularAutomaton.from_json('{"format": 1, "group": "Z", ')


def test_dimensions():
    assert edenca.krull_dimension(["x", "y"], ["x*y"]) == 1
    assert edenca.krull_dimension(["x"], ["x", "x - 1"]) is None
    assert edenca.groebner_basis(["x"], ["x", "x + 1"]) == ["1"]


def test_window_dimension_and_mdim(product):
    assert edenca.window_image_dim(product, [-1, 0, 1]) == 3
    report = edenca.mdim_estimate(product, m_max=2)
    assert report["estimate"] == {"num": 1, "den": 1}


def test_orphan_certificate(product):
    verdict = edenca.orphan_certify(product, {"support": [-1, 0, 1], "values": [1, 0, 1]})
    assert verdict["kind"] == "certified"


def test_finite_searches():
    ca = edenca.CellularAutomaton.from_json(json.dumps(AND_RULE))
    assert edenca.orphan_search(ca, 4)["kind"] == "refuted"
    assert edenca.mep_search(ca, 2)["kind"] == "refuted"


def test_free_group_mdim_rejected():
    spec = {
        "format": 1,
        "group": "F2",
        "memory": ["a"],
        "alphabet": {"kind": "linear", "field": "fp:2", "dimension": 1},
        "rule": {"kind": "linear", "blocks": [[[1]]]},
    }
    ca = edenca.CellularAutomaton.from_json(json.dumps(spec))
    with pytest.raises(ValueError):
        edenca.mdim_estimate(ca, 1)
    assert edenca.linear_preinjectivity(ca, [0, 1])["kind"] == "certified"
