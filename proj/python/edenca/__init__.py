"""Garden-of-Eden analyses for algebraic cellular automata."""

from ._core import (
    CellularAutomaton,
    NonAmenableGroup,
    SpecError,
    UnknownEntry,
    __version__,
    groebner_basis,
    krull_dimension,
    linear_preinjectivity,
    mdim_estimate,
    mep_search,
    orphan_certify,
    orphan_search,
    registry_ids,
    run_registry,
    window_image_dim,
)

__all__ = [
    "CellularAutomaton",
    "NonAmenableGroup",
    "SpecError",
    "UnknownEntry",
    "__version__",
    "groebner_basis",
    "krull_dimension",
    "linear_preinjectivity",
    "mdim_estimate",
    "mep_search",
    "orphan_certify",
    "orphan_search",
    "registry_ids",
    "run_registry",
    "window_image_dim",
]
