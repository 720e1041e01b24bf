#include "edenca/verdict.hpp"

namespace edenca {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Certified: return "certified";
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::UndecidedAtScale: return "undecided_at_scale";
  }
  return "?";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::ClosureCertificate: return "closure_certificate";
    case Method::FiniteFieldSampling: return "finite_field_sampling";
    case Method::ExhaustiveEnumeration: return "exhaustive_enumeration";
    case Method::LinearAlgebra: return "linear_algebra";
    case Method::Substitution: return "substitution";
  }
  return "?";
}

Json to_json(const Verdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["statement"] = v.statement;
  j["method"] = to_string(v.method);
  if (!v.scale.empty()) j["scale"] = v.scale;
  j["witness"] = v.witness;
  return j;
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json rational_json(const mpq_class& q) { return {{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}}; }

}  // namespace edenca
