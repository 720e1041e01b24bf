#pragma once

#include <string>

#include <gmpxx.h>

#include "json.hpp"

namespace edenca {

using Json = nlohmann::ordered_json;

enum class VerdictKind { Certified, Refuted, UndecidedAtScale };

// How a verdict was reached; sampling-based verdicts are tagged as such.
enum class Method { ClosureCertificate, FiniteFieldSampling, ExhaustiveEnumeration, LinearAlgebra, Substitution };

struct Verdict {
  VerdictKind kind = VerdictKind::UndecidedAtScale;
  std::string statement;
  Method method = Method::ExhaustiveEnumeration;
  Json witness = Json::object();
  std::string scale;  // search extent behind an undecided or scale-bound verdict

  bool certified() const { return kind == VerdictKind::Certified; }
  bool refuted() const { return kind == VerdictKind::Refuted; }
  bool undecided() const { return kind == VerdictKind::UndecidedAtScale; }
};

std::string to_string(VerdictKind kind);
std::string to_string(Method method);
Json to_json(const Verdict& v);
// {"num": n, "den": d}; integers beyond 64 bits are written as decimal strings.
Json rational_json(const mpq_class& q);
Json integer_json(const mpz_class& z);

}  // namespace edenca
