#pragma once

// The two potential families handled by the solver, with complex parameters:
//
//   generalized Morse   V(x) = v1 e^{-2 a x} - v2 e^{-a x}
//   Poschl-Teller       V(x) = -4 v0 e^{-2 a x} / (1 + q e^{-2 a x})^2
//
// Symmetry classification is by sampled functional test, not by parameter
// pattern matching: Hermitian means V real on the sampled real line,
// PT-symmetric means conj(V(-x)) = V(x) there.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qhj/types.hpp"

namespace qhj {

struct GeneralizedMorse {
  Complex v1, v2, alpha;
};

struct PoschlTeller {
  Complex v0, q, alpha;
};

using PotentialSpec = std::variant<GeneralizedMorse, PoschlTeller>;

enum class SymmetryClass { hermitian, pt_symmetric, non_pt_non_hermitian };

inline std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::hermitian: return "hermitian";
    case SymmetryClass::pt_symmetric: return "pt_symmetric";
    default: return "non_pt_non_hermitian";
  }
}

inline bool is_morse(const PotentialSpec& p) {
  return std::holds_alternative<GeneralizedMorse>(p);
}

inline void validate(const PotentialSpec& p) {
  if (const auto* m = std::get_if<GeneralizedMorse>(&p)) {
    if (m->alpha == Complex(0.0)) throw InvalidPotential("morse: alpha = 0");
    if (m->v1 == Complex(0.0)) throw InvalidPotential("morse: v1 = 0");
  } else {
    const auto& t = std::get<PoschlTeller>(p);
    if (t.alpha == Complex(0.0)) throw InvalidPotential("poschl_teller: alpha = 0");
    if (t.q == Complex(0.0)) throw InvalidPotential("poschl_teller: q = 0");
  }
}

inline Complex evaluate(const PotentialSpec& p, Complex x) {
  if (const auto* m = std::get_if<GeneralizedMorse>(&p)) {
    return m->v1 * std::exp(-2.0 * m->alpha * x) - m->v2 * std::exp(-m->alpha * x);
  }
  const auto& t = std::get<PoschlTeller>(p);
  const Complex e = std::exp(-2.0 * t.alpha * x);
  const Complex den = 1.0 + t.q * e;
  if (std::abs(den) < 1e-12 * (1.0 + std::abs(t.q * e)))
    throw PoleOfPotential("poschl_teller: 1 + q e^{-2 a x} vanishes");
  return -4.0 * t.v0 * e / (den * den);
}

namespace detail {

// 100 uniform points on [-5, 5] plus 10 seeded random ones.
inline std::vector<double> symmetry_samples(std::uint64_t seed) {
  std::vector<double> xs;
  xs.reserve(110);
  for (int i = 0; i < 100; ++i) xs.push_back(-5.0 + 10.0 * i / 99.0);
  Rng rng(seed);
  for (int i = 0; i < 10; ++i) xs.push_back(rng.uniform(-5.0, 5.0));
  return xs;
}

}  // namespace detail

inline SymmetryClass classify_symmetry(const PotentialSpec& p,
                                       std::uint64_t seed = default_seed()) {
  const auto xs = detail::symmetry_samples(seed);
  bool real_ok = true, pt_ok = true;
  for (double x : xs) {
    Complex v, vm;
    try {
      v = evaluate(p, Complex(x, 0.0));
      vm = evaluate(p, Complex(-x, 0.0));
    } catch (const PoleOfPotential&) {
      continue;  // a singular sample decides neither test
    }
    const double scale = 1.0 + std::abs(v);
    if (std::abs(v.imag()) > 1e-12 * scale) real_ok = false;
    if (std::abs(std::conj(vm) - v) > 1e-12 * scale) pt_ok = false;
    if (!real_ok && !pt_ok) break;
  }
  if (real_ok) return SymmetryClass::hermitian;
  if (pt_ok) return SymmetryClass::pt_symmetric;
  return SymmetryClass::non_pt_non_hermitian;
}

// Real-spectrum predicate for complex Poschl-Teller parameters:
// Im(v0) Re(q) = Re(v0) Im(q).
inline bool reality_condition(Complex v0, Complex q) {
  const double lhs = v0.imag() * q.real() - v0.real() * q.imag();
  return std::abs(lhs) < 1e-12 * std::max(1.0, std::abs(v0) * std::abs(q));
}

// --- JSON (de)serialization -------------------------------------------------
//
// {"kind": "morse"|"poschl_teller", "params": {"v1": [re, im], ...}}

inline nlohmann::ordered_json complex_to_json(Complex z) {
  // canonicalize -0.0 so equal values serialize identically
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return nlohmann::ordered_json::array({re, im});
}

inline Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
  throw Error("complex value must be a number or [re, im]");
}

inline nlohmann::ordered_json to_json(const PotentialSpec& p) {
  nlohmann::ordered_json j;
  if (const auto* m = std::get_if<GeneralizedMorse>(&p)) {
    j["kind"] = "morse";
    j["params"]["v1"] = complex_to_json(m->v1);
    j["params"]["v2"] = complex_to_json(m->v2);
    j["params"]["alpha"] = complex_to_json(m->alpha);
  } else {
    const auto& t = std::get<PoschlTeller>(p);
    j["kind"] = "poschl_teller";
    j["params"]["v0"] = complex_to_json(t.v0);
    j["params"]["q"] = complex_to_json(t.q);
    j["params"]["alpha"] = complex_to_json(t.alpha);
  }
  return j;
}

inline PotentialSpec potential_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& params = j.at("params");
  if (kind == "morse") {
    GeneralizedMorse m{complex_from_json(params.at("v1")), complex_from_json(params.at("v2")),
                       complex_from_json(params.at("alpha"))};
    PotentialSpec p = m;
    validate(p);
    return p;
  }
  if (kind == "poschl_teller") {
    PoschlTeller t{complex_from_json(params.at("v0")), complex_from_json(params.at("q")),
                   complex_from_json(params.at("alpha"))};
    PotentialSpec p = t;
    validate(p);
    return p;
  }
  throw Error("unknown potential kind: " + kind);
}

}  // namespace qhj
