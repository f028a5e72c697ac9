#pragma once

// Coordinate transform to Riccati form and the local Laurent balances.
//
// Both families map to chi'(y) + chi(y)^2 + Q(y, E) = 0 with
//   Morse          y = sqrt(v1) e^{-a x},        Q = 1/(4y^2) + [E - y^2 + (v2/sqrt(v1)) y]/(a^2 y^2)
//   Poschl-Teller  y = s * i sqrt(q) e^{-a x},   Q = 1/(4y^2) + [E - (4 v0/q) y^2/(1-y^2)^2]/(a^2 y^2)
// and psi = exp( int (chi - 1/(2y)) dy ).
//
// Residue conventions at the fixed poles (all balances are formed from Q
// itself, never from quoted solutions):
//   y = 0:   chi ~ b1 / y
//   y = +1:  chi ~ b1p / (1 - y)        (PT)
//   y = -1:  chi ~ -b1pp / (1 + y)      (PT; mirror of the +1 orientation)
// In the mirrored convention the two edge balances coincide, so the residue
// pair at y = -1 equals the pair at y = +1, and the eigenfunction exponents
// come out as (1-y)^{-b1p} (1+y)^{-b1pp}.

#include <array>
#include <vector>

#include "qhj/contour.hpp"
#include "qhj/potentials.hpp"
#include "qhj/types.hpp"

namespace qhj {

enum class PotentialKind { morse, poschl_teller };

struct RiccatiProblem {
  PotentialKind kind{};
  PotentialSpec spec;
  Complex alpha{};
  Complex y_scale{};   // sqrt(v1), or map_sign * i sqrt(q)
  Complex mu{};        // Morse: v2 / (2 alpha sqrt(v1)); unused for PT
  Complex strength{};  // PT: 4 v0 / q; unused for Morse
  int map_sign = +1;

  Complex y_of_x(Complex x) const { return y_scale * std::exp(-alpha * x); }
  Complex x_of_y(Complex y) const { return -std::log(y / y_scale) / alpha; }

  std::vector<Complex> finite_poles() const {
    if (kind == PotentialKind::morse) return {Complex(0.0)};
    return {Complex(0.0), Complex(1.0), Complex(-1.0)};
  }

  Complex Q(Complex y, Complex E) const {
    const Complex a2y2 = alpha * alpha * y * y;
    if (kind == PotentialKind::morse) {
      const Complex lin = 2.0 * alpha * mu;  // v2 / sqrt(v1)
      return 0.25 / (y * y) + (E - y * y + lin * y) / a2y2;
    }
    const Complex one_m_y2 = 1.0 - y * y;
    return 0.25 / (y * y) + (E - strength * y * y / (one_m_y2 * one_m_y2)) / a2y2;
  }
};

inline RiccatiProblem transform(const PotentialSpec& p, int map_sign = +1) {
  validate(p);
  RiccatiProblem r;
  r.spec = p;
  r.map_sign = map_sign;
  if (const auto* m = std::get_if<GeneralizedMorse>(&p)) {
    r.kind = PotentialKind::morse;
    r.alpha = m->alpha;
    r.y_scale = std::sqrt(m->v1);
    r.mu = m->v2 / (2.0 * m->alpha * r.y_scale);
  } else {
    const auto& t = std::get<PoschlTeller>(p);
    r.kind = PotentialKind::poschl_teller;
    r.alpha = t.alpha;
    r.y_scale = double(map_sign) * Complex(0.0, 1.0) * std::sqrt(t.q);
    r.strength = 4.0 * t.v0 / t.q;
  }
  return r;
}

struct ResidueSet {
  PotentialKind kind{};
  std::array<Complex, 2> b1_pair{};    // pole y = 0
  std::array<Complex, 2> b1p_pair{};   // pole y = +1 (PT only)
  std::array<Complex, 2> b1pp_pair{};  // pole y = -1, mirrored orientation (PT only)
  std::array<Complex, 2> lambda_pair{};
  std::array<Complex, 2> a0_pair{};    // constant term of chi at infinity, per lambda branch
  Complex kappa0{};                    // 1/(y-c)^2 coefficients of Q, kept for checks
  Complex kappa_p{}, kappa_m{};
};

namespace detail {

// Coefficient of 1/(y-c)^2 in Q by limit evaluation: the four-point average
// of (y-c)^2 Q(y) at c + eps * {1, i, -1, -i} cancels the odd Laurent terms
// and the quadratic one, leaving kappa + O(eps^4).
template <class QF>
Complex pole_quadratic_coefficient(QF&& q, Complex c, double eps = 1e-5) {
  Complex acc(0.0);
  const Complex dirs[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (const auto& d : dirs) {
    const Complex y = c + eps * d;
    acc += (y - c) * (y - c) * q(y);
  }
  return acc / 4.0;
}

// Roots of b^2 + t*b + k = 0 with deterministic ordering (+sqrt first).
inline std::array<Complex, 2> balance_roots(Complex t, Complex k) {
  const Complex disc = t * t - 4.0 * k;
  if (std::abs(disc) < 1e-14 && std::abs(t) < 1e-14 && std::abs(k) < 1e-14)
    throw DegenerateBalance("residue balance is degenerate");
  const Complex s = std::sqrt(disc);
  return {(-t + s) / 2.0, (-t - s) / 2.0};
}

}  // namespace detail

// Laurent data of chi at infinity.  Morse: a0^2 matches the O(1) term of Q
// and lambda the O(1/y) term; PT: a0 = 0 and lambda balances the O(1/y^2)
// term.  Coefficients of Q at infinity are extracted by a large contour.
struct InfinityBehavior {
  std::array<Complex, 2> lambda_pair{};
  std::array<Complex, 2> a0_pair{};
};

inline InfinityBehavior infinity_behavior(const RiccatiProblem& r, Complex E) {
  InfinityBehavior out;
  auto qf = [&](Complex y) { return r.Q(y, E); };
  const double R = 60.0;
  if (r.kind == PotentialKind::morse) {
    const Complex c0 = contour_coefficient(qf, Complex(0.0), 0, R);
    const Complex cm1 = contour_coefficient(qf, Complex(0.0), -1, R);
    const Complex a0 = std::sqrt(-c0);
    if (std::abs(a0) < 1e-14) throw DegenerateBalance("infinity balance: a0 = 0 for Morse");
    out.a0_pair = {a0, -a0};
    out.lambda_pair = {-cm1 / (2.0 * a0), cm1 / (2.0 * a0)};
  } else {
    const Complex cm2 = contour_coefficient(qf, Complex(0.0), -2, R);
    out.a0_pair = {Complex(0.0), Complex(0.0)};
    out.lambda_pair = detail::balance_roots(Complex(-1.0), cm2);
  }
  return out;
}

// Residue candidates at every finite pole, from the local quadratic
// balances.  Substituting chi ~ rho/(y-c) gives rho^2 - rho + kappa_c = 0
// for the function-theoretic residue rho; the stored pairs are in the
// orientations listed at the top of this header.
inline ResidueSet pole_residues(const RiccatiProblem& r, Complex E) {
  ResidueSet out;
  out.kind = r.kind;
  auto qf = [&](Complex y) { return r.Q(y, E); };

  out.kappa0 = detail::pole_quadratic_coefficient(qf, Complex(0.0));
  out.b1_pair = detail::balance_roots(Complex(-1.0), out.kappa0);

  if (r.kind == PotentialKind::poschl_teller) {
    out.kappa_p = detail::pole_quadratic_coefficient(qf, Complex(1.0));
    out.kappa_m = detail::pole_quadratic_coefficient(qf, Complex(-1.0));
    // chi ~ b1p/(1-y): oriented residue is -b1p, so b1p^2 + b1p + kappa = 0.
    out.b1p_pair = detail::balance_roots(Complex(1.0), out.kappa_p);
    out.b1pp_pair = detail::balance_roots(Complex(1.0), out.kappa_m);
  }

  const auto inf = infinity_behavior(r, E);
  out.lambda_pair = inf.lambda_pair;
  out.a0_pair = inf.a0_pair;
  return out;
}

}  // namespace qhj
