#pragma once

// Closed-form eigenfunctions assembled from the residue data.
//
//   Morse          psi(y) = y^{b1 - 1/2} e^{C1 y} P_n(y)
//   Poschl-Teller  psi(y) = y^{b1 - 1/2} (1-y)^{-b1p} (1+y)^{-b1pp} P_{2n}(y)
//
// The polynomial is the unique monic solution of the reduced equation
// obtained by substituting chi = (singular part) + P'/P into the Riccati
// equation; the quadratic balance relations kill the double-pole and
// leading terms identically, leaving
//
//   Morse  y P'' + (2 b1 + 2 C1 y) P' + (2 b1 C1 + 2 mu / alpha) P = 0
//   PT     y(1-y^2) P'' + 2[b1(1-y^2) + 2 beta y^2] P'
//                        + 2 beta (2 b1 - 1 - 2 beta) y P = 0
//
// which ode_polynomial_solution solves by coefficient matching.

#include "qhj/poly_ode.hpp"
#include "qhj/quantize.hpp"
#include "qhj/riccati.hpp"

namespace qhj {

struct EigenfunctionForm {
  PotentialKind kind{};
  Complex alpha{}, y_scale{};
  int n = 0;
  Complex exponent_at_0{};
  Complex exponent_at_plus1{}, exponent_at_minus1{};  // Poschl-Teller only
  Complex exp_rate{};                                 // Morse only (C1)
  PolynomialC poly;

  Complex y_of_x(Complex x) const { return y_scale * std::exp(-alpha * x); }

  // Coefficient of the displayed Jacobi form, sqrt(1 + 8 v0/(q a^2)); kept as
  // an accessor because the adjudication report quotes it.
  static Complex jacobi_gamma(const PoschlTeller& t) {
    return std::sqrt(1.0 + 8.0 * t.v0 / (t.q * t.alpha * t.alpha));
  }
  static Complex jacobi_nu2(const PoschlTeller& t) {
    return std::sqrt(8.0 * t.v0 / (t.q * t.alpha * t.alpha));
  }
};

inline EigenfunctionForm build_eigenfunction(const RiccatiProblem& r, const EnergyLevel& lv) {
  EigenfunctionForm ef;
  ef.kind = r.kind;
  ef.alpha = r.alpha;
  ef.y_scale = r.y_scale;
  ef.n = lv.n;

  const Complex w = sqrt_neg(lv.energy);
  const Complex b1 = 0.5 + double(lv.branch.b1_sign) * w / r.alpha;
  ef.exponent_at_0 = b1 - 0.5;

  if (r.kind == PotentialKind::morse) {
    const Complex c1 = -double(lv.branch.lambda_sign) / r.alpha;
    ef.exp_rate = c1;
    const PolynomialC p2({Complex(0.0), Complex(1.0)});
    const PolynomialC p1({2.0 * b1, 2.0 * c1});
    const PolynomialC p0({2.0 * b1 * c1 + 2.0 * r.mu / r.alpha});
    ef.poly = ode_polynomial_solution(p2, p1, p0, lv.n);
  } else {
    const ResidueSet rs = pole_residues(r, lv.energy);
    const Complex beta = rs.b1p_pair[lv.branch.b1p_index];
    ef.exponent_at_plus1 = -beta;
    ef.exponent_at_minus1 = -beta;  // mirrored edge residues coincide
    const PolynomialC p2({Complex(0.0), Complex(1.0), Complex(0.0), Complex(-1.0)});
    const PolynomialC p1({2.0 * b1, Complex(0.0), 2.0 * (2.0 * beta - b1)});
    const PolynomialC p0({Complex(0.0), 2.0 * beta * (2.0 * b1 - 1.0 - 2.0 * beta)});
    ef.poly = ode_polynomial_solution(p2, p1, p0, 2 * lv.n);
  }
  return ef;
}

inline Complex eigenfunction_value_y(const EigenfunctionForm& ef, Complex y) {
  Complex value;
  if (y == Complex(0.0)) {
    if (ef.exponent_at_0.real() <= 0.0 || std::abs(ef.exponent_at_0.imag()) > 1e-12)
      throw EvaluationAtPole("eigenfunction at y = 0 with non-decaying exponent");
    return Complex(0.0);
  }
  value = std::pow(y, ef.exponent_at_0) * ef.poly.eval(y);
  if (ef.kind == PotentialKind::morse) {
    value *= std::exp(ef.exp_rate * y);
  } else {
    const Complex um = 1.0 - y, up = 1.0 + y;
    if (std::abs(um) < 1e-12 || std::abs(up) < 1e-12)
      throw EvaluationAtPole("eigenfunction at y = +-1");
    value *= std::pow(um, ef.exponent_at_plus1) * std::pow(up, ef.exponent_at_minus1);
  }
  return value;
}

inline Complex eigenfunction_value(const EigenfunctionForm& ef, Complex x) {
  return eigenfunction_value_y(ef, ef.y_of_x(x));
}

// d(log psi)/dy, poles written explicitly; exact up to roundoff.
inline Complex log_derivative_y(const EigenfunctionForm& ef, Complex y) {
  Complex g = ef.exponent_at_0 / y + ef.poly.derivative().eval(y) / ef.poly.eval(y);
  if (ef.kind == PotentialKind::morse) {
    g += ef.exp_rate;
  } else {
    g += ef.exponent_at_plus1 / (y - 1.0) + ef.exponent_at_minus1 / (y + 1.0);
  }
  return g;
}

// chi = d(log psi)/dy + 1/(2y); the oriented residue at a fixed pole c is
// the coefficient of 1/(y - c).
inline Complex chi_value(const EigenfunctionForm& ef, Complex y) {
  return log_derivative_y(ef, y) + 0.5 / y;
}

inline Complex oriented_residue(const EigenfunctionForm& ef, Complex pole) {
  if (pole == Complex(0.0)) return ef.exponent_at_0 + 0.5;
  if (pole == Complex(1.0)) return ef.exponent_at_plus1;
  if (pole == Complex(-1.0)) return ef.exponent_at_minus1;
  throw Error("oriented_residue: not a fixed pole");
}

// Quantum momentum function p = -i psi'(x)/psi(x).  Its only movable
// singularities are simple poles at nodes of psi, each with residue -i.
inline Complex qmf_value(const EigenfunctionForm& ef, const EnergyLevel&, Complex x) {
  const Complex y = ef.y_of_x(x);
  const Complex psi = eigenfunction_value_y(ef, y);
  if (std::abs(psi) < 1e-300) throw EvaluationAtNode("qmf at a node of psi");
  // d/dx = -alpha y d/dy
  return Complex(0.0, 1.0) * ef.alpha * y * log_derivative_y(ef, y);
}

// Admissibility regimes of the displayed Jacobi-form solution, classified
// exactly as the three quoted inequality cases on
//   a = -(n - 1/2) + pole_sign * gamma   and   b = 1 + edge_sign * gamma:
//   case_i   a < 0, b > 0, requires b > |a|
//   case_ii  a < 0, b < 0, no further restriction
//   case_iii a > 0,        requires b > |a|
enum class JacobiFormCase { case_i, case_ii, case_iii, unphysical };

inline JacobiFormCase jacobi_form_case(int n, double gamma, int pole_sign, int edge_sign) {
  const double a = -(double(n) - 0.5) + pole_sign * gamma;
  const double b = 1.0 + edge_sign * gamma;
  if (a == 0.0 || b == 0.0) return JacobiFormCase::unphysical;
  if (a < 0.0 && b > 0.0) return b > std::abs(a) ? JacobiFormCase::case_i : JacobiFormCase::unphysical;
  if (a < 0.0 && b < 0.0) return JacobiFormCase::case_ii;
  return b > std::abs(a) ? JacobiFormCase::case_iii : JacobiFormCase::unphysical;
}

inline std::string to_string(JacobiFormCase c) {
  switch (c) {
    case JacobiFormCase::case_i: return "case_i";
    case JacobiFormCase::case_ii: return "case_ii";
    case JacobiFormCase::case_iii: return "case_iii";
    default: return "unphysical";
  }
}

}  // namespace qhj
