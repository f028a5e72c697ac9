#pragma once

// Polynomial solutions of p2 P'' + p1 P' + p0 P = 0 by linear coefficient
// matching.  The map from the n+1 coefficients of P to the coefficients of
// the residual polynomial is assembled as a dense matrix and its null space
// is computed by Gaussian elimination with column pivoting; a valid
// quantized problem has a one-dimensional null space whose generator has a
// nonzero leading coefficient.

#include <vector>

#include "qhj/polynomial.hpp"
#include "qhj/types.hpp"

namespace qhj {

namespace detail {

// Null space of an m x n complex matrix (row-major).  Returns basis vectors.
inline std::vector<std::vector<Complex>> null_space(std::vector<std::vector<Complex>> a,
                                                    int rows, int cols, double tol) {
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double best_abs = tol;
    for (int i = r; i < rows; ++i) {
      const double v = std::abs(a[i][c]);
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    const Complex piv = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Complex f = a[i][c];
      if (f == Complex(0.0)) continue;
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Complex>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Complex> v(cols, Complex(0.0));
    v[c] = Complex(1.0);
    for (int i = 0; i < static_cast<int>(pivot_col_of_row.size()); ++i)
      v[pivot_col_of_row[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// Residual of substituting P into the ODE, as a polynomial.
inline PolynomialC ode_residual(const PolynomialC& p2, const PolynomialC& p1,
                                const PolynomialC& p0, const PolynomialC& p) {
  return p2 * p.derivative().derivative() + p1 * p.derivative() + p0 * p;
}

inline PolynomialC ode_polynomial_solution(const PolynomialC& p2, const PolynomialC& p1,
                                           const PolynomialC& p0, int n) {
  // Scale the equation so the residual threshold is meaningful.
  double scale = std::max({p2.max_coeff_abs(), p1.max_coeff_abs(), p0.max_coeff_abs()});
  if (scale == 0.0) throw DegenerateSystem("ode_polynomial_solution: zero equation");
  const Complex inv(1.0 / scale);
  const PolynomialC q2 = inv * p2, q1 = inv * p1, q0 = inv * p0;

  const int cols = n + 1;
  const int rows = std::max({q2.degree() + std::max(n - 2, 0), q1.degree() + std::max(n - 1, 0),
                             q0.degree() + n}) + 1;
  std::vector<std::vector<Complex>> m(rows, std::vector<Complex>(cols, Complex(0.0)));
  for (int j = 0; j <= n; ++j) {
    // contribution of the coefficient c_j of y^j in P
    if (j >= 2)
      for (int k = 0; k <= q2.degree(); ++k)
        m[k + j - 2][j] += q2[k] * double(j) * double(j - 1);
    if (j >= 1)
      for (int k = 0; k <= q1.degree(); ++k) m[k + j - 1][j] += q1[k] * double(j);
    for (int k = 0; k <= q0.degree(); ++k) m[k + j][j] += q0[k];
  }

  double mat_scale = 0.0;
  for (const auto& row : m)
    for (const auto& v : row) mat_scale = std::max(mat_scale, std::abs(v));
  const double tol = 1e-9 * std::max(1.0, mat_scale);

  const auto basis = detail::null_space(m, rows, cols, tol);
  if (basis.empty())
    throw NoPolynomialSolution("ode_polynomial_solution: no polynomial of degree " +
                               std::to_string(n));
  if (basis.size() > 1)
    throw DegenerateSystem("ode_polynomial_solution: solution space dimension " +
                           std::to_string(basis.size()));

  PolynomialC p(basis.front());
  double norm = p.max_coeff_abs();
  if (p.degree() != n || std::abs(p.coeffs().back()) < 1e-8 * norm)
    throw NoPolynomialSolution("ode_polynomial_solution: null direction has degree < " +
                               std::to_string(n));
  p = p.monic();

  const PolynomialC res = ode_residual(q2, q1, q0, p);
  if (res.max_coeff_abs() > 1e-10 * std::max(1.0, p.max_coeff_abs()))
    throw NoPolynomialSolution("ode_polynomial_solution: residual check failed");
  return p;
}

}  // namespace qhj
