#pragma once

// Generalized Laguerre and Jacobi polynomials for complex parameters and
// arguments, via the standard forward three-term recurrences.  Degrees in
// this project never exceed ~10, so forward recursion is unproblematic.

#include "qhj/polynomial.hpp"
#include "qhj/types.hpp"

namespace qhj {

inline Complex laguerre(int n, Complex a, Complex y) {
  if (n <= 0) return Complex(1.0);
  Complex lm1(1.0);            // L_0
  Complex l = 1.0 + a - y;     // L_1
  for (int k = 1; k < n; ++k) {
    const Complex lp1 = ((2.0 * k + 1.0 + a - y) * l - (double(k) + a) * lm1) / double(k + 1);
    lm1 = l;
    l = lp1;
  }
  return l;
}

inline Complex jacobi(int n, Complex a, Complex b, Complex y) {
  if (n <= 0) return Complex(1.0);
  Complex pm1(1.0);                                    // P_0
  Complex p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * y; // P_1
  for (int k = 2; k <= n; ++k) {
    const Complex s = a + b;
    const Complex c1 = 2.0 * double(k) * (double(k) + s) * (2.0 * double(k) + s - 2.0);
    const Complex c2 = (2.0 * double(k) + s - 1.0) *
                       ((2.0 * double(k) + s) * (2.0 * double(k) + s - 2.0) * y + a * a - b * b);
    const Complex c3 = 2.0 * (double(k) + a - 1.0) * (double(k) + b - 1.0) * (2.0 * double(k) + s);
    const Complex pp1 = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = pp1;
  }
  return p;
}

// Coefficient forms of the same recurrences; used when a closed-form
// comparison eigenfunction needs its polynomial part as a PolynomialC.
inline PolynomialC laguerre_poly(int n, Complex a) {
  PolynomialC lm1 = PolynomialC::one();
  if (n <= 0) return lm1;
  PolynomialC l({1.0 + a, Complex(-1.0)});
  for (int k = 1; k < n; ++k) {
    PolynomialC t = PolynomialC({2.0 * k + 1.0 + a, Complex(-1.0)}) * l - (double(k) + a) * lm1;
    lm1 = l;
    l = (1.0 / double(k + 1)) * t;
  }
  return l;
}

inline PolynomialC jacobi_poly(int n, Complex a, Complex b) {
  PolynomialC pm1 = PolynomialC::one();
  if (n <= 0) return pm1;
  PolynomialC p({0.5 * (a - b), 0.5 * (a + b + 2.0)});
  for (int k = 2; k <= n; ++k) {
    const Complex s = a + b;
    const Complex c1 = 2.0 * double(k) * (double(k) + s) * (2.0 * double(k) + s - 2.0);
    const Complex c3 = 2.0 * (double(k) + a - 1.0) * (double(k) + b - 1.0) * (2.0 * double(k) + s);
    PolynomialC mid({(2.0 * double(k) + s - 1.0) * (a * a - b * b),
                     (2.0 * double(k) + s - 1.0) * (2.0 * double(k) + s) * (2.0 * double(k) + s - 2.0)});
    PolynomialC t = mid * p - c3 * pm1;
    pm1 = p;
    p = (1.0 / c1) * t;
  }
  return p;
}

}  // namespace qhj
