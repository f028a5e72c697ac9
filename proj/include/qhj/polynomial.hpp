#pragma once

// Dense complex polynomials, coefficients stored lowest degree first.
// Degrees stay small (<= ~12) everywhere in this library, so no attempt is
// made at asymptotically clever arithmetic.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qhj/types.hpp"

namespace qhj {

class PolynomialC {
 public:
  PolynomialC() : c_{Complex(0.0)} {}
  PolynomialC(std::initializer_list<Complex> coeffs) : c_(coeffs) { trim(); }
  explicit PolynomialC(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolynomialC one() { return PolynomialC({Complex(1.0)}); }

  const std::vector<Complex>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == Complex(0.0); }

  Complex operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : Complex(0.0);
  }

  Complex eval(Complex y) const {
    Complex acc(0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i];
    return acc;
  }

  PolynomialC derivative() const {
    if (c_.size() <= 1) return PolynomialC();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = double(i) * c_[i];
    return PolynomialC(std::move(d));
  }

  PolynomialC monic() const {
    if (is_zero()) return *this;
    std::vector<Complex> d(c_);
    const Complex lead = d.back();
    for (auto& v : d) v /= lead;
    d.back() = Complex(1.0);  // kill roundoff in the leading coefficient
    return PolynomialC(std::move(d));
  }

  friend PolynomialC operator+(const PolynomialC& a, const PolynomialC& b) {
    std::vector<Complex> d(std::max(a.c_.size(), b.c_.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return PolynomialC(std::move(d));
  }

  friend PolynomialC operator-(const PolynomialC& a, const PolynomialC& b) {
    std::vector<Complex> d(std::max(a.c_.size(), b.c_.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return PolynomialC(std::move(d));
  }

  friend PolynomialC operator*(const PolynomialC& a, const PolynomialC& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialC();
    std::vector<Complex> d(a.c_.size() + b.c_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return PolynomialC(std::move(d));
  }

  friend PolynomialC operator*(Complex s, const PolynomialC& a) {
    std::vector<Complex> d(a.c_);
    for (auto& v : d) v *= s;
    return PolynomialC(std::move(d));
  }

  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  // Durand-Kerner iteration; adequate for the well separated low-degree
  // polynomials produced by the quantization pipeline.
  std::vector<Complex> roots() const {
    const int n = degree();
    if (n < 1 || is_zero()) return {};
    std::vector<Complex> a(c_);
    const Complex lead = a.back();
    for (auto& v : a) v /= lead;
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * M_PI * (k + 0.25) / n;
      z[k] = 0.7 * radius * Complex(std::cos(t), std::sin(t));
    }
    auto eval_monic = [&](Complex y) {
      Complex acc(1.0);
      for (int i = n - 1; i >= 0; --i) acc = acc * y + a[i];
      return acc;
    };
    for (int it = 0; it < 300; ++it) {
      double step = 0.0;
      for (int k = 0; k < n; ++k) {
        Complex den(1.0);
        for (int j = 0; j < n; ++j)
          if (j != k) den *= (z[k] - z[j]);
        const Complex d = eval_monic(z[k]) / den;
        z[k] -= d;
        step = std::max(step, std::abs(d));
      }
      if (step < 1e-14 * radius) break;
    }
    return z;
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == Complex(0.0)) c_.pop_back();
    if (c_.empty()) c_.push_back(Complex(0.0));
  }

  std::vector<Complex> c_;
};

}  // namespace qhj
