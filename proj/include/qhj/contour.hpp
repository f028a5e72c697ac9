#pragma once

// Circle-contour utilities: Laurent coefficient extraction and the
// argument-principle winding count.  Uniform-angle trapezoid quadrature is
// spectrally accurate for integrands analytic in a neighbourhood of the
// circle, which is the only regime these are used in.

#include <cmath>

#include "qhj/types.hpp"

namespace qhj {

// c_k = (1/2*pi*i) \oint f(y) / (y - center)^{k+1} dy  on |y-center|=radius.
template <class F>
Complex contour_coefficient(F&& f, Complex center, int k, double radius, int samples = 256) {
  Complex acc(0.0);
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * M_PI * j / samples;
    const Complex e(std::cos(t), std::sin(t));
    const Complex z = center + radius * e;
    const Complex v = f(z);
    if (!is_finite(v)) throw NonFiniteSample("contour_coefficient: f not finite on contour");
    acc += v * std::pow(radius * e, Complex(-double(k)));
  }
  return acc / double(samples);
}

// (1/2*pi*i) \oint f'/f dy, rounded to the nearest integer.  f' is taken by
// tangential central differences; undersampling or a near-zero on the
// contour shows up as a pre-rounding value far from an integer.
template <class F>
int winding_number(F&& f, Complex center, double radius, int samples = 256) {
  const double h = radius * 1e-5;
  Complex acc(0.0);
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * M_PI * j / samples;
    const Complex e(std::cos(t), std::sin(t));
    const Complex z = center + radius * e;
    const Complex step = h * Complex(0.0, 1.0) * e;  // tangent direction
    const Complex fz = f(z);
    const Complex fp = (f(z + step) - f(z - step)) / (2.0 * step);
    if (!is_finite(fz) || !is_finite(fp))
      throw NonFiniteSample("winding_number: f not finite on contour");
    if (fz == Complex(0.0)) throw AmbiguousWinding("winding_number: zero on contour");
    // dz = i * radius * e * dt, and the 1/(2*pi*i) prefactor cancels the i.
    acc += (fp / fz) * radius * e;
  }
  const double w = (acc / double(samples)).real();
  const double rounded = std::round(w);
  if (std::abs(w - rounded) > 0.25)
    throw AmbiguousWinding("winding_number: pre-rounding value " + std::to_string(w) +
                           " not close to an integer");
  return static_cast<int>(rounded);
}

}  // namespace qhj
