#pragma once

// Scalar conventions used throughout: natural units hbar = 2m = 1, so the
// stationary equation reads -psi'' + V psi = E psi and all energies,
// potential parameters and coordinates are complex doubles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace qhj {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal square root of -E.  Candidate energies are always written as
// E = -w^2 with w in the closed right half plane (Im w > 0 on the boundary),
// so this inverts that representation exactly.
inline Complex sqrt_neg(Complex e) { return std::sqrt(-e); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define QHJ_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                               \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}     \
  }

QHJ_DEFINE_ERROR(NonFiniteSample);
QHJ_DEFINE_ERROR(AmbiguousWinding);
QHJ_DEFINE_ERROR(NoPolynomialSolution);
QHJ_DEFINE_ERROR(DegenerateSystem);
QHJ_DEFINE_ERROR(DegenerateBalance);
QHJ_DEFINE_ERROR(PoleOfPotential);
QHJ_DEFINE_ERROR(InvalidPotential);
QHJ_DEFINE_ERROR(NotHermitian);
QHJ_DEFINE_ERROR(NoBoundState);
QHJ_DEFINE_ERROR(EvaluationAtPole);
QHJ_DEFINE_ERROR(EvaluationAtNode);
QHJ_DEFINE_ERROR(InsufficientDomain);
QHJ_DEFINE_ERROR(NoConvergence);
QHJ_DEFINE_ERROR(ContourCollision);
QHJ_DEFINE_ERROR(UnknownFormula);

#undef QHJ_DEFINE_ERROR

// Deterministic uniform sampling.  std::uniform_real_distribution is
// implementation defined, so the 53-bit mantissa mapping is done by hand;
// reports must be reproducible bit for bit under a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a, double b) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }

  Complex annulus(double r_min, double r_max) {
    const double r = uniform(r_min, r_max);
    const double t = uniform(0.0, 2.0 * M_PI);
    return Complex(r * std::cos(t), r * std::sin(t));
  }

 private:
  std::mt19937_64 eng_;
};

// All sampling seeds default to QHJ_SEED (42 when unset).
inline std::uint64_t default_seed() {
  if (const char* s = std::getenv("QHJ_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return static_cast<std::uint64_t>(v);
  }
  return 42;
}

}  // namespace qhj
