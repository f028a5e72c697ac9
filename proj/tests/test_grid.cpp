#include <doctest.h>

#include <array>
#include <cmath>

#include "qhj/grid.hpp"
#include "qhj/verify.hpp"

using namespace qhj;

namespace {

const PotentialSpec morse161 = GeneralizedMorse{1.0, 6.0, 1.0};
const PotentialSpec pt111 = PoschlTeller{1.0, 1.0, 1.0};

// Plain Jacobi rotation eigensolver for small dense symmetric matrices;
// the independent check on the Sturm counting.
template <int N>
std::array<double, N> jacobi_eigenvalues(std::array<std::array<double, N>, N> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < N; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < N; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, N> ev;
  for (int i = 0; i < N; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

TEST_CASE("sturm count equals the exact eigenvalue count on random tridiagonals") {
  Rng rng(default_seed());
  constexpr int N = 8;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> diag(N);
    const double off = rng.uniform(-2.0, 2.0);
    std::array<std::array<double, N>, N> dense{};
    for (int i = 0; i < N; ++i) {
      diag[i] = rng.uniform(-3.0, 3.0);
      dense[i][i] = diag[i];
      if (i + 1 < N) dense[i][i + 1] = dense[i + 1][i] = off;
    }
    const auto ev = jacobi_eigenvalues<N>(dense);
    for (int t = 0; t < 10; ++t) {
      const double thr = rng.uniform(-6.0, 6.0);
      int exact = 0;
      for (double e : ev)
        if (e < thr) ++exact;
      CHECK(detail::sturm_count_below(diag, off, thr) == exact);
    }
  }
}

TEST_CASE("grid_eigenvalues: particle in a box") {
  // V = 0 on [0, pi] with Dirichlet walls: 1, 4, 9 up to O(h^2)
  const PotentialSpec free_particle = GeneralizedMorse{1e-30, 0.0, 1.0};
  const GridOracleConfig cfg{0.0, M_PI, 4000};
  const auto ev = grid_eigenvalues(free_particle, cfg, 3);
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0] - 1.0) < 1e-5);
  CHECK(std::abs(ev[1] - 4.0) < 1e-4);
  CHECK(std::abs(ev[2] - 9.0) < 1e-3);
}

TEST_CASE("grid_eigenvalues: Morse spectrum on the standard box") {
  const GridOracleConfig cfg{-5.0, 25.0, 8000};
  const auto ev = grid_eigenvalues(morse161, cfg, 3);
  CHECK(std::abs(ev[0] + 6.25) < 1e-3);
  CHECK(std::abs(ev[1] + 2.25) < 1e-3);
  CHECK(std::abs(ev[2] + 0.25) < 1e-3);
}

TEST_CASE("grid_eigenvalues: Poschl-Teller ground state") {
  const auto ev = grid_eigenvalues(pt111, default_grid(pt111), 1);
  CHECK(std::abs(ev[0] + 0.3819660112501051) < 1e-3);
}

TEST_CASE("grid_eigenvalues: domain and symmetry guards") {
  CHECK_THROWS_AS(grid_eigenvalues(pt111, GridOracleConfig{-8.0, 8.0, 2000}, 1),
                  InsufficientDomain);
  const PotentialSpec complex_morse = GeneralizedMorse{1.0, Complex(2.0, 1.0), 1.0};
  CHECK_THROWS_AS(grid_eigenvalues(complex_morse, default_grid(complex_morse), 1), NotHermitian);
}

TEST_CASE("grid_residual: second-order convergence on Morse eigenpairs") {
  const RiccatiProblem r = transform(morse161);
  const GridOracleConfig fine{-5.0, 30.0, 8000};
  const GridOracleConfig coarse{-5.0, 30.0, 4000};
  for (int n : {0, 1, 2}) {
    const auto sel = quantize(r, n);
    REQUIRE(sel.size() == 1);
    const EigenfunctionForm ef = build_eigenfunction(r, sel[0]);
    const double rf = grid_residual(morse161, fine, ef, sel[0].energy);
    const double rc = grid_residual(morse161, coarse, ef, sel[0].energy);
    CHECK(rf < 1e-4);
    CHECK(rc / rf > 3.2);
    CHECK(rc / rf < 4.8);
  }
}

TEST_CASE("grid_residual: wrong energy gives an h-independent residual of size |dE|") {
  const RiccatiProblem r = transform(morse161);
  const auto sel = quantize(r, 0);
  const EigenfunctionForm ef = build_eigenfunction(r, sel[0]);
  const double r1 = grid_residual(morse161, {-5.0, 30.0, 4000}, ef, Complex(-6.0));
  const double r2 = grid_residual(morse161, {-5.0, 30.0, 8000}, ef, Complex(-6.0));
  CHECK(r1 > 1e-1);
  CHECK(std::abs(r1 - 0.25) < 0.01);
  CHECK(std::abs(r1 - r2) < 1e-3);
}

TEST_CASE("grid residual of the oracle eigenvector at its own eigenvalue") {
  const GridOracleConfig cfg{-5.0, 25.0, 2000};
  const auto t = detail::real_discretization(morse161, cfg);
  const double e0 = detail::bisect_eigenvalue(t.diag, t.off, 0);
  const auto v = detail::inverse_iteration_vector(t.diag, t.off, e0);
  double rnorm = 0.0, vnorm = 0.0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    double hv = (t.diag[i] - e0) * v[i];
    if (i > 0) hv += t.off * v[i - 1];
    if (i + 1 < n) hv += t.off * v[i + 1];
    rnorm += hv * hv;
    vnorm += v[i] * v[i];
  }
  CHECK(std::sqrt(rnorm / vnorm) < 1e-9);
}

TEST_CASE("det_newton_eigen agrees with Sturm bisection") {
  const GridOracleConfig cfg{-5.0, 25.0, 2000};
  const auto ev = grid_eigenvalues(morse161, cfg, 3);
  const Complex refined = det_newton_eigen(morse161, cfg, Complex(-6.3));
  CHECK(std::abs(refined - Complex(ev[0])) < 1e-8);
  CHECK(std::abs(refined - Complex(-6.25)) < 1e-3);

  // the three lowest states cross-validate
  for (int j = 0; j < 3; ++j) {
    const Complex z = det_newton_eigen(morse161, cfg, Complex(ev[j] + 1e-4));
    CHECK(std::abs(z - Complex(ev[j])) < 1e-8);
  }
}

TEST_CASE("det_newton_eigen: a far seed lands on a genuine eigenvalue or fails") {
  const GridOracleConfig cfg{-5.0, 25.0, 2000};
  const auto t = detail::real_discretization(morse161, cfg);
  try {
    const Complex z = det_newton_eigen(morse161, cfg, Complex(100.0));
    // Newton converged: the result must sit inside the real spectrum
    CHECK(std::abs(z.imag()) < 1e-6);
    const double window = 1e-5 * (1.0 + std::abs(z.real()));
    const int below = detail::sturm_count_below(t.diag, t.off, z.real() - window);
    const int above = detail::sturm_count_below(t.diag, t.off, z.real() + window);
    CHECK(above - below >= 1);
  } catch (const NoConvergence&) {
    // acceptable outcome per contract
  }
}

TEST_CASE("det_newton_eigen on the complexified Morse family") {
  // v1 = (1+2i)^2, v2 = 7(1+2i), alpha = 1: displayed spectrum -(n - 3)^2
  const Complex ab(1.0, 2.0);
  const PotentialSpec p = GeneralizedMorse{ab * ab, 7.0 * ab, 1.0};
  const GridOracleConfig cfg{-5.0, 30.0, 4000};
  const Complex z = det_newton_eigen(p, cfg, Complex(-9.0, 0.0));
  CHECK(std::abs(z - Complex(-9.0)) < 1e-3);
}

TEST_CASE("pipeline_levels: residual selection on the non-Hermitian family") {
  const Complex ab(1.0, 2.0);
  const PotentialSpec p = GeneralizedMorse{ab * ab, 7.0 * ab, 1.0};
  const RiccatiProblem r = transform(p);
  const auto pls = pipeline_levels(p, r, 0, BranchPolicy::automatic, default_grid(p));
  int selected = 0;
  for (const auto& pl : pls)
    if (pl.selected) {
      ++selected;
      CHECK(std::abs(pl.level.energy - Complex(-9.0)) < 1e-10);
    }
  CHECK(selected == 1);
}
