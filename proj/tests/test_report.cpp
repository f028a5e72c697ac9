#include <doctest.h>

#include <cmath>

#include "qhj/verify.hpp"

using namespace qhj;

namespace {
const PotentialSpec morse161 = GeneralizedMorse{1.0, 6.0, 1.0};
const PotentialSpec pt111 = PoschlTeller{1.0, 1.0, 1.0};
}  // namespace

TEST_CASE("adjudicate: real Morse agrees across all three sources") {
  const GridOracleConfig cfg{-5.0, 30.0, 8000};
  const auto rep = adjudicate(morse161, 2, cfg, 42);
  CHECK_FALSE(rep.any_mismatch);
  const auto& levels = rep.data.at("levels");
  REQUIRE(levels.size() == 3);
  for (const auto& lvl : levels) {
    CHECK(lvl.at("verdicts").at("pipeline_vs_oracle") == "match");
    CHECK(lvl.at("verdicts").at("eq22_vs_oracle") == "match");
    CHECK(lvl.at("verdicts").at("eq22_vs_pipeline") == "match");
    // every selected candidate carries a second-order convergence ratio
    for (const auto& cand : lvl.at("pipeline")) {
      if (!cand.at("selected").get<bool>()) continue;
      const double ratio = cand.at("checks").at("convergence_ratio").get<double>();
      CHECK(ratio > 3.2);
      CHECK(ratio < 4.8);
      CHECK(cand.at("checks").at("riccati_residual").get<double>() < 1e-8);
      CHECK(cand.at("checks").at("quantization_consistency").get<double>() < 1e-10);
    }
  }
}

TEST_CASE("adjudicate: Poschl-Teller flags the quoted spectrum") {
  const auto rep = adjudicate(pt111, 0, default_grid(pt111), 42);
  CHECK(rep.any_mismatch);
  const auto& lvl = rep.data.at("levels").at(0);
  CHECK(lvl.at("verdicts").at("pipeline_vs_oracle") == "match");
  CHECK(lvl.at("verdicts").at("eq48[-]_vs_oracle") == "mismatch");
  CHECK(lvl.at("verdicts").at("eq48[+]_vs_oracle") == "mismatch");
  // quoted minus branch evaluates to exactly -1
  const auto printed = lvl.at("printed").at("eq48");
  bool saw_minus_one = false;
  for (const auto& e : printed)
    if (std::abs(e.at(0).get<double>() + 1.0) < 1e-12) saw_minus_one = true;
  CHECK(saw_minus_one);
  CHECK(std::abs(lvl.at("oracle").get<double>() + 0.381966) < 1e-3);
}

TEST_CASE("adjudicate: pure imaginary parameters and the reality claim") {
  const PotentialSpec p = PoschlTeller{Complex(0.0, 2.0), Complex(0.0, 3.0), 1.0};
  const auto rep = adjudicate(p, 1, default_grid(p), 42);
  const auto& claims = rep.data.at("claims");

  const auto& reality = claims.at("reality_condition");
  CHECK(reality.at("predicate_holds").get<bool>());
  CHECK(reality.at("max_abs_im_pipeline_energy").get<double>() < 1e-8);
  CHECK(reality.at("verdict") == "match");

  const auto& same = claims.at("same_as_eq48");
  CHECK(same.at("verdict_pipeline_invariance") == "match");
  CHECK(same.at("max_delta_pipeline").get<double>() < 1e-8);
}

TEST_CASE("adjudicate: reality predicate violations show up in the spectrum") {
  // v0 off the real ray of q: predicate false and complex pipeline energies
  const PotentialSpec p = PoschlTeller{Complex(1.0, 2.0), Complex(2.0, 0.5), 1.0};
  const auto rep = adjudicate(p, 0, default_grid(p), 42);
  const auto& reality = rep.data.at("claims").at("reality_condition");
  CHECK_FALSE(reality.at("predicate_holds").get<bool>());
  CHECK(reality.at("verdict") == "match");  // predicate and spectrum agree: both non-real
  CHECK(reality.at("max_abs_im_pipeline_energy").get<double>() > 1e-8);
}

TEST_CASE("adjudicate: alpha^4 vs alpha^2 prefactor is recorded on the special family") {
  const PotentialSpec p = GeneralizedMorse{-1.0, 2.0, Complex(0.0, 2.0)};
  const auto rep = adjudicate(p, 1, default_grid(p), 42);
  const auto& claim = rep.data.at("claims").at("eq34_vs_eq35");
  // the general formula evaluated at the special parameterization matches
  CHECK(claim.at("verdict_eq22_reproduces_eq35") == "match");
  // eq34 carries the alpha^4 prefactor: off by exactly alpha^2 = 4 here
  CHECK(claim.at("eq34_over_eq35_minus_alpha2").get<double>() < 1e-10);
}

TEST_CASE("adjudicate: displayed eigenfunction forms leave large residuals") {
  const GridOracleConfig cfg{-5.0, 30.0, 4000};
  const auto rep = adjudicate(morse161, 1, cfg, 42);
  const auto& claim = rep.data.at("claims").at("displayed_laguerre_form_residual");
  // at n = 1 neither displayed exponent sign solves the equation
  const auto& n1 = claim.at("n1");
  CHECK(n1.at("plus").get<double>() > 1e-2);
  CHECK(n1.at("minus").get<double>() > 1e-2);

  // the displayed Jacobi form is likewise carried through and reported for
  // all four sign pairs
  const auto pt_rep = adjudicate(pt111, 0, default_grid(pt111), 42);
  const auto& jf = pt_rep.data.at("claims").at("displayed_jacobi_form_residual").at("n0");
  for (const char* key : {"pp", "pm", "mp", "mm"}) {
    REQUIRE(jf.contains(key));
    CHECK(jf.at(key).get<double>() >= 0.0);
  }
}

TEST_CASE("adjudicate: level objects carry the selected candidate's checks") {
  const GridOracleConfig cfg{-5.0, 30.0, 2000};
  const auto rep = adjudicate(morse161, 0, cfg, 42);
  const auto& checks = rep.data.at("levels").at(0).at("checks");
  CHECK(checks.contains("riccati_residual"));
  CHECK(checks.contains("residue_delta"));
  CHECK(checks.contains("action_variable"));
}

TEST_CASE("adjudicate: byte-identical under a fixed seed") {
  const GridOracleConfig cfg{-5.0, 30.0, 2000};
  const auto a = adjudicate(morse161, 1, cfg, 42);
  const auto b = adjudicate(morse161, 1, cfg, 42);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("adjudicate: PT-symmetric Morse has no grid verdicts") {
  const PotentialSpec p = GeneralizedMorse{1.0, 2.0, Complex(0.0, 1.0)};
  const auto rep = adjudicate(p, 1, default_grid(p), 42);
  CHECK(rep.data.at("symmetry") == "pt_symmetric");
  for (const auto& lvl : rep.data.at("levels")) {
    CHECK(lvl.at("oracle").is_null());
    CHECK(lvl.at("verdicts").at("pipeline_vs_oracle") == "not_applicable");
    // candidates are retained for the record
    CHECK(lvl.at("pipeline").size() >= 1);
  }
}
