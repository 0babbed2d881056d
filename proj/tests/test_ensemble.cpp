#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/ensemble.hpp"
#include "core/solver.hpp"

using namespace riemann;

TEST_CASE("ensembles are reproducible from the seed") {
  ensemble::GenerateSpec spec;
  spec.count = 500;
  spec.seed = 42;
  const auto a = ensemble::generate_swe(spec);
  const auto b = ensemble::generate_swe(spec);
  REQUIRE(a.problems.size() == 500);
  for (size_t i = 0; i < a.problems.size(); ++i) {
    CHECK(a.problems[i].left.h == b.problems[i].left.h);
    CHECK(a.problems[i].right.u == b.problems[i].right.u);
    CHECK(a.weak[i] == b.weak[i]);
  }
  spec.seed = 43;
  const auto c = ensemble::generate_swe(spec);
  CHECK(a.problems[0].left.h != c.problems[0].left.h);
}

TEST_CASE("draws respect the documented ranges and the weak fraction") {
  ensemble::GenerateSpec spec;
  spec.count = 4000;
  spec.seed = 7;
  const auto set = ensemble::generate_swe(spec);
  size_t weak_count = 0;
  for (size_t i = 0; i < set.problems.size(); ++i) {
    const auto& rp = set.problems[i];
    if (set.weak[i]) {
      ++weak_count;
      CHECK(rp.left.h >= 0.1);
      CHECK(rp.left.h <= 1.0);
      CHECK(rp.right.h >= 0.1);
      CHECK(rp.right.h <= 1.0);
      CHECK(rp.left.u == 0.0);
      CHECK(rp.right.u == 0.0);
    } else {
      CHECK(rp.left.h >= 1e-4);
      CHECK(rp.left.h <= 1e4);
      CHECK(rp.left.u >= 1e-2);
      CHECK(rp.left.u <= 1e2);
      CHECK(rp.right.u <= -1e-2);
      CHECK(rp.right.u >= -1e2);
    }
  }
  const double frac = double(weak_count) / double(spec.count);
  CHECK(frac > 0.77);
  CHECK(frac < 0.83);
}

TEST_CASE("Euler draws respect the documented ranges") {
  ensemble::GenerateSpec spec;
  spec.count = 2000;
  spec.seed = 11;
  const auto set = ensemble::generate_euler(spec);
  for (size_t i = 0; i < set.problems.size(); ++i) {
    const auto& rp = set.problems[i];
    CHECK(rp.left.rho > 0.0);
    CHECK(rp.right.rho <= 0.9);
    if (set.weak[i]) {
      CHECK(rp.left.p >= 0.1);
      CHECK(rp.left.p <= 1.0);
      CHECK(rp.left.rho >= 0.1);
      CHECK(rp.left.u == 0.0);
    } else {
      CHECK(rp.left.p >= 1e-4);
      CHECK(rp.left.p <= 1e4);
      CHECK(rp.left.rho >= 0.01);
      CHECK(rp.left.u > 0.0);
      CHECK(rp.right.u < 0.0);
    }
  }
}

TEST_CASE("every ensemble member contains at least one shock") {
  ensemble::GenerateSpec spec;
  spec.count = 1000;
  spec.seed = 19;
  const auto set = ensemble::generate_swe(spec);
  for (const auto& rp : set.problems) {
    const double h_min = std::min(rp.left.h, rp.right.h);
    CHECK(swe::depth_function(h_min, rp) <= 0.0);
  }
  const auto eset = ensemble::generate_euler(spec);
  for (const auto& rp : eset.problems) {
    const double p_min = std::min(rp.left.p, rp.right.p);
    CHECK(euler::pressure_function(p_min, rp) <= 0.0);
  }
}

TEST_CASE("the bisection oracle agrees with the iterative solver") {
  ensemble::GenerateSpec spec;
  spec.count = 400;
  spec.seed = 23;
  const auto set = ensemble::generate_swe(spec);
  for (const auto& rp : set.problems) {
    const double h = ensemble::oracle_root(rp);
    CHECK(std::abs(swe::depth_function(h, rp)) <
          1e-9 * std::abs(swe::depth_function_derivatives(h, rp).d1) * h + 1e-280);
    const auto sol = solver::solve_star(rp, GuessKind::SS, SchemeKind::PositiveNewton);
    CHECK(sol.star.h_star == doctest::Approx(h).epsilon(1e-10));
  }
  const auto eset = ensemble::generate_euler(spec);
  for (const auto& rp : eset.problems) {
    const double p = ensemble::oracle_root(rp);
    const auto sol = solver::solve_star(rp, GuessKind::SS, SchemeKind::PositiveNewton);
    CHECK(sol.star.p_star == doctest::Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("guess benchmark reports finite errors and the expected ordering") {
  ensemble::GenerateSpec spec;
  spec.count = 3000;
  spec.seed = 29;
  const auto set = ensemble::generate_swe(spec);
  const auto oracle = ensemble::compute_oracles(set);
  const auto rows = ensemble::bench_guesses(
      set, oracle, {GuessKind::CC, GuessKind::SS, GuessKind::AV, GuessKind::HLLE});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.arie_weak));
    CHECK(std::isfinite(r.arie_strong));
    CHECK(r.arie_weak >= 0.0);
  }
  // convex combination beats two-shock beats arithmetic average on weak waves
  CHECK(rows[0].arie_weak < rows[1].arie_weak);
  CHECK(rows[1].arie_weak < rows[2].arie_weak);
  CHECK(rows[2].arie_weak < rows[3].arie_weak);
  // CC pays for its accuracy with depth-function evaluations
  CHECK(rows[0].mean_phi_evals > 0.0);
  CHECK(rows[2].mean_phi_evals == 0.0);
}

TEST_CASE("scheme benchmark solves the whole set and tracks accuracy") {
  ensemble::GenerateSpec spec;
  spec.count = 1500;
  spec.seed = 31;
  const auto set = ensemble::generate_swe(spec);
  const auto oracle = ensemble::compute_oracles(set);
  rootfind::ToleranceSpec tol;
  const auto rows = ensemble::bench_schemes(
      set, oracle,
      {{GuessKind::SS, SchemeKind::PositiveNewton}, {GuessKind::SS, SchemeKind::Ostrowski}}, tol);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.solved + r.failures == spec.count);
    CHECK(r.failures == 0);
    CHECK(r.max_rel_error < 1e-10);
    CHECK(r.mean_iterations > 0.0);
    CHECK(r.mean_evals > r.mean_iterations);
    CHECK(r.seconds > 0.0);
  }
  // Ostrowski needs fewer iterations than Newton from the same guess
  CHECK(rows[1].mean_iterations < rows[0].mean_iterations);
}
