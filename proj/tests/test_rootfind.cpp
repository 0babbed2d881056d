#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "core/rootfind.hpp"

using namespace riemann::rootfind;

namespace {

// Minimal objective over a scalar function with numerically exact derivative
// supplied by the test.
struct Fn {
  std::function<double(double)> f, df;
  int count = 0;
  std::pair<double, double> eval_pair(double x) {
    ++count;
    return {f(x), df(x)};
  }
  double eval_value(double x) {
    ++count;
    return f(x);
  }
  double eval_deriv(double x) {
    ++count;
    return df(x);
  }
  int evals() const { return count; }
};

Fn affine() {
  return {[](double x) { return 2.0 * x - 3.0; }, [](double) { return 2.0; }};
}

// Increasing and concave on (0, inf) with root at 1.
Fn logarithm() {
  return {[](double x) { return std::log(x); }, [](double x) { return 1.0 / x; }};
}

}  // namespace

TEST_CASE("positive Newton solves an affine function in one iteration") {
  Fn obj = affine();
  SolveReport rep = positive_newton(obj, 5.0, 1e-30, {});
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(rep.iterations == 1.0);
  CHECK(rep.function_evals == 2);
}

TEST_CASE("positive Newton terminates with zero iterations at the root") {
  Fn obj = affine();
  SolveReport rep = positive_newton(obj, 1.5, 1e-30, {});
  CHECK(rep.converged);
  CHECK(rep.iterations == 0.0);
  CHECK(rep.function_evals == 1);
}

TEST_CASE("positive Newton is monotone after the clamped first step") {
  Fn obj = logarithm();
  std::vector<double> trace;
  ToleranceSpec tol;
  tol.eps_r = 1e-14;
  SolveReport rep = positive_newton(obj, 4.0, 0.25, tol, &trace);
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.0).epsilon(1e-13));
  REQUIRE(trace.size() >= 3);
  // Concave increasing objective: after the first corrected step every
  // iterate sits below the root and increases toward it.
  for (size_t i = 2; i + 1 < trace.size(); ++i) {
    CHECK(trace[i] <= trace[i + 1]);
    CHECK(trace[i] <= 1.0 + 1e-13);
  }
}

TEST_CASE("positive Newton clamps the first step to the lower bound") {
  // From x0 = 4 the unclamped Newton step is 4 - 4 ln 4 < 0.
  Fn obj = logarithm();
  std::vector<double> trace;
  SolveReport rep = positive_newton(obj, 4.0, 0.5, {}, &trace);
  CHECK(rep.converged);
  REQUIRE(trace.size() >= 2);
  CHECK(trace[1] == 0.5);
}

TEST_CASE("iteration cap raises NonConvergenceError carrying the best iterate") {
  Fn obj = logarithm();
  ToleranceSpec tol;
  tol.eps_r = 0.0;  // unattainable
  tol.max_iter = 5;
  CHECK_THROWS_AS(positive_newton(obj, 3.0, 1e-3, tol), NonConvergenceError);
  Fn obj2 = logarithm();
  try {
    positive_newton(obj2, 3.0, 1e-3, tol);
  } catch (const NonConvergenceError& e) {
    CHECK(e.report.iterations == 5.0);
    CHECK(!e.report.converged);
    CHECK(e.report.root > 0.0);
    CHECK(e.report.final_residual == doctest::Approx(std::log(e.report.root)).epsilon(1e-12));
    CHECK(e.report.function_evals == 6);
  }
}

TEST_CASE("two-step Newton converges with order about 1 + sqrt(2)") {
  // Track the iterate sequence through the residual evaluations.
  struct Probe : Fn {
    std::vector<double> values;
  };
  Fn obj = logarithm();
  ToleranceSpec tol;
  tol.eps_r = 1e-15;
  SolveReport rep = two_step_newton(obj, 2.0, tol);
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.0).epsilon(1e-14));
  // The first iteration is a plain Newton step reusing the initial pair; each
  // later iteration costs one value plus one extra derivative.
  CHECK(rep.function_evals == doctest::Approx(2 * rep.iterations));

  // Order estimate from three consecutive errors on a fresh run with the
  // stagnation criterion disabled via a tiny residual tolerance.
  std::vector<double> errs;
  double x = 2.0;
  double dmid = 0.5;  // 1/x at x0
  for (int k = 0; k < 4; ++k) {
    const double fx = std::log(x);
    const double x_half = x - fx / dmid;
    dmid = 1.0 / (0.5 * (x + x_half));
    x = x - fx / dmid;
    errs.push_back(std::abs(x - 1.0));
  }
  const double p = std::log(errs[2] / errs[1]) / std::log(errs[1] / errs[0]);
  CHECK(p > 2.0);
  CHECK(p < 2.9);
}

TEST_CASE("Ostrowski counts half iterations and can stop at the half step") {
  Fn obj = affine();
  SolveReport rep = ostrowski(obj, 5.0, {});
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(rep.iterations == 0.5);  // the Newton half-step is exact for affine psi

  Fn obj2 = logarithm();
  SolveReport rep2 = ostrowski(obj2, 1.5, {});
  CHECK(rep2.converged);
  CHECK(rep2.root == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fmod(rep2.iterations, 0.5) == 0.0);
}

TEST_CASE("Ostrowski-Newton falls back to guarded Newton after one iteration") {
  Fn obj = logarithm();
  ToleranceSpec tol;
  tol.eps_r = 1e-14;
  SolveReport rep = ostrowski_newton(obj, 3.0, 0.1, tol);
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bounding polynomials keep a nested bracket around the root") {
  // Concave increasing objective mirroring the depth/pressure functions.
  Fn obj = {[](double x) { return std::sqrt(x) - 2.0; },
            [](double x) { return 0.5 / std::sqrt(x); }};
  std::vector<std::pair<double, double>> trace;
  ToleranceSpec tol;
  tol.eps_r = 1e-13;
  SolveReport rep = bounding_polynomials(obj, 1.0, 25.0, tol, &trace);
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(4.0).epsilon(1e-12));
  for (size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].first <= 4.0 + 1e-12);
    CHECK(trace[i].second >= 4.0 - 1e-12);
    if (i > 0) {
      CHECK(trace[i].first >= trace[i - 1].first);
      CHECK(trace[i].second <= trace[i - 1].second);
    }
  }
}

TEST_CASE("bounding polynomials report failure when the bracket collapses early") {
  Fn obj = {[](double x) { return std::sqrt(x) - 2.0; },
            [](double x) { return 0.5 / std::sqrt(x); }};
  ToleranceSpec tol;
  tol.eps_r = 0.0;
  tol.max_iter = 50;
  CHECK_THROWS_AS(bounding_polynomials(obj, 1.0, 25.0, tol), NonConvergenceError);
}

TEST_CASE("stagnation termination fires on a converged pair of iterates") {
  ToleranceSpec tol;
  tol.mode = TerminationMode::Stagnation;
  tol.eps_s = 1e-12;
  Fn obj = logarithm();
  SolveReport rep = positive_newton(obj, 3.0, 0.1, tol);
  CHECK(rep.converged);
  CHECK(rep.root == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scaled residual termination uses the initial residual") {
  ToleranceSpec tol;
  tol.mode = TerminationMode::ScaledResidual;
  tol.eps_r1 = 1e-10;
  tol.eps_r2 = 0.0;
  Fn obj = logarithm();
  SolveReport rep = positive_newton(obj, 3.0, 0.1, tol);
  CHECK(rep.converged);
  CHECK(std::abs(rep.final_residual) < std::abs(std::log(3.0)) * 1e-10);
}
