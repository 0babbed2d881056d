#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/fv1d.hpp"

using namespace riemann;

namespace {

fv1d::SweSetup uniform_swe() {
  fv1d::SweSetup s;
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.t_end = 0.3;
  s.init = [](double) { return swe::Primitive{1.7, 0.0, 0.0}; };
  return s;
}

}  // namespace

TEST_CASE("a uniform resting state is preserved exactly") {
  for (auto flux : {fv1d::FluxSolver::Exact, fv1d::FluxSolver::Roe, fv1d::FluxSolver::Hlle}) {
    for (int order : {1, 2}) {
      fv1d::Options opt;
      opt.flux = flux;
      opt.order = order;
      const auto res = fv1d::run(uniform_swe(), 40, opt);
      for (const auto& q : res.q) {
        CHECK(q[0] == doctest::Approx(1.7).epsilon(1e-14));
        CHECK(q[1] == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("mass is conserved to rounding with reflecting walls") {
  auto setup = fv1d::swe_blast();
  setup.t_end = 1.0;
  for (auto flux : {fv1d::FluxSolver::Exact, fv1d::FluxSolver::Roe, fv1d::FluxSolver::Hlle}) {
    fv1d::Options opt;
    opt.flux = flux;
    const auto res = fv1d::run(setup, 100, opt);
    CHECK(res.mass_final ==
          doctest::Approx(res.mass_initial).epsilon(1e-12));
    CHECK(res.steps > 0);
    CHECK(res.wall_seconds >= 0.0);
  }
}

TEST_CASE("the shallow water blast keeps positive depth on all solvers") {
  auto setup = fv1d::swe_blast();
  for (auto flux : {fv1d::FluxSolver::Exact, fv1d::FluxSolver::Roe, fv1d::FluxSolver::Hlle}) {
    for (int order : {1, 2}) {
      fv1d::Options opt;
      opt.flux = flux;
      opt.order = order;
      const auto res = fv1d::run(setup, 60, opt);
      for (const auto& q : res.q) {
        CHECK(q[0] > 0.0);
        CHECK(std::isfinite(q[1]));
      }
    }
  }
}

TEST_CASE("the Euler blast runs stably for a short horizon") {
  auto setup = fv1d::euler_blast();
  setup.t_end = 0.01;
  for (auto flux : {fv1d::FluxSolver::Exact, fv1d::FluxSolver::Roe, fv1d::FluxSolver::Hlle}) {
    fv1d::Options opt;
    opt.flux = flux;
    const auto res = fv1d::run(setup, 100, opt);
    double mass = 0.0;
    for (const auto& q : res.q) {
      CHECK(q[0] > 0.0);
      mass += q[0] * res.dx;
    }
    CHECK(mass == doctest::Approx(res.mass_initial).epsilon(1e-12));
  }
}

TEST_CASE("first and second order runs agree on smooth initial data") {
  fv1d::SweSetup s;
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.t_end = 0.05;
  s.init = [](double x) {
    return swe::Primitive{1.0 + 0.1 * std::exp(-50.0 * (x - 0.5) * (x - 0.5)), 0.0, 0.0};
  };
  fv1d::Options o1, o2;
  o1.order = 1;
  o2.order = 2;
  const auto r1 = fv1d::run(s, 200, o1);
  const auto r2 = fv1d::run(s, 200, o2);
  double diff = 0.0;
  for (size_t i = 0; i < r1.q.size(); ++i) diff = std::max(diff, std::abs(r1.q[i][0] - r2.q[i][0]));
  CHECK(diff < 0.02);
  CHECK(diff > 0.0);
}

TEST_CASE("convergence errors vanish against the run itself and shrink with resolution") {
  auto setup = fv1d::swe_blast();
  setup.t_end = 2.0;
  fv1d::Options opt;
  const auto coarse = fv1d::run(setup, 50, opt);
  const auto mid = fv1d::run(setup, 150, opt);
  const auto fine = fv1d::run(setup, 450, opt);
  const auto self = fv1d::convergence_errors({fine}, fine);
  CHECK(self[0].l2 == doctest::Approx(0.0));
  CHECK(self[0].linf == doctest::Approx(0.0));
  const auto rows = fv1d::convergence_errors({coarse, mid}, fine);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].cells == 50);
  CHECK(rows[1].cells == 150);
  CHECK(rows[1].l2 < rows[0].l2);
  // pointwise errors at moving shocks need not shrink monotonically
  CHECK(rows[1].linf > 0.0);
  CHECK(std::isfinite(rows[1].linf));
}

TEST_CASE("exact-solver blast matches the approximate solvers at moderate resolution") {
  auto setup = fv1d::swe_blast();
  setup.t_end = 3.0;
  fv1d::Options exact, roe, hlle;
  exact.flux = fv1d::FluxSolver::Exact;
  roe.flux = fv1d::FluxSolver::Roe;
  hlle.flux = fv1d::FluxSolver::Hlle;
  const auto a = fv1d::run(setup, 150, exact);
  const auto b = fv1d::run(setup, 150, roe);
  const auto c = fv1d::run(setup, 150, hlle);
  double dab = 0.0, dac = 0.0, norm = 0.0;
  for (size_t i = 0; i < a.q.size(); ++i) {
    dab += (a.q[i][0] - b.q[i][0]) * (a.q[i][0] - b.q[i][0]);
    dac += (a.q[i][0] - c.q[i][0]) * (a.q[i][0] - c.q[i][0]);
    norm += a.q[i][0] * a.q[i][0];
  }
  CHECK(std::sqrt(dab / norm) < 0.05);
  CHECK(std::sqrt(dac / norm) < 0.05);
}
