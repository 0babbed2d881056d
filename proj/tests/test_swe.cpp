#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/swe.hpp"

using namespace riemann;

namespace {

swe::RiemannProblem dam_break() {
  return {{2.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {1.0}};
}

swe::RiemannProblem mixed() {
  return {{1.2, 0.6, 0.0}, {0.8, -0.3, 0.0}, {9.8}};
}

swe::RiemannProblem colliding() {
  return {{0.3, 4.0, 0.0}, {0.25, -4.0, 0.0}, {1.0}};
}

double root_of(const swe::RiemannProblem& rp) {
  // Plain bisection, independent of the iterative machinery under test.
  double lo = 1e-14, hi = 2.0 * std::max(rp.left.h, rp.right.h) + 10.0;
  while (swe::depth_function(hi, rp) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (swe::depth_function(mid, rp) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("wave function matches high precision reference values") {
  const double h0 = 1.3, g = 1.7;
  // rarefaction branch
  CHECK(swe::wave_function(0.4, h0, g) == doctest::Approx(-1.3239714992166369).epsilon(1e-15));
  CHECK(swe::wave_function_d1(0.4, h0, g) == doctest::Approx(2.0615528128088303).epsilon(1e-15));
  CHECK(swe::wave_function_d2(0.4, h0, g) == doctest::Approx(-2.5769410160110378).epsilon(1e-15));
  CHECK(swe::wave_function_d3(0.4, h0, g) == doctest::Approx(9.6635288100413919).epsilon(1e-15));
  // junction
  CHECK(swe::wave_function(h0, h0, g) == 0.0);
  CHECK(swe::wave_function_d1(h0, h0, g) == doctest::Approx(1.1435437497937312).epsilon(1e-15));
  // shock branch
  CHECK(swe::wave_function(2.9, h0, g) == doctest::Approx(1.5569813683639123).epsilon(1e-15));
  CHECK(swe::wave_function_d1(2.9, h0, g) == doctest::Approx(0.89002321652165348).epsilon(1e-15));
  CHECK(swe::wave_function_d2(2.9, h0, g) == doctest::Approx(-0.050993332251707144).epsilon(1e-14));
  CHECK(swe::wave_function_d3(2.9, h0, g) == doctest::Approx(0.048314789794064998).epsilon(1e-13));
}

TEST_CASE("wave function branches join continuously at h0") {
  const double h0 = 0.37, g = 9.8, d = 1e-9;
  CHECK(swe::wave_function(h0 - d, h0, g) ==
        doctest::Approx(swe::wave_function(h0 + d, h0, g)).epsilon(1e-7));
  CHECK(swe::wave_function_d1(h0 - d, h0, g) ==
        doctest::Approx(swe::wave_function_d1(h0 + d, h0, g)).epsilon(1e-6));
}

TEST_CASE("depth function derivatives match central differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    swe::RiemannProblem rp{{std::pow(10.0, U(rng)), U(rng), 0.0},
                           {std::pow(10.0, U(rng)), U(rng), 0.0},
                           {1.0}};
    const double h = std::pow(10.0, U(rng));
    const double d = h * 1e-6;
    const auto der = swe::depth_function_derivatives(h, rp);
    const double fd1 = (swe::depth_function(h + d, rp) - swe::depth_function(h - d, rp)) / (2 * d);
    const double d2 = h * 1e-4;  // wider step: the second difference is roundoff-limited
    const double fd2 = (swe::depth_function(h + d2, rp) - 2 * swe::depth_function(h, rp) +
                        swe::depth_function(h - d2, rp)) /
                       (d2 * d2);
    CHECK(der.d1 == doctest::Approx(fd1).epsilon(1e-6));
    CHECK(der.d2 == doctest::Approx(fd2).epsilon(1e-4));
  }
}

TEST_CASE("depth function derivative signs: increasing, concave, convex third") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    swe::RiemannProblem rp{{std::pow(10.0, U(rng)), U(rng), 0.0},
                           {std::pow(10.0, U(rng)), U(rng), 0.0},
                           {1.0}};
    const auto der = swe::depth_function_derivatives(std::pow(10.0, U(rng)), rp);
    CHECK(der.d1 > 0.0);
    CHECK(der.d2 < 0.0);
    CHECK(der.d3 > 0.0);
  }
}

TEST_CASE("depth function values match high precision references") {
  const auto rp = mixed();
  CHECK(swe::depth_function(0.9, rp) == doctest::Approx(-1.4787354572932568).epsilon(1e-14));
  CHECK(swe::depth_function(1.5, rp) == doctest::Approx(2.0585343403422948).epsilon(1e-14));
  const auto [phi, dphi] = swe::depth_function_pair(1.5, rp);
  CHECK(phi == doctest::Approx(2.0585343403422948).epsilon(1e-14));
  CHECK(dphi == doctest::Approx(swe::depth_function_derivatives(1.5, rp).d1).epsilon(1e-15));
}

TEST_CASE("star state of the dam break matches the reference") {
  const auto rp = dam_break();
  const double h = root_of(rp);
  CHECK(h == doctest::Approx(1.4538408923745728).epsilon(1e-13));
  CHECK(swe::u_star_from_h(h, rp) == doctest::Approx(0.41692063097548261).epsilon(1e-12));
  const auto star = swe::star_state_from_h(h, rp);
  CHECK(star.left_wave == swe::WaveType::Rarefaction);
  CHECK(star.right_wave == swe::WaveType::Shock);
}

TEST_CASE("star state of the mixed and colliding problems") {
  CHECK(root_of(mixed()) == doctest::Approx(1.1359725509680379).epsilon(1e-13));
  CHECK(swe::u_star_from_h(root_of(mixed()), mixed()) ==
        doctest::Approx(0.7854817406103854).epsilon(1e-12));
  CHECK(root_of(colliding()) == doctest::Approx(3.1090023878245376).epsilon(1e-13));
  CHECK(swe::u_star_from_h(root_of(colliding()), colliding()) ==
        doctest::Approx(0.20265891512245931).epsilon(1e-11));
}

TEST_CASE("two-rarefaction depth bounds the root from above") {
  for (const auto& rp : {dam_break(), mixed(), colliding()}) {
    CHECK(swe::h_two_rarefaction(rp) >= root_of(rp) * (1.0 - 1e-13));
    // it is exact when both waves really are rarefactions
  }
  swe::RiemannProblem rr{{1.0, -0.5, 0.0}, {1.0, 0.5, 0.0}, {1.0}};
  CHECK(swe::h_two_rarefaction(rr) == doctest::Approx(root_of(rr)).epsilon(1e-12));
}

TEST_CASE("positivity check flags strong expansion as dry") {
  swe::RiemannProblem dry{{1.0, -5.0, 0.0}, {1.0, 5.0, 0.0}, {1.0}};
  CHECK(!swe::check_depth_positivity(dry));
  CHECK(swe::check_depth_positivity(dam_break()));
}

TEST_CASE("validation rejects non-physical inputs") {
  swe::RiemannProblem bad = dam_break();
  bad.left.h = -1.0;
  CHECK_THROWS_AS(swe::validate(bad), std::domain_error);
  bad = dam_break();
  bad.params.g = 0.0;
  CHECK_THROWS_AS(swe::validate(bad), std::domain_error);
  bad = dam_break();
  bad.right.u = std::nan("");
  CHECK_THROWS_AS(swe::validate(bad), std::domain_error);
}

TEST_CASE("conserved and primitive conversions round trip") {
  swe::Primitive w{0.7, -1.3, 0.4};
  const auto q = swe::to_conserved(w);
  CHECK(q.h == doctest::Approx(0.7));
  CHECK(q.hu == doctest::Approx(-0.91));
  CHECK(q.hv == doctest::Approx(0.28));
  const auto w2 = swe::to_primitive(q);
  CHECK(w2.u == doctest::Approx(w.u).epsilon(1e-15));
  CHECK(w2.v == doctest::Approx(w.v).epsilon(1e-15));
}

TEST_CASE("flux matches the analytic expression") {
  swe::Primitive w{0.9, 1.1, -0.2};
  const auto f = swe::flux(swe::to_conserved(w), {9.8});
  CHECK(f.h == doctest::Approx(0.9 * 1.1).epsilon(1e-15));
  CHECK(f.hu == doctest::Approx(0.9 * 1.1 * 1.1 + 0.5 * 9.8 * 0.81).epsilon(1e-14));
  CHECK(f.hv == doctest::Approx(0.9 * 1.1 * -0.2).epsilon(1e-14));
}

TEST_CASE("sampled solution is constant outside the wave fan") {
  const auto rp = dam_break();
  const auto star = swe::star_state_from_h(root_of(rp), rp);
  const auto wl = swe::sample_solution(star, rp, -10.0);
  CHECK(wl.h == doctest::Approx(rp.left.h).epsilon(1e-14));
  CHECK(wl.u == doctest::Approx(rp.left.u).epsilon(1e-14));
  const auto wr = swe::sample_solution(star, rp, 10.0);
  CHECK(wr.h == doctest::Approx(rp.right.h).epsilon(1e-14));
}

TEST_CASE("sampled solution honors the star region and contact") {
  const auto rp = dam_break();
  const auto star = swe::star_state_from_h(root_of(rp), rp);
  const auto w = swe::sample_solution(star, rp, star.u_star * 0.5);
  CHECK(w.h == doctest::Approx(star.h_star).epsilon(1e-13));
  CHECK(w.u == doctest::Approx(star.u_star).epsilon(1e-13));
  // transverse velocity switches across the contact
  swe::RiemannProblem rp2 = rp;
  rp2.left.v = 3.0;
  rp2.right.v = -2.0;
  const auto star2 = swe::star_state_from_h(root_of(rp2), rp2);
  CHECK(swe::sample_solution(star2, rp2, star2.u_star - 1e-6).v == doctest::Approx(3.0));
  CHECK(swe::sample_solution(star2, rp2, star2.u_star + 1e-6).v == doctest::Approx(-2.0));
}

TEST_CASE("shock satisfies the Rankine-Hugoniot conditions") {
  const auto rp = colliding();  // both waves are shocks
  const auto star = swe::star_state_from_h(root_of(rp), rp);
  REQUIRE(star.left_wave == swe::WaveType::Shock);
  REQUIRE(star.right_wave == swe::WaveType::Shock);
  // Left shock speed from mass conservation, then momentum must balance.
  const double s = (rp.left.h * rp.left.u - star.h_star * star.u_star) / (rp.left.h - star.h_star);
  const auto ql = swe::to_conserved(rp.left);
  const auto qs = swe::to_conserved({star.h_star, star.u_star, 0.0});
  const auto fl = swe::flux(ql, rp.params);
  const auto fs = swe::flux(qs, rp.params);
  CHECK(fl.hu - fs.hu == doctest::Approx(s * (ql.hu - qs.hu)).epsilon(1e-10));
}

TEST_CASE("rarefaction interior matches the Riemann invariant") {
  const auto rp = dam_break();
  const auto star = swe::star_state_from_h(root_of(rp), rp);
  REQUIRE(star.left_wave == swe::WaveType::Rarefaction);
  const double head = rp.left.u - std::sqrt(rp.params.g * rp.left.h);
  const double tail = star.u_star - std::sqrt(rp.params.g * star.h_star);
  const double xi = 0.5 * (head + tail);
  const auto w = swe::sample_solution(star, rp, xi);
  // u + 2 sqrt(g h) is constant across the left fan, and u - sqrt(g h) = xi.
  CHECK(w.u + 2.0 * std::sqrt(rp.params.g * w.h) ==
        doctest::Approx(rp.left.u + 2.0 * std::sqrt(rp.params.g * rp.left.h)).epsilon(1e-13));
  CHECK(w.u - std::sqrt(rp.params.g * w.h) == doctest::Approx(xi).epsilon(1e-12));
}
