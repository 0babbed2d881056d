#include "approx.hpp"

#include <cmath>

#include "guess.hpp"

namespace riemann::approx {

namespace {

struct RoeAvgSwe {
  double u, c, v;
};

RoeAvgSwe roe_average(const swe::RiemannProblem& rp) {
  const double sl = std::sqrt(rp.left.h), sr = std::sqrt(rp.right.h);
  return {(sl * rp.left.u + sr * rp.right.u) / (sl + sr),
          std::sqrt(rp.params.g * 0.5 * (rp.left.h + rp.right.h)),
          (sl * rp.left.v + sr * rp.right.v) / (sl + sr)};
}

struct RoeAvgEuler {
  double u, c, H;
};

RoeAvgEuler roe_average(const euler::RiemannProblem& rp) {
  const double gamma = rp.params.gamma;
  const euler::Conserved ql = euler::to_conserved(rp.left, rp.params);
  const euler::Conserved qr = euler::to_conserved(rp.right, rp.params);
  const double sl = std::sqrt(rp.left.rho), sr = std::sqrt(rp.right.rho);
  const double Hl = (ql.E + rp.left.p) / rp.left.rho;
  const double Hr = (qr.E + rp.right.p) / rp.right.rho;
  const double u = (sl * rp.left.u + sr * rp.right.u) / (sl + sr);
  const double H = (sl * Hl + sr * Hr) / (sl + sr);
  const double c2 = (gamma - 1.0) * (H - 0.5 * u * u);
  if (!(c2 > 0.0)) throw std::runtime_error("non-physical Roe averaged state");
  return {u, std::sqrt(c2), H};
}

// Harten-Hyman transonic split applied to the genuinely nonlinear waves.
// lam_l/lam_r are the characteristic speeds on either side of the wave.
void accumulate(RoeData& data, int p, double lam_l, double lam_r) {
  const double s = data.speeds[p];
  if (lam_l < 0.0 && lam_r > 0.0) {
    const double beta = (lam_r - s) / (lam_r - lam_l);
    for (int i = 0; i < 3; ++i) {
      data.fluct_minus[i] += beta * lam_l * data.waves[p][i];
      data.fluct_plus[i] += (1.0 - beta) * lam_r * data.waves[p][i];
    }
  } else {
    for (int i = 0; i < 3; ++i) {
      data.fluct_minus[i] += std::min(s, 0.0) * data.waves[p][i];
      data.fluct_plus[i] += std::max(s, 0.0) * data.waves[p][i];
    }
  }
}

void accumulate_linear(RoeData& data, int p) {
  const double s = data.speeds[p];
  for (int i = 0; i < 3; ++i) {
    data.fluct_minus[i] += std::min(s, 0.0) * data.waves[p][i];
    data.fluct_plus[i] += std::max(s, 0.0) * data.waves[p][i];
  }
}

}  // namespace

HlleState hlle(const swe::RiemannProblem& rp) {
  const double g = rp.params.g;
  const RoeAvgSwe avg = roe_average(rp);
  const double s_l = std::min(avg.u - avg.c, rp.left.u - std::sqrt(g * rp.left.h));
  const double s_r = std::max(avg.u + avg.c, rp.right.u + std::sqrt(g * rp.right.h));
  if (!(s_l < s_r)) throw std::runtime_error("degenerate HLLE wave speeds");
  const swe::Conserved ql = swe::to_conserved(rp.left);
  const swe::Conserved qr = swe::to_conserved(rp.right);
  const swe::Conserved fl = swe::flux(ql, rp.params);
  const swe::Conserved fr = swe::flux(qr, rp.params);
  HlleState hs{s_l, s_r, {}};
  hs.q_middle = {(fr.h - fl.h - s_r * qr.h + s_l * ql.h) / (s_l - s_r),
                 (fr.hu - fl.hu - s_r * qr.hu + s_l * ql.hu) / (s_l - s_r),
                 (fr.hv - fl.hv - s_r * qr.hv + s_l * ql.hv) / (s_l - s_r)};
  return hs;
}

HlleState hlle(const euler::RiemannProblem& rp) {
  const RoeAvgEuler avg = roe_average(rp);
  const double a_l = euler::sound_speed(rp.left, rp.params);
  const double a_r = euler::sound_speed(rp.right, rp.params);
  const double s_l = std::min(avg.u - avg.c, rp.left.u - a_l);
  const double s_r = std::max(avg.u + avg.c, rp.right.u + a_r);
  if (!(s_l < s_r)) throw std::runtime_error("degenerate HLLE wave speeds");
  const euler::Conserved ql = euler::to_conserved(rp.left, rp.params);
  const euler::Conserved qr = euler::to_conserved(rp.right, rp.params);
  const euler::Conserved fl = euler::flux(ql, rp.params);
  const euler::Conserved fr = euler::flux(qr, rp.params);
  HlleState hs{s_l, s_r, {}};
  hs.q_middle = {(fr.rho - fl.rho - s_r * qr.rho + s_l * ql.rho) / (s_l - s_r),
                 (fr.rho_u - fl.rho_u - s_r * qr.rho_u + s_l * ql.rho_u) / (s_l - s_r),
                 (fr.E - fl.E - s_r * qr.E + s_l * ql.E) / (s_l - s_r)};
  return hs;
}

RoeData roe(const swe::RiemannProblem& rp) {
  const double g = rp.params.g;
  const RoeAvgSwe avg = roe_average(rp);
  const swe::Conserved ql = swe::to_conserved(rp.left);
  const swe::Conserved qr = swe::to_conserved(rp.right);
  const double dh = qr.h - ql.h;
  const double dhu = qr.hu - ql.hu;
  const double dhv = qr.hv - ql.hv;

  const double a1 = ((avg.u + avg.c) * dh - dhu) / (2.0 * avg.c);
  const double a3 = (dhu - (avg.u - avg.c) * dh) / (2.0 * avg.c);

  RoeData data;
  data.speeds = {avg.u - avg.c, avg.u, avg.u + avg.c};
  // the averaged transverse velocity keeps the Roe property exact in the
  // tracer component as well
  data.waves[0] = {a1, a1 * (avg.u - avg.c), a1 * avg.v};
  data.waves[2] = {a3, a3 * (avg.u + avg.c), a3 * avg.v};
  data.waves[1] = {0.0, 0.0, dhv - avg.v * dh};

  // characteristic speeds on either side of the nonlinear waves; a
  // non-physical linearized middle depth disables the transonic fix (the
  // comparisons below are false for NaN)
  const double h1 = ql.h + a1;  // depth between the 1- and 3-waves
  double u1 = std::nan(""), c1 = std::nan("");
  if (h1 > 0.0) {
    u1 = (ql.hu + a1 * (avg.u - avg.c)) / h1;
    c1 = std::sqrt(g * h1);
  }
  accumulate(data, 0, rp.left.u - std::sqrt(g * rp.left.h), u1 - c1);
  accumulate_linear(data, 1);
  accumulate(data, 2, u1 + c1, rp.right.u + std::sqrt(g * rp.right.h));
  return data;
}

RoeData roe(const euler::RiemannProblem& rp) {
  const double gamma = rp.params.gamma;
  const RoeAvgEuler avg = roe_average(rp);
  const euler::Conserved ql = euler::to_conserved(rp.left, rp.params);
  const euler::Conserved qr = euler::to_conserved(rp.right, rp.params);
  const double drho = qr.rho - ql.rho;
  const double dm = qr.rho_u - ql.rho_u;
  const double dE = qr.E - ql.E;

  const double a2 =
      (gamma - 1.0) / (avg.c * avg.c) * (drho * (avg.H - avg.u * avg.u) + avg.u * dm - dE);
  const double a1 = (drho * (avg.u + avg.c) - dm - avg.c * a2) / (2.0 * avg.c);
  const double a3 = drho - a1 - a2;

  RoeData data;
  data.speeds = {avg.u - avg.c, avg.u, avg.u + avg.c};
  data.waves[0] = {a1, a1 * (avg.u - avg.c), a1 * (avg.H - avg.u * avg.c)};
  data.waves[1] = {a2, a2 * avg.u, a2 * 0.5 * avg.u * avg.u};
  data.waves[2] = {a3, a3 * (avg.u + avg.c), a3 * (avg.H + avg.u * avg.c)};

  // states adjacent to the nonlinear waves, for the transonic check
  // NaN for non-physical states, which disables the transonic fix below
  auto char_speed = [&](const euler::Conserved& q, int sign) {
    const euler::Primitive w = euler::to_primitive(q, rp.params);
    if (!(w.rho > 0.0) || !(w.p > 0.0)) return std::nan("");
    return w.u + sign * euler::sound_speed(w, rp.params);
  };
  const euler::Conserved q1{ql.rho + data.waves[0][0], ql.rho_u + data.waves[0][1],
                            ql.E + data.waves[0][2]};
  const euler::Conserved q2{qr.rho - data.waves[2][0], qr.rho_u - data.waves[2][1],
                            qr.E - data.waves[2][2]};
  accumulate(data, 0, char_speed(euler::to_conserved(rp.left, rp.params), -1),
             char_speed(q1, -1));
  accumulate_linear(data, 1);
  accumulate(data, 2, char_speed(q2, +1), char_speed(euler::to_conserved(rp.right, rp.params), +1));
  return data;
}

AdaptiveResult adaptive_swe(const swe::RiemannProblem& rp) {
  swe::validate(rp);
  if (!swe::check_depth_positivity(rp)) throw swe::DryStateError();
  const double h_min = std::min(rp.left.h, rp.right.h);
  const double h_max = std::max(rp.left.h, rp.right.h);
  AdaptiveResult res;
  guess::PhiCache cache;
  cache.at_min = swe::depth_function(h_min, rp);
  if (cache.at_min > 0.0) {
    res.star = swe::h_two_rarefaction(rp);
    res.exact = true;
  } else {
    cache.at_max = swe::depth_function(h_max, rp);
    if (cache.at_max < 0.0) {
      res.star = guess::swe_guess(GuessKind::QA, rp).value;  // two shocks
    } else {
      res.star = guess::swe_guess(GuessKind::CC, rp, &cache).value;
    }
  }
  res.u_star = swe::u_star_from_h(res.star, rp);
  return res;
}

AdaptiveResult adaptive_euler(const euler::RiemannProblem& rp,
                              const rootfind::ToleranceSpec& tol) {
  euler::validate(rp);
  if (!euler::check_pressure_positivity(rp)) throw euler::VacuumError();
  const double p_min = std::min(rp.left.p, rp.right.p);
  const double p_max = std::max(rp.left.p, rp.right.p);
  AdaptiveResult res;
  guess::PhiCache cache;
  cache.at_min = euler::pressure_function(p_min, rp);
  if (cache.at_min > 0.0) {
    res.star = euler::p_two_rarefaction(rp);
    res.exact = true;
  } else {
    cache.at_max = euler::pressure_function(p_max, rp);
    const double p_cc = guess::euler_guess(GuessKind::CC, rp, &cache).value;
    if (cache.at_max < 0.0) {
      // two shocks: refine by positive Newton from a corrected launch point
      euler::PressureObjective obj(rp);
      const auto [f0, d0] = euler::pressure_function_pair(p_cc, rp);
      const double launch = std::max(p_max, p_cc - f0 / d0);
      const rootfind::SolveReport rep = rootfind::positive_newton(obj, launch, p_max, tol);
      res.star = rep.root;
      res.iterations = rep.iterations;
    } else {
      res.star = p_cc;
    }
  }
  res.u_star = euler::star_closures(res.star, rp).u_star;
  return res;
}

}  // namespace riemann::approx
