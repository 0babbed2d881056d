#include "euler.hpp"

#include <cmath>

namespace riemann::euler {

double sound_speed(const Primitive& w, const Params& params) {
  return std::sqrt(params.gamma * w.p / w.rho);
}

Conserved to_conserved(const Primitive& w, const Params& params) {
  const double e = w.p / ((params.gamma - 1.0) * w.rho);
  return {w.rho, w.rho * w.u, w.rho * (0.5 * w.u * w.u + e)};
}

Primitive to_primitive(const Conserved& q, const Params& params) {
  const double u = q.rho_u / q.rho;
  const double p = (params.gamma - 1.0) * (q.E - 0.5 * q.rho * u * u);
  return {q.rho, u, p};
}

Conserved flux(const Conserved& q, const Params& params) {
  const Primitive w = to_primitive(q, params);
  return {q.rho_u, q.rho_u * w.u + w.p, w.u * (q.E + w.p)};
}

void validate(const RiemannProblem& rp) {
  if (!(rp.params.gamma > 1.0)) throw std::domain_error("gamma must exceed 1");
  for (const Primitive* w : {&rp.left, &rp.right}) {
    if (!(w->rho > 0.0) || !(w->p > 0.0))
      throw std::domain_error("densities and pressures must be positive");
    if (!std::isfinite(w->rho) || !std::isfinite(w->u) || !std::isfinite(w->p))
      throw std::domain_error("non-finite initial state");
  }
}

namespace {

inline void check_pressure_arg(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::domain_error("pressure must be positive and finite");
}

struct SideConstants {
  double C;  // 2 / ((gamma+1) rho)
  double B;  // (gamma-1)/(gamma+1) p
  double a;  // sound speed
};

inline SideConstants side_constants(const Primitive& w, const Params& params) {
  const double gamma = params.gamma;
  return {2.0 / ((gamma + 1.0) * w.rho), (gamma - 1.0) / (gamma + 1.0) * w.p,
          std::sqrt(gamma * w.p / w.rho)};
}

}  // namespace

double wave_function(double p, const Primitive& side, const Params& params) {
  check_pressure_arg(p);
  const double gamma = params.gamma;
  const SideConstants sc = side_constants(side, params);
  if (p > side.p) return (p - side.p) * std::sqrt(sc.C / (p + sc.B));
  return 2.0 * sc.a / (gamma - 1.0) * (std::pow(p / side.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

double wave_function_d1(double p, const Primitive& side, const Params& params) {
  check_pressure_arg(p);
  const double gamma = params.gamma;
  const SideConstants sc = side_constants(side, params);
  if (p > side.p) {
    const double bp = sc.B + p;
    return std::sqrt(sc.C / bp) * (1.0 - 0.5 * (p - side.p) / bp);
  }
  return 1.0 / (side.rho * sc.a) * std::pow(p / side.p, -(gamma + 1.0) / (2.0 * gamma));
}

double wave_function_d2(double p, const Primitive& side, const Params& params) {
  check_pressure_arg(p);
  const double gamma = params.gamma;
  const SideConstants sc = side_constants(side, params);
  if (p > side.p) {
    const double bp = sc.B + p;
    return -0.25 * std::sqrt(sc.C / bp) * (4.0 * sc.B + p + 3.0 * side.p) / (bp * bp);
  }
  return -(gamma + 1.0) * sc.a / (2.0 * gamma * gamma * side.p * side.p) *
         std::pow(p / side.p, -(3.0 * gamma + 1.0) / (2.0 * gamma));
}

double pressure_function(double p, const RiemannProblem& rp) {
  return wave_function(p, rp.left, rp.params) + wave_function(p, rp.right, rp.params) +
         rp.right.u - rp.left.u;
}

std::pair<double, double> pressure_function_derivatives(double p, const RiemannProblem& rp) {
  return {wave_function_d1(p, rp.left, rp.params) + wave_function_d1(p, rp.right, rp.params),
          wave_function_d2(p, rp.left, rp.params) + wave_function_d2(p, rp.right, rp.params)};
}

std::pair<double, double> pressure_function_pair(double p, const RiemannProblem& rp) {
  check_pressure_arg(p);
  const double gamma = rp.params.gamma;
  double value = rp.right.u - rp.left.u;
  double deriv = 0.0;
  for (const Primitive* side : {&rp.left, &rp.right}) {
    const SideConstants sc = side_constants(*side, rp.params);
    if (p > side->p) {
      const double bp = sc.B + p;
      const double root = std::sqrt(sc.C / bp);
      value += (p - side->p) * root;
      deriv += root * (1.0 - 0.5 * (p - side->p) / bp);
    } else {
      const double ratio = std::pow(p / side->p, (gamma - 1.0) / (2.0 * gamma));
      value += 2.0 * sc.a / (gamma - 1.0) * (ratio - 1.0);
      deriv += ratio * side->p / (side->rho * sc.a * p);  // same power, exponent shifted by -1
    }
  }
  return {value, deriv};
}

std::pair<WaveType, WaveType> classify_waves(const RiemannProblem& rp) {
  validate(rp);
  const double p_min = std::min(rp.left.p, rp.right.p);
  const double p_max = std::max(rp.left.p, rp.right.p);
  if (pressure_function(p_min, rp) > 0.0) return {WaveType::Rarefaction, WaveType::Rarefaction};
  if (pressure_function(p_max, rp) < 0.0) return {WaveType::Shock, WaveType::Shock};
  if (rp.left.p <= rp.right.p) return {WaveType::Shock, WaveType::Rarefaction};
  return {WaveType::Rarefaction, WaveType::Shock};
}

bool check_pressure_positivity(const RiemannProblem& rp) {
  const double gamma = rp.params.gamma;
  const double a_l = sound_speed(rp.left, rp.params);
  const double a_r = sound_speed(rp.right, rp.params);
  return 2.0 * (a_l + a_r) / (gamma - 1.0) > rp.right.u - rp.left.u;
}

double p_two_rarefaction(const RiemannProblem& rp) {
  const double gamma = rp.params.gamma;
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double a_l = sound_speed(rp.left, rp.params);
  const double a_r = sound_speed(rp.right, rp.params);
  const double num = a_l + a_r - 0.5 * (gamma - 1.0) * (rp.right.u - rp.left.u);
  const double den = a_l / std::pow(rp.left.p, z) + a_r / std::pow(rp.right.p, z);
  return std::pow(num / den, 1.0 / z);
}

StarState star_closures(double p_star, const RiemannProblem& rp) {
  check_pressure_arg(p_star);
  const double gamma = rp.params.gamma;
  const double gm = (gamma - 1.0) / (gamma + 1.0);
  StarState s;
  s.p_star = p_star;
  // one pass per side: the shock branch needs no sound speed and shares the
  // pressure ratio between the velocity and density closures
  auto close = [&](const Primitive& w, WaveType& wave, double& rho_star, double& f) {
    const double r = p_star / w.p;
    if (p_star > w.p) {
      wave = WaveType::Shock;
      const double C = 2.0 / ((gamma + 1.0) * w.rho);
      f = (p_star - w.p) * std::sqrt(C / (p_star + gm * w.p));
      rho_star = w.rho * (r + gm) / (gm * r + 1.0);
    } else {
      wave = WaveType::Rarefaction;
      const double a = std::sqrt(gamma * w.p / w.rho);
      f = 2.0 * a / (gamma - 1.0) * (std::pow(r, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
      rho_star = w.rho * std::pow(r, 1.0 / gamma);
    }
  };
  double f_l, f_r;
  close(rp.left, s.left_wave, s.rho_star_l, f_l);
  close(rp.right, s.right_wave, s.rho_star_r, f_r);
  s.u_star = 0.5 * (rp.left.u + rp.right.u) + 0.5 * (f_r - f_l);
  return s;
}

namespace {

inline double shock_speed(const Primitive& outer, double rho_star, double u_star) {
  return (outer.rho * outer.u - rho_star * u_star) / (outer.rho - rho_star);
}

}  // namespace

Primitive sample_solution(const StarState& star, const RiemannProblem& rp, double xi) {
  const double gamma = rp.params.gamma;
  const double a_l = sound_speed(rp.left, rp.params);
  const double a_r = sound_speed(rp.right, rp.params);

  // The Rankine-Hugoniot quotient cancels catastrophically for waves of
  // vanishing strength; below this relative jump the characteristic speed is
  // the more accurate value.
  auto degenerate = [](double rho_outer, double rho_star) {
    return std::abs(rho_outer - rho_star) <= 1e-9 * std::max(rho_outer, rho_star);
  };

  double l_head, l_tail, r_head, r_tail;
  if (star.left_wave == WaveType::Shock && !degenerate(rp.left.rho, star.rho_star_l)) {
    l_head = l_tail = shock_speed(rp.left, star.rho_star_l, star.u_star);
  } else if (star.left_wave == WaveType::Shock) {
    l_head = l_tail = star.u_star - std::sqrt(gamma * star.p_star / star.rho_star_l);
  } else {
    l_head = rp.left.u - a_l;
    l_tail = star.u_star - std::sqrt(gamma * star.p_star / star.rho_star_l);
  }
  if (star.right_wave == WaveType::Shock && !degenerate(rp.right.rho, star.rho_star_r)) {
    r_head = r_tail = shock_speed(rp.right, star.rho_star_r, star.u_star);
  } else if (star.right_wave == WaveType::Shock) {
    r_head = r_tail = star.u_star + std::sqrt(gamma * star.p_star / star.rho_star_r);
  } else {
    r_tail = rp.right.u + a_r;
    r_head = star.u_star + std::sqrt(gamma * star.p_star / star.rho_star_r);
  }

  const double slack = 1e-12 * (1.0 + std::abs(l_head) + std::abs(r_tail));
  if (l_tail < l_head - slack || star.u_star < l_tail - slack || r_head < star.u_star - slack ||
      r_tail < r_head - slack)
    throw std::runtime_error("non-ordered wave speeds in Euler similarity solution");

  if (xi < l_head) return rp.left;
  if (xi < l_tail) {
    // interior of the left fan: u + 2a/(gamma-1) invariant, xi = u - a
    const double a = (gamma - 1.0) / (gamma + 1.0) * (rp.left.u - xi) + 2.0 * a_l / (gamma + 1.0);
    const double rho = rp.left.rho * std::pow(a / a_l, 2.0 / (gamma - 1.0));
    return {rho, xi + a, rp.left.p * std::pow(rho / rp.left.rho, gamma)};
  }
  if (xi < star.u_star) return {star.rho_star_l, star.u_star, star.p_star};
  if (xi < r_head) return {star.rho_star_r, star.u_star, star.p_star};
  if (xi < r_tail) {
    const double a = (gamma - 1.0) / (gamma + 1.0) * (xi - rp.right.u) + 2.0 * a_r / (gamma + 1.0);
    const double rho = rp.right.rho * std::pow(a / a_r, 2.0 / (gamma - 1.0));
    return {rho, xi - a, rp.right.p * std::pow(rho / rp.right.rho, gamma)};
  }
  return rp.right;
}

}  // namespace riemann::euler
