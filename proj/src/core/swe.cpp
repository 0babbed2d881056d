#include "swe.hpp"

#include <cmath>

namespace riemann::swe {

Conserved to_conserved(const Primitive& w) { return {w.h, w.h * w.u, w.h * w.v}; }

Primitive to_primitive(const Conserved& q) {
  if (q.h <= 0.0) return {q.h, 0.0, 0.0};
  return {q.h, q.hu / q.h, q.hv / q.h};
}

Conserved flux(const Conserved& q, const Params& params) {
  const Primitive w = to_primitive(q);
  return {q.hu, q.hu * w.u + 0.5 * params.g * q.h * q.h, q.hu * w.v};
}

void validate(const RiemannProblem& rp) {
  if (!(rp.params.g > 0.0)) throw std::domain_error("gravity must be positive");
  if (!(rp.left.h > 0.0) || !(rp.right.h > 0.0))
    throw std::domain_error("initial depths must be positive (dry initial data unsupported)");
  if (!std::isfinite(rp.left.h) || !std::isfinite(rp.left.u) || !std::isfinite(rp.right.h) ||
      !std::isfinite(rp.right.u))
    throw std::domain_error("non-finite initial state");
}

namespace {

inline void check_depth_arg(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::domain_error("depth must be positive and finite");
}

// Shock-branch speed factor y(h) = sqrt(g (h + h0) / (2 h h0)) and its
// derivatives; f_S = (h - h0) y.
inline double shock_y(double h, double h0, double g) {
  return std::sqrt(0.5 * g * (h + h0) / (h * h0));
}

}  // namespace

double wave_function(double h, double h_side, double g) {
  check_depth_arg(h);
  if (h == h_side) return 0.0;
  if (h < h_side) return 2.0 * (std::sqrt(g * h) - std::sqrt(g * h_side));
  return (h - h_side) * shock_y(h, h_side, g);
}

double wave_function_d1(double h, double h_side, double g) {
  check_depth_arg(h);
  if (h <= h_side) return std::sqrt(g / h);
  const double y = shock_y(h, h_side, g);
  const double y1 = -g / (4.0 * h * h * y);
  return y + (h - h_side) * y1;
}

double wave_function_d2(double h, double h_side, double g) {
  check_depth_arg(h);
  if (h <= h_side) return -0.5 * std::sqrt(g) / std::pow(h, 1.5);
  const double y = shock_y(h, h_side, g);
  const double y1 = -g / (4.0 * h * h * y);
  const double y2 = 0.5 * g / (h * h * h * y) + 0.25 * g * y1 / (h * h * y * y);
  return 2.0 * y1 + (h - h_side) * y2;
}

double wave_function_d3(double h, double h_side, double g) {
  check_depth_arg(h);
  if (h <= h_side) return 0.75 * std::sqrt(g) / std::pow(h, 2.5);
  const double y = shock_y(h, h_side, g);
  const double h2 = h * h;
  const double y1 = -g / (4.0 * h2 * y);
  const double y2 = 0.5 * g / (h2 * h * y) + 0.25 * g * y1 / (h2 * y * y);
  const double y3 = 0.5 * g * (-3.0 / (h2 * h2 * y) - y1 / (h2 * h * y * y)) +
                    0.25 * g *
                        (-2.0 * y1 / (h2 * h * y * y) - 2.0 * y1 * y1 / (h2 * y * y * y) +
                         y2 / (h2 * y * y));
  return 3.0 * y2 + (h - h_side) * y3;
}

double depth_function(double h, const RiemannProblem& rp) {
  const double g = rp.params.g;
  return wave_function(h, rp.left.h, g) + wave_function(h, rp.right.h, g) + rp.right.u - rp.left.u;
}

DepthDerivatives depth_function_derivatives(double h, const RiemannProblem& rp) {
  const double g = rp.params.g;
  return {wave_function_d1(h, rp.left.h, g) + wave_function_d1(h, rp.right.h, g),
          wave_function_d2(h, rp.left.h, g) + wave_function_d2(h, rp.right.h, g),
          wave_function_d3(h, rp.left.h, g) + wave_function_d3(h, rp.right.h, g)};
}

std::pair<double, double> depth_function_pair(double h, const RiemannProblem& rp) {
  const double g = rp.params.g;
  check_depth_arg(h);
  double value = rp.right.u - rp.left.u;
  double deriv = 0.0;
  for (const double h_side : {rp.left.h, rp.right.h}) {
    if (h <= h_side) {
      const double c = std::sqrt(g * h);
      value += 2.0 * (c - std::sqrt(g * h_side));
      deriv += g / c;
    } else {
      const double y = shock_y(h, h_side, g);
      value += (h - h_side) * y;
      deriv += y - (h - h_side) * g / (4.0 * h * h * y);
    }
  }
  return {value, deriv};
}

std::pair<WaveType, WaveType> classify_waves(const RiemannProblem& rp) {
  validate(rp);
  const double h_min = std::min(rp.left.h, rp.right.h);
  const double h_max = std::max(rp.left.h, rp.right.h);
  if (depth_function(h_min, rp) > 0.0) return {WaveType::Rarefaction, WaveType::Rarefaction};
  if (depth_function(h_max, rp) < 0.0) return {WaveType::Shock, WaveType::Shock};
  // Mixed case: the shock sits on the side with the smaller initial depth
  // (h* lies between h_min and h_max, so h* > h on the shallow side).
  if (rp.left.h <= rp.right.h) return {WaveType::Shock, WaveType::Rarefaction};
  return {WaveType::Rarefaction, WaveType::Shock};
}

bool check_depth_positivity(const RiemannProblem& rp) {
  const double g = rp.params.g;
  return rp.right.u - rp.left.u < 2.0 * (std::sqrt(g * rp.left.h) + std::sqrt(g * rp.right.h));
}

double h_two_rarefaction(const RiemannProblem& rp) {
  const double g = rp.params.g;
  const double s =
      rp.left.u - rp.right.u + 2.0 * (std::sqrt(g * rp.left.h) + std::sqrt(g * rp.right.h));
  return s * s / (16.0 * g);
}

Bracket bracket_star(const RiemannProblem& rp, double phi_min, double phi_max) {
  const double h_min = std::min(rp.left.h, rp.right.h);
  const double h_max = std::max(rp.left.h, rp.right.h);
  if (std::isnan(phi_min)) phi_min = depth_function(h_min, rp);
  if (phi_min > 0.0)
    throw std::domain_error("bracket_star requires a solution with at least one shock");
  if (std::isnan(phi_max)) phi_max = depth_function(h_max, rp);
  const double h_rr = h_two_rarefaction(rp);
  if (phi_max < 0.0) return {h_max, h_rr};  // two shocks
  return {h_min, std::min(h_max, h_rr)};    // one shock, one rarefaction
}

double u_star_from_h(double h_star, const RiemannProblem& rp) {
  const double g = rp.params.g;
  // inline the two wave-function branches so sqrt(g h_star) is shared
  double c_star = -1.0;
  auto f = [&](double h_side) {
    if (h_star == h_side) return 0.0;
    if (h_star < h_side) {
      if (c_star < 0.0) c_star = std::sqrt(g * h_star);
      return 2.0 * (c_star - std::sqrt(g * h_side));
    }
    return (h_star - h_side) * std::sqrt(0.5 * g * (h_star + h_side) / (h_star * h_side));
  };
  return 0.5 * (rp.left.u + rp.right.u) + 0.5 * (f(rp.right.h) - f(rp.left.h));
}

StarState star_state_from_h(double h_star, const RiemannProblem& rp) {
  StarState s;
  s.h_star = h_star;
  s.u_star = u_star_from_h(h_star, rp);
  s.v_left = rp.left.v;
  s.v_right = rp.right.v;
  s.left_wave = h_star > rp.left.h ? WaveType::Shock : WaveType::Rarefaction;
  s.right_wave = h_star > rp.right.h ? WaveType::Shock : WaveType::Rarefaction;
  return s;
}

namespace {

struct WaveSpeeds {
  double head;  // leftmost signal of this wave
  double tail;  // rightmost signal (equal to head for a shock)
};

// Shock speed from the Rankine-Hugoniot mass jump using the outer state.
inline double shock_speed(const Primitive& outer, double h_star, double u_star) {
  const double dh = outer.h - h_star;
  return (outer.h * outer.u - h_star * u_star) / dh;
}

}  // namespace

Primitive sample_solution(const StarState& star, const RiemannProblem& rp, double xi) {
  const double g = rp.params.g;
  const double h_star = star.h_star;
  const double u_star = star.u_star;
  const double c_star = std::sqrt(g * h_star);

  // The Rankine-Hugoniot quotient cancels catastrophically for waves of
  // vanishing strength; below this relative jump the characteristic speed is
  // the more accurate value.
  auto degenerate = [&](double h_outer) {
    return std::abs(h_outer - h_star) <= 1e-9 * std::max(h_outer, h_star);
  };

  WaveSpeeds lw, rw;
  if (star.left_wave == WaveType::Shock && !degenerate(rp.left.h)) {
    lw.head = lw.tail = shock_speed(rp.left, h_star, u_star);
  } else if (star.left_wave == WaveType::Shock) {
    lw.head = lw.tail = u_star - c_star;
  } else {
    lw.head = rp.left.u - std::sqrt(g * rp.left.h);
    lw.tail = u_star - c_star;
  }
  if (star.right_wave == WaveType::Shock && !degenerate(rp.right.h)) {
    rw.head = rw.tail = shock_speed(rp.right, h_star, u_star);
  } else if (star.right_wave == WaveType::Shock) {
    rw.head = rw.tail = u_star + c_star;
  } else {
    rw.tail = rp.right.u + std::sqrt(g * rp.right.h);
    rw.head = u_star + c_star;
  }

  const double slack = 1e-12 * (1.0 + std::abs(lw.head) + std::abs(rw.tail));
  if (lw.tail < lw.head - slack || u_star < lw.tail - slack || rw.head < u_star - slack ||
      rw.tail < rw.head - slack)
    throw std::runtime_error("non-ordered wave speeds in shallow water similarity solution");

  if (xi < lw.head) return rp.left;
  if (xi < lw.tail) {
    // interior of the 1-rarefaction: u + 2 sqrt(gh) is invariant, xi = u - sqrt(gh)
    const double w = rp.left.u + 2.0 * std::sqrt(g * rp.left.h);
    const double c = (w - xi) / 3.0;
    return {c * c / g, xi + c, rp.left.v};
  }
  if (xi < u_star) return {h_star, u_star, star.v_left};
  if (xi < rw.head) return {h_star, u_star, star.v_right};
  if (xi < rw.tail) {
    const double w = rp.right.u - 2.0 * std::sqrt(g * rp.right.h);
    const double c = (xi - w) / 3.0;
    return {c * c / g, xi - c, rp.right.v};
  }
  return rp.right;
}

}  // namespace riemann::swe
