// Non-iterative approximate Riemann solvers: HLLE middle state, Roe
// linearization with Harten-Hyman entropy fix, and the adaptive solvers that
// pick a closed-form star-state estimate from the wave pattern.

#ifndef RIEMANN_CORE_APPROX_HPP
#define RIEMANN_CORE_APPROX_HPP

#include <array>

#include "euler.hpp"
#include "rootfind.hpp"
#include "swe.hpp"

namespace riemann::approx {

// Three constant states q_l, q_m, q_r separated by waves at s_left < s_right.
struct HlleState {
  double s_left = 0.0;
  double s_right = 0.0;
  std::array<double, 3> q_middle{};
};

HlleState hlle(const swe::RiemannProblem& rp);
HlleState hlle(const euler::RiemannProblem& rp);

// Roe wave decomposition: Delta q = sum_p waves[p], speeds sorted ascending.
// fluct_minus/fluct_plus are the entropy-fixed A-/A+ flux differences.
struct RoeData {
  std::array<double, 3> speeds{};
  std::array<std::array<double, 3>, 3> waves{};
  std::array<double, 3> fluct_minus{};
  std::array<double, 3> fluct_plus{};
};

RoeData roe(const swe::RiemannProblem& rp);
RoeData roe(const euler::RiemannProblem& rp);

struct AdaptiveResult {
  double star = 0.0;    // h* or p* approximation
  double u_star = 0.0;
  bool exact = false;   // true when the two-rarefaction shortcut applied
  double iterations = 0.0;
};

// Branch on the wave pattern: two rarefactions -> closed form (exact), two
// shocks -> quadratic approximation, mixed -> convex combination.
AdaptiveResult adaptive_swe(const swe::RiemannProblem& rp);

// Euler variant: the two-shock branch refines the convex combination with
// positive Newton started from max(p_max, corrected guess); the mixed branch
// returns the convex combination directly.
AdaptiveResult adaptive_euler(const euler::RiemannProblem& rp,
                              const rootfind::ToleranceSpec& tol);

}  // namespace riemann::approx

#endif
