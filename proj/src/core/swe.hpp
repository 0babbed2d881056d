// Exact Riemann solver for the 1D shallow water equations.
//
// The middle depth h* is the unique root of the depth function
//   phi(h) = f(h; h_l) + f(h; h_r) + u_r - u_l,
// where f switches between a rarefaction (Riemann invariant) branch and a
// shock (Rankine-Hugoniot) branch.  See Toro, "Shock-Capturing Methods for
// Free-Surface Shallow Flows" (2001).

#ifndef RIEMANN_CORE_SWE_HPP
#define RIEMANN_CORE_SWE_HPP

#include <stdexcept>
#include <utility>

#include "rootfind.hpp"

namespace riemann::swe {

struct Params {
  double g = 1.0;  // gravitational acceleration, > 0
};

struct Primitive {
  double h = 0.0;  // depth
  double u = 0.0;  // normal velocity
  double v = 0.0;  // transverse velocity (passive)
};

struct Conserved {
  double h = 0.0;
  double hu = 0.0;
  double hv = 0.0;
};

struct RiemannProblem {
  Primitive left;
  Primitive right;
  Params params;
};

enum class WaveType { Shock, Rarefaction, Contact };

struct StarState {
  double h_star = 0.0;
  double u_star = 0.0;
  double v_left = 0.0;   // transverse velocity left of the contact
  double v_right = 0.0;  // and right of it
  WaveType left_wave = WaveType::Rarefaction;
  WaveType right_wave = WaveType::Rarefaction;
};

struct Bracket {
  double h_minus = 0.0;
  double h_plus = 0.0;
};

struct DryStateError : std::runtime_error {
  DryStateError() : std::runtime_error("shallow water Riemann problem produces a dry state") {}
};

Conserved to_conserved(const Primitive& w);
Primitive to_primitive(const Conserved& q);
Conserved flux(const Conserved& q, const Params& params);

void validate(const RiemannProblem& rp);

// One-sided wave function f(h; h_side) and its first three derivatives.
double wave_function(double h, double h_side, double g);
double wave_function_d1(double h, double h_side, double g);
double wave_function_d2(double h, double h_side, double g);
double wave_function_d3(double h, double h_side, double g);

double depth_function(double h, const RiemannProblem& rp);
// (phi', phi'', phi''').  phi' > 0, phi'' < 0, phi''' > 0 for all h > 0.
struct DepthDerivatives {
  double d1, d2, d3;
};
DepthDerivatives depth_function_derivatives(double h, const RiemannProblem& rp);

// phi and phi' in one call; this is the evaluation the iteration counters track.
std::pair<double, double> depth_function_pair(double h, const RiemannProblem& rp);

std::pair<WaveType, WaveType> classify_waves(const RiemannProblem& rp);

// True iff the middle state stays wet: u_r - u_l < 2(sqrt(g h_l) + sqrt(g h_r)).
bool check_depth_positivity(const RiemannProblem& rp);

// Closed-form root of phi under the two-rarefaction assumption; an upper
// bound for h* in every case.
double h_two_rarefaction(const RiemannProblem& rp);

// Lower/upper bound for h* when at least one wave is a shock.  phi values at
// h_min and h_max may be passed in to avoid recomputation; NaN means unknown.
Bracket bracket_star(const RiemannProblem& rp, double phi_min, double phi_max);

// Objective handed to the root-finding schemes.  Counts (phi, phi') pairs.
class DepthObjective {
 public:
  explicit DepthObjective(const RiemannProblem& rp) : rp_(&rp) {}
  std::pair<double, double> eval_pair(double h) {
    ++evals_;
    return depth_function_pair(h, *rp_);
  }
  double eval_value(double h) {
    ++evals_;
    return depth_function(h, *rp_);
  }
  double eval_deriv(double h) {
    ++evals_;
    return depth_function_derivatives(h, *rp_).d1;
  }
  int evals() const { return evals_; }
  void add_evals(int n) { evals_ += n; }

 private:
  const RiemannProblem* rp_;
  int evals_ = 0;
};

double u_star_from_h(double h_star, const RiemannProblem& rp);

StarState star_state_from_h(double h_star, const RiemannProblem& rp);

// Sample the similarity solution at ray xi = x/t.  A ray exactly on a
// discontinuity resolves to the state on its right.
Primitive sample_solution(const StarState& star, const RiemannProblem& rp, double xi);

}  // namespace riemann::swe

#endif
