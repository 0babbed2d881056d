// Exact Riemann solver for the 1D Euler equations of an ideal gas.
//
// The star pressure p* is the unique root of
//   phi(p) = f(p; w_l) + f(p; w_r) + u_r - u_l,
// with the shock branch for p > p_side and the isentropic rarefaction branch
// otherwise.  See Toro, "Riemann Solvers and Numerical Methods for Fluid
// Dynamics", ch. 4.

#ifndef RIEMANN_CORE_EULER_HPP
#define RIEMANN_CORE_EULER_HPP

#include <stdexcept>
#include <utility>

#include "swe.hpp"  // WaveType

namespace riemann::euler {

using swe::WaveType;

struct Params {
  double gamma = 1.4;  // ratio of specific heats, > 1
};

struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct Conserved {
  double rho = 0.0;
  double rho_u = 0.0;
  double E = 0.0;  // total energy density
};

struct RiemannProblem {
  Primitive left;
  Primitive right;
  Params params;
};

struct StarState {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  WaveType left_wave = WaveType::Rarefaction;
  WaveType right_wave = WaveType::Rarefaction;
};

struct VacuumError : std::runtime_error {
  VacuumError() : std::runtime_error("Euler Riemann problem produces a vacuum state") {}
};

double sound_speed(const Primitive& w, const Params& params);
Conserved to_conserved(const Primitive& w, const Params& params);
Primitive to_primitive(const Conserved& q, const Params& params);
Conserved flux(const Conserved& q, const Params& params);

void validate(const RiemannProblem& rp);

// One-sided wave function f(p; w_side) and derivatives.
double wave_function(double p, const Primitive& side, const Params& params);
double wave_function_d1(double p, const Primitive& side, const Params& params);
double wave_function_d2(double p, const Primitive& side, const Params& params);

double pressure_function(double p, const RiemannProblem& rp);
std::pair<double, double> pressure_function_derivatives(double p, const RiemannProblem& rp);
std::pair<double, double> pressure_function_pair(double p, const RiemannProblem& rp);

std::pair<WaveType, WaveType> classify_waves(const RiemannProblem& rp);

// True iff 2(a_l + a_r)/(gamma - 1) > u_r - u_l.
bool check_pressure_positivity(const RiemannProblem& rp);

// Closed-form root of phi under the two-rarefaction assumption; an upper
// bound for p*.
double p_two_rarefaction(const RiemannProblem& rp);

// u* and the densities on either side of the contact for a given p*.
StarState star_closures(double p_star, const RiemannProblem& rp);

class PressureObjective {
 public:
  explicit PressureObjective(const RiemannProblem& rp) : rp_(&rp) {}
  std::pair<double, double> eval_pair(double p) {
    ++evals_;
    return pressure_function_pair(p, *rp_);
  }
  double eval_value(double p) {
    ++evals_;
    return pressure_function(p, *rp_);
  }
  double eval_deriv(double p) {
    ++evals_;
    return pressure_function_derivatives(p, *rp_).first;
  }
  int evals() const { return evals_; }
  void add_evals(int n) { evals_ += n; }

 private:
  const RiemannProblem* rp_;
  int evals_ = 0;
};

Primitive sample_solution(const StarState& star, const RiemannProblem& rp, double xi);

}  // namespace riemann::euler

#endif
