// 1D wave-propagation finite-volume scheme (Godunov plus limited
// second-order correction waves) with reflecting walls, for shallow water
// and Euler, using either the exact iterative Riemann solver or an
// approximate one at each interface.  See LeVeque, "Finite Volume Methods
// for Hyperbolic Problems", ch. 6 and 15.

#ifndef RIEMANN_CORE_FV1D_HPP
#define RIEMANN_CORE_FV1D_HPP

#include <array>
#include <functional>
#include <vector>

#include "euler.hpp"
#include "swe.hpp"

namespace riemann::fv1d {

enum class FluxSolver { Exact, Roe, Hlle };

enum class Limiter { None, Minmod, MC };

// Default limiter is minmod: MC's steepening can drive the cell ahead of a
// very strong shock toward vacuum (the blast cases below have pressure
// ratios of order 10^3).
struct Options {
  FluxSolver flux = FluxSolver::Exact;
  int order = 2;  // 1: Godunov, 2: add limited correction waves
  Limiter limiter = Limiter::Minmod;
  double cfl = 0.9;
};

struct SweSetup {
  double x_lo = 0.0, x_hi = 1.0, t_end = 1.0;
  swe::Params params;
  std::function<swe::Primitive(double)> init;
};

struct EulerSetup {
  double x_lo = 0.0, x_hi = 1.0, t_end = 1.0;
  euler::Params params;
  std::function<euler::Primitive(double)> init;
};

struct Result {
  int cells = 0;
  double x_lo = 0.0, dx = 0.0;
  std::vector<std::array<double, 3>> q;  // conserved cell averages
  int steps = 0;
  double wall_seconds = 0.0;  // whole time loop, single-threaded
  double mass_initial = 0.0;
  double mass_final = 0.0;
};

Result run(const SweSetup& setup, int cells, const Options& opt);
Result run(const EulerSetup& setup, int cells, const Options& opt);

// Dam-break style three-state setups used by the benchmarks.
SweSetup swe_blast();
EulerSetup euler_blast();

struct ConvergenceRow {
  int cells = 0;
  double l2 = 0.0;
  double linf = 0.0;
};

// Error of each run against a finer reference (cell counts must divide the
// reference's) by averaging the reference onto the coarse grid.  Norms are
// taken on component `field` (0 = depth/density).
std::vector<ConvergenceRow> convergence_errors(const std::vector<Result>& runs,
                                               const Result& reference, int field = 0);

}  // namespace riemann::fv1d

#endif
