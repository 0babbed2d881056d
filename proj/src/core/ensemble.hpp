// Random Riemann-problem ensembles and the benchmark harness that measures
// initial-guess quality (average relative initial error) and per-scheme
// iteration counts against a bisection oracle.

#ifndef RIEMANN_CORE_ENSEMBLE_HPP
#define RIEMANN_CORE_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

#include "euler.hpp"
#include "kinds.hpp"
#include "rootfind.hpp"
#include "swe.hpp"

namespace riemann::ensemble {

struct GenerateSpec {
  std::size_t count = 100000;
  std::uint64_t seed = 0;
  double weak_fraction = 0.8;  // probability of a weak-wave draw
};

// Draw order per problem is fixed so that a seed pins the whole ensemble:
// weak/strong Bernoulli, then the left state, the right state, and the
// velocities.  Draws whose solution contains no shock are rejected and
// redrawn (velocities always converge here, so this almost never triggers).
//
// weak:   h ~ U[0.1, 1] per side, u = 0
// strong: h = 10^k, k ~ U[-4, 4] per side; u_l = 10^a = -u_r, a ~ U[-2, 2]
struct SweSet {
  std::vector<swe::RiemannProblem> problems;
  std::vector<std::uint8_t> weak;
};

// weak:   p ~ U[0.1, 1], rho ~ U[0.1, 0.9] per side, u = 0
// strong: p = 10^k, k ~ U[-4, 4], rho ~ U[0.01, 0.9] per side;
//         u_l = 10^a = -u_r, a ~ U[-2, 2]
struct EulerSet {
  std::vector<euler::RiemannProblem> problems;
  std::vector<std::uint8_t> weak;
};

SweSet generate_swe(const GenerateSpec& spec, const swe::Params& params = {});
EulerSet generate_euler(const GenerateSpec& spec, const euler::Params& params = {});

// Bisection on [min state, two-rarefaction value] down to a relative interval
// width of 1e-14; independent of the Newton-type machinery.
double oracle_root(const swe::RiemannProblem& rp);
double oracle_root(const euler::RiemannProblem& rp);

std::vector<double> compute_oracles(const SweSet& set);
std::vector<double> compute_oracles(const EulerSet& set);

struct GuessRow {
  GuessKind kind = GuessKind::RR;
  double arie_weak = 0.0;    // mean |guess - root| / root over the weak subset
  double arie_strong = 0.0;  // and over the strong subset
  double mean_phi_evals = 0.0;
};

std::vector<GuessRow> bench_guesses(const SweSet& set, const std::vector<double>& oracle,
                                    const std::vector<GuessKind>& kinds);
std::vector<GuessRow> bench_guesses(const EulerSet& set, const std::vector<double>& oracle,
                                    const std::vector<GuessKind>& kinds);

struct Combo {
  GuessKind guess = GuessKind::SS;
  SchemeKind scheme = SchemeKind::PositiveNewton;
};

struct SchemeRow {
  Combo combo;
  std::size_t solved = 0;
  std::size_t failures = 0;        // non-convergence within the iteration cap
  double mean_iterations = 0.0;    // over converged problems
  double mean_evals = 0.0;
  double max_rel_error = 0.0;      // vs the oracle, converged problems only
  double seconds = 0.0;            // timed pass, solver calls only
};

std::vector<SchemeRow> bench_schemes(const SweSet& set, const std::vector<double>& oracle,
                                     const std::vector<Combo>& combos,
                                     const rootfind::ToleranceSpec& tol);
std::vector<SchemeRow> bench_schemes(const EulerSet& set, const std::vector<double>& oracle,
                                     const std::vector<Combo>& combos,
                                     const rootfind::ToleranceSpec& tol);

}  // namespace riemann::ensemble

#endif
