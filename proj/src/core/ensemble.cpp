#include "ensemble.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "guess.hpp"
#include "solver.hpp"

namespace riemann::ensemble {

namespace {

bool has_shock(const swe::RiemannProblem& rp) {
  return swe::depth_function(std::min(rp.left.h, rp.right.h), rp) <= 0.0;
}

bool has_shock(const euler::RiemannProblem& rp) {
  return euler::pressure_function(std::min(rp.left.p, rp.right.p), rp) <= 0.0;
}

}  // namespace

SweSet generate_swe(const GenerateSpec& spec, const swe::Params& params) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> depth_exp(-4.0, 4.0);
  std::uniform_real_distribution<double> vel_exp(-2.0, 2.0);
  std::uniform_real_distribution<double> weak_depth(0.1, 1.0);

  SweSet set;
  set.problems.reserve(spec.count);
  set.weak.reserve(spec.count);
  while (set.problems.size() < spec.count) {
    const bool weak = u01(rng) < spec.weak_fraction;
    swe::RiemannProblem rp;
    rp.params = params;
    if (weak) {
      rp.left.h = weak_depth(rng);
      rp.right.h = weak_depth(rng);
    } else {
      rp.left.h = std::pow(10.0, depth_exp(rng));
      rp.right.h = std::pow(10.0, depth_exp(rng));
      const double speed = std::pow(10.0, vel_exp(rng));
      rp.left.u = speed;
      rp.right.u = -speed;
    }
    if (!swe::check_depth_positivity(rp) || !has_shock(rp)) continue;
    set.problems.push_back(rp);
    set.weak.push_back(weak ? 1 : 0);
  }
  return set;
}

EulerSet generate_euler(const GenerateSpec& spec, const euler::Params& params) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> pressure_exp(-4.0, 4.0);
  std::uniform_real_distribution<double> vel_exp(-2.0, 2.0);
  std::uniform_real_distribution<double> strong_rho(0.01, 0.9);
  std::uniform_real_distribution<double> weak_p(0.1, 1.0);
  std::uniform_real_distribution<double> weak_rho(0.1, 0.9);

  EulerSet set;
  set.problems.reserve(spec.count);
  set.weak.reserve(spec.count);
  while (set.problems.size() < spec.count) {
    const bool weak = u01(rng) < spec.weak_fraction;
    euler::RiemannProblem rp;
    rp.params = params;
    if (weak) {
      rp.left.rho = weak_rho(rng);
      rp.left.p = weak_p(rng);
      rp.right.rho = weak_rho(rng);
      rp.right.p = weak_p(rng);
    } else {
      rp.left.rho = strong_rho(rng);
      rp.left.p = std::pow(10.0, pressure_exp(rng));
      rp.right.rho = strong_rho(rng);
      rp.right.p = std::pow(10.0, pressure_exp(rng));
      const double speed = std::pow(10.0, vel_exp(rng));
      rp.left.u = speed;
      rp.right.u = -speed;
    }
    if (!euler::check_pressure_positivity(rp) || !has_shock(rp)) continue;
    set.problems.push_back(rp);
    set.weak.push_back(weak ? 1 : 0);
  }
  return set;
}

namespace {

template <class Phi>
double bisect(double lo, double hi, Phi&& phi) {
  while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at roundoff resolution
    (phi(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double oracle_root(const swe::RiemannProblem& rp) {
  const double h_min = std::min(rp.left.h, rp.right.h);
  const double h_rr = swe::h_two_rarefaction(rp);
  if (swe::depth_function(h_min, rp) > 0.0) return h_rr;
  return bisect(h_min, h_rr, [&](double h) { return swe::depth_function(h, rp); });
}

double oracle_root(const euler::RiemannProblem& rp) {
  const double p_min = std::min(rp.left.p, rp.right.p);
  const double p_rr = euler::p_two_rarefaction(rp);
  if (euler::pressure_function(p_min, rp) > 0.0) return p_rr;
  return bisect(p_min, p_rr, [&](double p) { return euler::pressure_function(p, rp); });
}

std::vector<double> compute_oracles(const SweSet& set) {
  std::vector<double> roots;
  roots.reserve(set.problems.size());
  for (const auto& rp : set.problems) roots.push_back(oracle_root(rp));
  return roots;
}

std::vector<double> compute_oracles(const EulerSet& set) {
  std::vector<double> roots;
  roots.reserve(set.problems.size());
  for (const auto& rp : set.problems) roots.push_back(oracle_root(rp));
  return roots;
}

namespace {

template <class Set, class GuessFn>
std::vector<GuessRow> bench_guesses_impl(const Set& set, const std::vector<double>& oracle,
                                         const std::vector<GuessKind>& kinds, GuessFn&& do_guess) {
  std::vector<GuessRow> rows;
  for (GuessKind kind : kinds) {
    GuessRow row;
    row.kind = kind;
    double sum_weak = 0.0, sum_strong = 0.0, sum_evals = 0.0;
    std::size_t n_weak = 0, n_strong = 0;
    for (std::size_t i = 0; i < set.problems.size(); ++i) {
      const guess::GuessResult g = do_guess(kind, set.problems[i]);
      const double err = std::abs(g.value - oracle[i]) / oracle[i];
      sum_evals += g.phi_evals;
      if (set.weak[i]) {
        sum_weak += err;
        ++n_weak;
      } else {
        sum_strong += err;
        ++n_strong;
      }
    }
    row.arie_weak = n_weak ? sum_weak / n_weak : 0.0;
    row.arie_strong = n_strong ? sum_strong / n_strong : 0.0;
    row.mean_phi_evals = set.problems.empty() ? 0.0 : sum_evals / set.problems.size();
    rows.push_back(row);
  }
  return rows;
}

template <class Set, class SolveFn>
std::vector<SchemeRow> bench_schemes_impl(const Set& set, const std::vector<double>& oracle,
                                          const std::vector<Combo>& combos, SolveFn&& do_solve) {
  using clock = std::chrono::steady_clock;
  std::vector<SchemeRow> rows;
  for (const Combo& combo : combos) {
    SchemeRow row;
    row.combo = combo;
    if (!set.problems.empty()) do_solve(combo, set.problems.front(), nullptr);  // warm-up
    double sum_iter = 0.0, sum_evals = 0.0;
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < set.problems.size(); ++i) {
      rootfind::SolveReport rep;
      if (do_solve(combo, set.problems[i], &rep)) {
        ++row.solved;
        sum_iter += rep.iterations;
        sum_evals += rep.function_evals;
        row.max_rel_error =
            std::max(row.max_rel_error, std::abs(rep.root - oracle[i]) / oracle[i]);
      } else {
        ++row.failures;
      }
    }
    row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    if (row.solved) {
      row.mean_iterations = sum_iter / row.solved;
      row.mean_evals = sum_evals / row.solved;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<GuessRow> bench_guesses(const SweSet& set, const std::vector<double>& oracle,
                                    const std::vector<GuessKind>& kinds) {
  return bench_guesses_impl(set, oracle, kinds, [](GuessKind kind, const swe::RiemannProblem& rp) {
    return guess::swe_guess(kind, rp);
  });
}

std::vector<GuessRow> bench_guesses(const EulerSet& set, const std::vector<double>& oracle,
                                    const std::vector<GuessKind>& kinds) {
  return bench_guesses_impl(set, oracle, kinds,
                            [](GuessKind kind, const euler::RiemannProblem& rp) {
                              return guess::euler_guess(kind, rp);
                            });
}

std::vector<SchemeRow> bench_schemes(const SweSet& set, const std::vector<double>& oracle,
                                     const std::vector<Combo>& combos,
                                     const rootfind::ToleranceSpec& tol) {
  return bench_schemes_impl(
      set, oracle, combos,
      [&tol](const Combo& combo, const swe::RiemannProblem& rp, rootfind::SolveReport* out) {
        try {
          const solver::SweSolution sol = solver::solve_star(rp, combo.guess, combo.scheme, tol);
          if (out) *out = sol.report;
          return true;
        } catch (const rootfind::NonConvergenceError&) {
          return false;
        }
      });
}

std::vector<SchemeRow> bench_schemes(const EulerSet& set, const std::vector<double>& oracle,
                                     const std::vector<Combo>& combos,
                                     const rootfind::ToleranceSpec& tol) {
  return bench_schemes_impl(
      set, oracle, combos,
      [&tol](const Combo& combo, const euler::RiemannProblem& rp, rootfind::SolveReport* out) {
        try {
          const solver::EulerSolution sol = solver::solve_star(rp, combo.guess, combo.scheme, tol);
          if (out) *out = sol.report;
          return true;
        } catch (const rootfind::NonConvergenceError&) {
          return false;
        }
      });
}

}  // namespace riemann::ensemble
