#include "riemann/riemann.h"

#include <cstring>
#include <string>

#include "core/ensemble.hpp"
#include "core/fv1d.hpp"
#include "core/report.hpp"
#include "core/solver.hpp"

namespace {

thread_local std::string g_last_error;

riemann::rootfind::ToleranceSpec to_tol(const rmn_tolerance* tol) {
  riemann::rootfind::ToleranceSpec spec;
  if (!tol) return spec;
  switch (tol->mode) {
    case RMN_TERM_RESIDUAL:
      spec.mode = riemann::rootfind::TerminationMode::Residual;
      break;
    case RMN_TERM_STAGNATION:
      spec.mode = riemann::rootfind::TerminationMode::Stagnation;
      break;
    case RMN_TERM_SCALED_RESIDUAL:
      spec.mode = riemann::rootfind::TerminationMode::ScaledResidual;
      break;
    default:
      throw std::invalid_argument("invalid termination mode");
  }
  spec.eps_r = tol->eps_r;
  spec.eps_s = tol->eps_s;
  spec.eps_r1 = tol->eps_r1;
  spec.eps_r2 = tol->eps_r2;
  spec.max_iter = tol->max_iter;
  return spec;
}

riemann::GuessKind to_guess(rmn_guess g) {
  switch (g) {
    case RMN_GUESS_RR: return riemann::GuessKind::RR;
    case RMN_GUESS_AV: return riemann::GuessKind::AV;
    case RMN_GUESS_QA: return riemann::GuessKind::QA;
    case RMN_GUESS_PV: return riemann::GuessKind::PV;
    case RMN_GUESS_SS: return riemann::GuessKind::SS;
    case RMN_GUESS_CC: return riemann::GuessKind::CC;
    case RMN_GUESS_HLLE: return riemann::GuessKind::HLLE;
  }
  throw std::invalid_argument("invalid guess kind");
}

riemann::SchemeKind to_scheme(rmn_scheme s) {
  switch (s) {
    case RMN_SCHEME_NEWTON: return riemann::SchemeKind::PositiveNewton;
    case RMN_SCHEME_TWO_STEP: return riemann::SchemeKind::TwoStepNewton;
    case RMN_SCHEME_OSTROWSKI: return riemann::SchemeKind::Ostrowski;
    case RMN_SCHEME_OSTROWSKI_NEWTON: return riemann::SchemeKind::OstrowskiNewton;
    case RMN_SCHEME_BOUNDING_POLYNOMIALS: return riemann::SchemeKind::BoundingPolynomials;
    case RMN_SCHEME_GOTTLIEB_GROTH: return riemann::SchemeKind::GottliebGroth;
    case RMN_SCHEME_VAN_LEER: return riemann::SchemeKind::VanLeer;
  }
  throw std::invalid_argument("invalid scheme kind");
}

riemann::swe::RiemannProblem swe_problem(const rmn_problem& p) {
  riemann::swe::RiemannProblem rp;
  rp.left = {p.left[0], p.left[1], p.left[2]};
  rp.right = {p.right[0], p.right[1], p.right[2]};
  rp.params.g = p.gravity;
  return rp;
}

riemann::euler::RiemannProblem euler_problem(const rmn_problem& p) {
  riemann::euler::RiemannProblem rp;
  rp.left = {p.left[0], p.left[1], p.left[2]};
  rp.right = {p.right[0], p.right[1], p.right[2]};
  rp.params.gamma = p.gamma_gas;
  return rp;
}

template <class Fn>
rmn_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RMN_OK;
  } catch (const riemann::swe::DryStateError& e) {
    g_last_error = e.what();
    return RMN_ERR_DRY_STATE;
  } catch (const riemann::euler::VacuumError& e) {
    g_last_error = e.what();
    return RMN_ERR_VACUUM;
  } catch (const riemann::rootfind::NonConvergenceError& e) {
    g_last_error = e.what();
    return RMN_ERR_NO_CONVERGENCE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RMN_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return RMN_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RMN_ERR_RUNTIME;
  }
}

std::string fmt(double v, int prec = 12) { return riemann::report::format_double(v, prec); }

}  // namespace

struct rmn_report {
  riemann::report::Table table;
};

extern "C" {

void rmn_tolerance_default(rmn_tolerance* tol) {
  if (!tol) return;
  tol->mode = RMN_TERM_RESIDUAL;
  tol->eps_r = 1e-12;
  tol->eps_s = 1e-12;
  tol->eps_r1 = 1e-12;
  tol->eps_r2 = 0.0;
  tol->max_iter = 20;
}

void rmn_problem_default(rmn_problem* problem, rmn_system system) {
  if (!problem) return;
  std::memset(problem, 0, sizeof(*problem));
  problem->system = system;
  problem->gravity = 1.0;
  problem->gamma_gas = 1.4;
  if (system == RMN_SYSTEM_SWE) {
    problem->left[0] = problem->right[0] = 1.0;
  } else {
    problem->left[0] = problem->right[0] = 1.0;
    problem->left[2] = problem->right[2] = 1.0;
  }
}

rmn_status rmn_solve(const rmn_problem* problem, rmn_guess guess, rmn_scheme scheme,
                     const rmn_tolerance* tol, rmn_solve_result* result) {
  if (!problem || !result) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const riemann::rootfind::ToleranceSpec spec = to_tol(tol);
    if (problem->system == RMN_SYSTEM_SWE) {
      const riemann::solver::SweSolution sol =
          riemann::solver::solve_star(swe_problem(*problem), to_guess(guess), to_scheme(scheme),
                                      spec);
      result->star = sol.star.h_star;
      result->u_star = sol.star.u_star;
      result->left_value = sol.star.v_left;
      result->right_value = sol.star.v_right;
      result->left_is_shock = sol.star.left_wave == riemann::swe::WaveType::Shock;
      result->right_is_shock = sol.star.right_wave == riemann::swe::WaveType::Shock;
      result->iterations = sol.report.iterations;
      result->function_evals = sol.report.function_evals;
      result->converged = sol.report.converged;
      result->final_residual = sol.report.final_residual;
    } else {
      const riemann::solver::EulerSolution sol =
          riemann::solver::solve_star(euler_problem(*problem), to_guess(guess), to_scheme(scheme),
                                      spec);
      result->star = sol.star.p_star;
      result->u_star = sol.star.u_star;
      result->left_value = sol.star.rho_star_l;
      result->right_value = sol.star.rho_star_r;
      result->left_is_shock = sol.star.left_wave == riemann::swe::WaveType::Shock;
      result->right_is_shock = sol.star.right_wave == riemann::swe::WaveType::Shock;
      result->iterations = sol.report.iterations;
      result->function_evals = sol.report.function_evals;
      result->converged = sol.report.converged;
      result->final_residual = sol.report.final_residual;
    }
  });
}

rmn_status rmn_sample(const rmn_problem* problem, const rmn_solve_result* result, double xi,
                      double out[3]) {
  if (!problem || !result || !out) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    using riemann::swe::WaveType;
    if (problem->system == RMN_SYSTEM_SWE) {
      riemann::swe::StarState star;
      star.h_star = result->star;
      star.u_star = result->u_star;
      star.v_left = result->left_value;
      star.v_right = result->right_value;
      star.left_wave = result->left_is_shock ? WaveType::Shock : WaveType::Rarefaction;
      star.right_wave = result->right_is_shock ? WaveType::Shock : WaveType::Rarefaction;
      const riemann::swe::Primitive w =
          riemann::swe::sample_solution(star, swe_problem(*problem), xi);
      out[0] = w.h;
      out[1] = w.u;
      out[2] = w.v;
    } else {
      riemann::euler::StarState star;
      star.p_star = result->star;
      star.u_star = result->u_star;
      star.rho_star_l = result->left_value;
      star.rho_star_r = result->right_value;
      star.left_wave = result->left_is_shock ? WaveType::Shock : WaveType::Rarefaction;
      star.right_wave = result->right_is_shock ? WaveType::Shock : WaveType::Rarefaction;
      const riemann::euler::Primitive w =
          riemann::euler::sample_solution(star, euler_problem(*problem), xi);
      out[0] = w.rho;
      out[1] = w.u;
      out[2] = w.p;
    }
  });
}

rmn_status rmn_bench_guesses(rmn_system system, size_t count, unsigned long long seed,
                             double weak_fraction, rmn_report** out) {
  if (!out) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    using namespace riemann;
    ensemble::GenerateSpec spec;
    spec.count = count;
    spec.seed = seed;
    spec.weak_fraction = weak_fraction;

    std::vector<GuessKind> kinds = {GuessKind::RR, GuessKind::AV, GuessKind::PV,
                                    GuessKind::SS, GuessKind::CC, GuessKind::HLLE};
    if (system == RMN_SYSTEM_SWE) kinds.insert(kinds.begin() + 2, GuessKind::QA);

    std::vector<ensemble::GuessRow> rows;
    if (system == RMN_SYSTEM_SWE) {
      const ensemble::SweSet set = ensemble::generate_swe(spec);
      rows = ensemble::bench_guesses(set, ensemble::compute_oracles(set), kinds);
    } else {
      const ensemble::EulerSet set = ensemble::generate_euler(spec);
      rows = ensemble::bench_guesses(set, ensemble::compute_oracles(set), kinds);
    }

    auto* rep = new rmn_report;
    rep->table.title = std::string("initial-guess quality, ") +
                       (system == RMN_SYSTEM_SWE ? "shallow water" : "Euler") +
                       ", n=" + std::to_string(count) + ", seed=" + std::to_string(seed);
    rep->table.columns = {"guess", "arie_weak_pct", "arie_strong_pct", "mean_phi_evals"};
    for (const auto& r : rows)
      rep->table.rows.push_back({to_string(r.kind), fmt(100.0 * r.arie_weak, 6),
                                 fmt(100.0 * r.arie_strong, 6), fmt(r.mean_phi_evals, 6)});
    *out = rep;
  });
}

rmn_status rmn_bench_schemes(rmn_system system, size_t count, unsigned long long seed,
                             double weak_fraction, const rmn_tolerance* tol, rmn_report** out) {
  if (!out) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    using namespace riemann;
    ensemble::GenerateSpec spec;
    spec.count = count;
    spec.seed = seed;
    spec.weak_fraction = weak_fraction;
    const rootfind::ToleranceSpec tspec = to_tol(tol);

    std::vector<ensemble::Combo> combos;
    const std::vector<GuessKind> newton_guesses =
        system == RMN_SYSTEM_SWE
            ? std::vector<GuessKind>{GuessKind::AV, GuessKind::RR, GuessKind::QA, GuessKind::CC,
                                     GuessKind::PV, GuessKind::SS, GuessKind::HLLE}
            : std::vector<GuessKind>{GuessKind::AV, GuessKind::RR, GuessKind::PV, GuessKind::SS,
                                     GuessKind::CC, GuessKind::HLLE};
    for (GuessKind g : newton_guesses) combos.push_back({g, SchemeKind::PositiveNewton});
    combos.push_back({GuessKind::SS, SchemeKind::TwoStepNewton});
    combos.push_back({GuessKind::SS, SchemeKind::Ostrowski});
    combos.push_back({GuessKind::SS, SchemeKind::OstrowskiNewton});
    combos.push_back({GuessKind::RR, SchemeKind::BoundingPolynomials});
    if (system == RMN_SYSTEM_EULER) {
      combos.push_back({GuessKind::RR, SchemeKind::GottliebGroth});
      combos.push_back({GuessKind::SS, SchemeKind::VanLeer});
    }

    std::vector<ensemble::SchemeRow> rows;
    if (system == RMN_SYSTEM_SWE) {
      const ensemble::SweSet set = ensemble::generate_swe(spec);
      rows = ensemble::bench_schemes(set, ensemble::compute_oracles(set), combos, tspec);
    } else {
      const ensemble::EulerSet set = ensemble::generate_euler(spec);
      rows = ensemble::bench_schemes(set, ensemble::compute_oracles(set), combos, tspec);
    }

    auto* rep = new rmn_report;
    rep->table.title = std::string("iteration counts, ") +
                       (system == RMN_SYSTEM_SWE ? "shallow water" : "Euler") +
                       ", n=" + std::to_string(count) + ", seed=" + std::to_string(seed) +
                       ", eps_r=" + fmt(tspec.eps_r, 3);
    rep->table.columns = {"guess",      "scheme",        "solved",  "failures",
                          "mean_iters", "mean_evals",    "max_rel_error", "seconds"};
    rep->table.nondeterministic_columns = {"seconds"};
    for (const auto& r : rows)
      rep->table.rows.push_back({to_string(r.combo.guess), to_string(r.combo.scheme),
                                 std::to_string(r.solved), std::to_string(r.failures),
                                 fmt(r.mean_iterations, 6), fmt(r.mean_evals, 6),
                                 fmt(r.max_rel_error, 6), fmt(r.seconds, 6)});
    *out = rep;
  });
}

void rmn_fv_options_default(rmn_fv_options* opt) {
  if (!opt) return;
  opt->flux = RMN_FLUX_EXACT;
  opt->order = 2;
  opt->limiter = RMN_LIMITER_MINMOD;
  opt->cfl = 0.9;
  opt->t_end = 0.0;
}

namespace {

riemann::fv1d::Options to_fv_options(const rmn_fv_options* opt) {
  riemann::fv1d::Options o;
  if (!opt) return o;
  switch (opt->flux) {
    case RMN_FLUX_EXACT: o.flux = riemann::fv1d::FluxSolver::Exact; break;
    case RMN_FLUX_ROE: o.flux = riemann::fv1d::FluxSolver::Roe; break;
    case RMN_FLUX_HLLE: o.flux = riemann::fv1d::FluxSolver::Hlle; break;
    default: throw std::invalid_argument("invalid flux solver");
  }
  switch (opt->limiter) {
    case RMN_LIMITER_NONE: o.limiter = riemann::fv1d::Limiter::None; break;
    case RMN_LIMITER_MINMOD: o.limiter = riemann::fv1d::Limiter::Minmod; break;
    case RMN_LIMITER_MC: o.limiter = riemann::fv1d::Limiter::MC; break;
    default: throw std::invalid_argument("invalid limiter");
  }
  if (opt->order != 1 && opt->order != 2) throw std::invalid_argument("order must be 1 or 2");
  o.order = opt->order;
  if (!(opt->cfl > 0.0 && opt->cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  o.cfl = opt->cfl;
  return o;
}

riemann::fv1d::Result run_case(rmn_case which, int cells, const rmn_fv_options* opt) {
  const riemann::fv1d::Options o = to_fv_options(opt);
  if (which == RMN_CASE_SWE_BLAST) {
    riemann::fv1d::SweSetup setup = riemann::fv1d::swe_blast();
    if (opt && opt->t_end > 0.0) setup.t_end = opt->t_end;
    return riemann::fv1d::run(setup, cells, o);
  }
  if (which == RMN_CASE_EULER_BLAST) {
    riemann::fv1d::EulerSetup setup = riemann::fv1d::euler_blast();
    if (opt && opt->t_end > 0.0) setup.t_end = opt->t_end;
    return riemann::fv1d::run(setup, cells, o);
  }
  throw std::invalid_argument("invalid case");
}

std::string case_name(rmn_case which) {
  return which == RMN_CASE_SWE_BLAST ? "swe-blast" : "euler-blast";
}

}  // namespace

rmn_status rmn_fv_run(rmn_case which, int cells, const rmn_fv_options* opt, rmn_report** out) {
  if (!out) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const riemann::fv1d::Result res = run_case(which, cells, opt);
    auto* rep = new rmn_report;
    rep->table.title = case_name(which) + ", cells=" + std::to_string(res.cells) +
                       ", steps=" + std::to_string(res.steps) + ", wall_s=" +
                       fmt(res.wall_seconds, 4) + ", mass_drift=" +
                       fmt((res.mass_final - res.mass_initial) / res.mass_initial, 4);
    rep->table.columns = which == RMN_CASE_SWE_BLAST
                             ? std::vector<std::string>{"x", "h", "hu", "hv"}
                             : std::vector<std::string>{"x", "rho", "rho_u", "E"};
    for (int i = 0; i < res.cells; ++i)
      rep->table.rows.push_back({fmt(res.x_lo + (i + 0.5) * res.dx, 9), fmt(res.q[i][0], 12),
                                 fmt(res.q[i][1], 12), fmt(res.q[i][2], 12)});
    *out = rep;
  });
}

rmn_status rmn_fv_converge(rmn_case which, const int* grids, size_t n_grids, int ref_cells,
                           const rmn_fv_options* opt, rmn_report** out) {
  if (!out || (!grids && n_grids)) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<riemann::fv1d::Result> runs;
    for (size_t i = 0; i < n_grids; ++i) runs.push_back(run_case(which, grids[i], opt));
    const riemann::fv1d::Result ref = run_case(which, ref_cells, opt);
    const auto rows = riemann::fv1d::convergence_errors(runs, ref);
    auto* rep = new rmn_report;
    rep->table.title = case_name(which) + " self-convergence, ref=" + std::to_string(ref_cells);
    rep->table.columns = {"cells", "l2", "linf"};
    for (const auto& r : rows)
      rep->table.rows.push_back({std::to_string(r.cells), fmt(r.l2, 9), fmt(r.linf, 9)});
    *out = rep;
  });
}

rmn_status rmn_report_render(const rmn_report* report, const char* format, char** out) {
  if (!report || !format || !out) {
    g_last_error = "null argument";
    return RMN_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const std::string text = riemann::report::render(report->table, format);
    *out = new char[text.size() + 1];
    std::memcpy(*out, text.c_str(), text.size() + 1);
  });
}

void rmn_string_free(char* s) { delete[] s; }

void rmn_report_free(rmn_report* report) { delete report; }

const char* rmn_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
