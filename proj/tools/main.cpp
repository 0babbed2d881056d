// Command-line front end; links only against the public C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riemann/riemann.h"

namespace {

int status_exit_code(rmn_status st) {
  switch (st) {
    case RMN_OK: return 0;
    case RMN_ERR_INVALID_ARGUMENT: return 2;
    case RMN_ERR_DRY_STATE: return 3;
    case RMN_ERR_VACUUM: return 4;
    case RMN_ERR_NO_CONVERGENCE: return 5;
    case RMN_ERR_RUNTIME: return 1;
  }
  return 1;
}

int fail(rmn_status st) {
  std::cerr << "error: " << rmn_last_error() << "\n";
  return status_exit_code(st);
}

std::vector<double> parse_state(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  return vals;
}

int write_report(rmn_report* report, const std::string& format, const std::string& out_path) {
  char* text = nullptr;
  const rmn_status st = rmn_report_render(report, format.c_str(), &text);
  rmn_report_free(report);
  if (st != RMN_OK) return fail(st);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      rmn_string_free(text);
      return 1;
    }
    out << text;
  }
  rmn_string_free(text);
  return 0;
}

const std::map<std::string, rmn_guess> guess_names = {
    {"RR", RMN_GUESS_RR}, {"AV", RMN_GUESS_AV},     {"QA", RMN_GUESS_QA},  {"PV", RMN_GUESS_PV},
    {"SS", RMN_GUESS_SS}, {"CC", RMN_GUESS_CC},     {"HLLE", RMN_GUESS_HLLE}};

const std::map<std::string, rmn_scheme> scheme_names = {
    {"newton", RMN_SCHEME_NEWTON},
    {"two-step", RMN_SCHEME_TWO_STEP},
    {"ostrowski", RMN_SCHEME_OSTROWSKI},
    {"ostrowski-newton", RMN_SCHEME_OSTROWSKI_NEWTON},
    {"bounding-polynomials", RMN_SCHEME_BOUNDING_POLYNOMIALS},
    {"gottlieb-groth", RMN_SCHEME_GOTTLIEB_GROTH},
    {"van-leer", RMN_SCHEME_VAN_LEER}};

const std::map<std::string, rmn_system> system_names = {{"swe", RMN_SYSTEM_SWE},
                                                        {"euler", RMN_SYSTEM_EULER}};

const std::map<std::string, rmn_flux> flux_names = {
    {"exact", RMN_FLUX_EXACT}, {"roe", RMN_FLUX_ROE}, {"hlle", RMN_FLUX_HLLE}};

const std::map<std::string, rmn_limiter> limiter_names = {
    {"none", RMN_LIMITER_NONE}, {"minmod", RMN_LIMITER_MINMOD}, {"mc", RMN_LIMITER_MC}};

const std::map<std::string, rmn_case> case_names = {{"swe-blast", RMN_CASE_SWE_BLAST},
                                                    {"euler-blast", RMN_CASE_EULER_BLAST}};

const std::map<std::string, rmn_termination> mode_names = {
    {"residual", RMN_TERM_RESIDUAL},
    {"stagnation", RMN_TERM_STAGNATION},
    {"scaled-residual", RMN_TERM_SCALED_RESIDUAL}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate Riemann solvers for shallow water and Euler"};
  app.require_subcommand(1);

  rmn_tolerance tol;
  rmn_tolerance_default(&tol);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a single Riemann problem");
  rmn_system sys = RMN_SYSTEM_SWE;
  std::string left_text, right_text;
  rmn_guess guess = RMN_GUESS_SS;
  rmn_scheme scheme = RMN_SCHEME_NEWTON;
  double gravity = 1.0, gamma_gas = 1.4, sample_xi = 0.0;
  bool do_sample = false;
  solve->add_option("--system", sys, "swe or euler")
      ->transform(CLI::CheckedTransformer(system_names))
      ->required();
  solve->add_option("--left", left_text, "left state: h,u[,v] (swe) or rho,u,p (euler)")
      ->required();
  solve->add_option("--right", right_text, "right state")->required();
  solve->add_option("--guess", guess, "initial guess")
      ->transform(CLI::CheckedTransformer(guess_names));
  solve->add_option("--scheme", scheme, "iterative scheme")
      ->transform(CLI::CheckedTransformer(scheme_names));
  solve->add_option("--gravity", gravity, "gravitational acceleration (swe)");
  solve->add_option("--gamma", gamma_gas, "ratio of specific heats (euler)");
  solve->add_option("--sample", sample_xi, "also sample the solution at ray xi = x/t")
      ->expected(1);
  solve->callback([&]() { do_sample = solve->count("--sample") > 0; });

  auto add_tol_flags = [&](CLI::App* cmd) {
    cmd->add_option("--eps", tol.eps_r, "residual tolerance (default 1e-12)");
    cmd->add_option("--eps-s", tol.eps_s, "stagnation tolerance");
    cmd->add_option("--mode", tol.mode, "termination criterion")
        ->transform(CLI::CheckedTransformer(mode_names));
    cmd->add_option("--max-iter", tol.max_iter, "iteration cap (default 20)");
  };
  add_tol_flags(solve);

  // shared bench flags
  size_t count = 100000;
  unsigned long long seed = 0;
  double weak_fraction = 0.8;
  std::string format = "md", out_path;
  auto add_bench_flags = [&](CLI::App* cmd) {
    cmd->add_option("--system", sys, "swe or euler")
        ->transform(CLI::CheckedTransformer(system_names))
        ->required();
    cmd->add_option("--n", count, "ensemble size (default 100000)");
    cmd->add_option("--seed", seed, "RNG seed (default 0)");
    cmd->add_option("--weak-fraction", weak_fraction, "weak-wave draw probability (default 0.8)");
    cmd->add_option("--format", format, "csv, json, or md (default md)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* bench_ig = app.add_subcommand("bench-ig", "initial-guess quality benchmark");
  add_bench_flags(bench_ig);

  auto* bench_iter = app.add_subcommand("bench-iter", "iteration-count benchmark");
  add_bench_flags(bench_iter);
  add_tol_flags(bench_iter);

  // fv flags
  rmn_case fv_case = RMN_CASE_SWE_BLAST;
  rmn_fv_options fv_opt;
  rmn_fv_options_default(&fv_opt);
  int cells = 4050, ref_cells = 4050;
  std::vector<int> grids = {50, 150, 450, 1350};
  auto add_fv_flags = [&](CLI::App* cmd) {
    cmd->add_option("--case", fv_case, "swe-blast or euler-blast")
        ->transform(CLI::CheckedTransformer(case_names))
        ->required();
    cmd->add_option("--flux", fv_opt.flux, "exact, roe, or hlle (default exact)")
        ->transform(CLI::CheckedTransformer(flux_names));
    cmd->add_option("--order", fv_opt.order, "1 or 2 (default 2)");
    cmd->add_option("--limiter", fv_opt.limiter, "none, minmod, or mc (default minmod)")
        ->transform(CLI::CheckedTransformer(limiter_names));
    cmd->add_option("--cfl", fv_opt.cfl, "CFL number (default 0.9)");
    cmd->add_option("--t-end", fv_opt.t_end, "override the case's final time");
    cmd->add_option("--format", format, "csv, json, or md (default md)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* fv_run = app.add_subcommand("fv-run", "run a finite-volume blast case");
  fv_run->add_option("--cells", cells, "cell count (default 4050)");
  add_fv_flags(fv_run);

  auto* fv_converge = app.add_subcommand("fv-converge", "self-convergence error table");
  fv_converge->add_option("--grids", grids, "comma-separated grids (default 50,150,450,1350)")
      ->delimiter(',');
  fv_converge->add_option("--ref", ref_cells, "reference cell count (default 4050)");
  add_fv_flags(fv_converge);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (solve->parsed()) {
    rmn_problem problem;
    rmn_problem_default(&problem, sys);
    problem.gravity = gravity;
    problem.gamma_gas = gamma_gas;
    const std::vector<double> l = parse_state(left_text), r = parse_state(right_text);
    if (l.size() < 2 || l.size() > 3 || r.size() < 2 || r.size() > 3 ||
        (sys == RMN_SYSTEM_EULER && (l.size() != 3 || r.size() != 3))) {
      std::cerr << "error: states need 2-3 (swe) or 3 (euler) components\n";
      return 2;
    }
    for (size_t i = 0; i < l.size(); ++i) problem.left[i] = l[i];
    for (size_t i = 0; i < r.size(); ++i) problem.right[i] = r[i];

    rmn_solve_result res;
    const rmn_status st = rmn_solve(&problem, guess, scheme, &tol, &res);
    if (st != RMN_OK) return fail(st);
    const bool is_swe = sys == RMN_SYSTEM_SWE;
    std::printf("%s = %.15g\n", is_swe ? "h*" : "p*", res.star);
    std::printf("u* = %.15g\n", res.u_star);
    if (!is_swe) {
      std::printf("rho*_left = %.15g\n", res.left_value);
      std::printf("rho*_right = %.15g\n", res.right_value);
    }
    std::printf("left wave: %s\n", res.left_is_shock ? "shock" : "rarefaction");
    std::printf("right wave: %s\n", res.right_is_shock ? "shock" : "rarefaction");
    std::printf("iterations = %g, function evals = %d, residual = %.3g\n", res.iterations,
                res.function_evals, res.final_residual);
    if (do_sample) {
      double state[3];
      const rmn_status sst = rmn_sample(&problem, &res, sample_xi, state);
      if (sst != RMN_OK) return fail(sst);
      std::printf("state at xi=%g: %.15g, %.15g, %.15g\n", sample_xi, state[0], state[1],
                  state[2]);
    }
    return 0;
  }

  rmn_report* report = nullptr;
  rmn_status st = RMN_OK;
  if (bench_ig->parsed()) {
    st = rmn_bench_guesses(sys, count, seed, weak_fraction, &report);
  } else if (bench_iter->parsed()) {
    st = rmn_bench_schemes(sys, count, seed, weak_fraction, &tol, &report);
  } else if (fv_run->parsed()) {
    st = rmn_fv_run(fv_case, cells, &fv_opt, &report);
  } else if (fv_converge->parsed()) {
    st = rmn_fv_converge(fv_case, grids.data(), grids.size(), ref_cells, &fv_opt, &report);
  }
  if (st != RMN_OK) return fail(st);
  return write_report(report, format, out_path);
}
