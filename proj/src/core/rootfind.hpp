// Scalar root-finding schemes for monotone concave objectives.
//
// All schemes operate on an objective exposing
//   eval_pair(x)  -> {psi(x), psi'(x)}
//   eval_value(x) -> psi(x)
//   eval_deriv(x) -> psi'(x)
// with an internal counter that increments once per call of any of the three.
// Iteration counts are reported as doubles: the two-stage schemes count a
// half-step as 0.5.

#ifndef RIEMANN_CORE_ROOTFIND_HPP
#define RIEMANN_CORE_ROOTFIND_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace riemann::rootfind {

enum class TerminationMode { Residual, Stagnation, ScaledResidual };

struct ToleranceSpec {
  TerminationMode mode = TerminationMode::Residual;
  double eps_r = 1e-12;   // residual tolerance
  double eps_s = 1e-12;   // stagnation tolerance
  double eps_r1 = 1e-12;  // scaled-residual relative part
  double eps_r2 = 0.0;    // scaled-residual absolute part
  int max_iter = 20;
};

struct SolveReport {
  double root = 0.0;
  double iterations = 0.0;  // half-steps count 0.5
  int function_evals = 0;
  bool converged = false;
  double final_residual = 0.0;
};

struct NonConvergenceError : std::runtime_error {
  explicit NonConvergenceError(const SolveReport& r)
      : std::runtime_error("iteration cap reached without satisfying the termination criterion"),
        report(r) {}
  SolveReport report;  // carries the best iterate
};

// Stateful termination check.  |psi(x0)| must be recorded before the first
// call when the scaled-residual mode is in use.
class Terminator {
 public:
  Terminator(const ToleranceSpec& tol, double initial_residual)
      : tol_(tol), initial_residual_(std::abs(initial_residual)) {}

  // x_prev is the previous iterate (NaN on the very first check, in which
  // case the stagnation criterion cannot fire).
  bool done(double x_prev, double x, double psi_x) const {
    switch (tol_.mode) {
      case TerminationMode::Residual:
        return std::abs(psi_x) < tol_.eps_r;
      case TerminationMode::Stagnation: {
        if (std::isnan(x_prev)) return false;
        const double denom = 0.5 * std::abs(x + x_prev);
        if (denom == 0.0) return x == x_prev;
        return std::abs(x - x_prev) / denom < tol_.eps_s;
      }
      case TerminationMode::ScaledResidual:
        return std::abs(psi_x) < initial_residual_ * tol_.eps_r1 + tol_.eps_r2;
    }
    return false;
  }

 private:
  ToleranceSpec tol_;
  double initial_residual_;
};

// Newton iteration with the first step clamped from below, so that all
// iterates are positive and the sequence increases monotonically toward the
// root (the objective must be increasing and concave with the root above
// lower_bound).  The clamped first step doubles as the initial-guess
// correction: x0 <- max(lower_bound, x0 - psi(x0)/psi'(x0)).
template <class Objective>
SolveReport positive_newton(Objective& obj, double x0_raw, double lower_bound,
                            const ToleranceSpec& tol, std::vector<double>* trace = nullptr) {
  SolveReport rep;
  const int evals0 = obj.evals();
  auto [fx, dx] = obj.eval_pair(x0_raw);
  Terminator term(tol, fx);
  double x = x0_raw;
  double x_prev = std::nan("");
  if (trace) trace->push_back(x);
  int k = 0;
  while (!term.done(x_prev, x, fx)) {
    if (k >= tol.max_iter) {
      rep.root = x;
      rep.iterations = k;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = fx;
      throw NonConvergenceError(rep);
    }
    double next = x - fx / dx;
    if (k == 0) next = std::max(lower_bound, next);
    if (!(next > 0.0) || !std::isfinite(next))
      throw std::domain_error("positive Newton produced a non-positive iterate");
    x_prev = x;
    x = next;
    std::tie(fx, dx) = obj.eval_pair(x);
    ++k;
    if (trace) trace->push_back(x);
  }
  rep.root = x;
  rep.iterations = k;
  rep.function_evals = obj.evals() - evals0;
  rep.converged = true;
  rep.final_residual = fx;
  return rep;
}

// McDougall & Wotherspoon's predictor-corrector Newton variant.  The first
// iteration is a plain Newton step (the half iterate is defined to equal x0);
// afterwards each iteration costs one psi and one psi' evaluation, with the
// predictor reusing the derivative computed by the previous corrector.
template <class Objective>
SolveReport two_step_newton(Objective& obj, double x0, const ToleranceSpec& tol) {
  SolveReport rep;
  const int evals0 = obj.evals();
  auto [fx, dpred] = obj.eval_pair(x0);
  Terminator term(tol, fx);
  double x = x0;
  double x_prev = std::nan("");
  int k = 0;
  while (!term.done(x_prev, x, fx)) {
    if (k >= tol.max_iter) {
      rep.root = x;
      rep.iterations = k;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = fx;
      throw NonConvergenceError(rep);
    }
    // Predictor with the carried-over derivative; for k = 0 the half iterate
    // is x0 itself, so the corrector derivative stays psi'(x0) and the first
    // step is plain Newton with no extra derivative evaluation.
    const double x_half = (k == 0) ? x : x - fx / dpred;
    const double mid = 0.5 * (x + x_half);
    const double dcorr =
        (k == 0 || !std::isfinite(mid) || mid <= 0.0) ? dpred : obj.eval_deriv(mid);
    const double x_next = x - fx / dcorr;
    if (!std::isfinite(x_next) || x_next <= 0.0) {
      rep.root = x;
      rep.iterations = k;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = fx;
      throw NonConvergenceError(rep);
    }
    dpred = dcorr;  // next predictor reuses this corrector derivative
    x_prev = x;
    x = x_next;
    fx = obj.eval_value(x);
    ++k;
  }
  rep.root = x;
  rep.iterations = k;
  rep.function_evals = obj.evals() - evals0;
  rep.converged = true;
  rep.final_residual = fx;
  return rep;
}

namespace detail {
// Shared body for Ostrowski; stops either when converged or (when
// single_iteration is true) after one full iteration.
template <class Objective>
SolveReport ostrowski_impl(Objective& obj, double x0, const ToleranceSpec& tol,
                           bool single_iteration) {
  SolveReport rep;
  const int evals0 = obj.evals();
  auto [fx, dx] = obj.eval_pair(x0);
  Terminator term(tol, fx);
  double x = x0;
  double x_prev = std::nan("");
  double iters = 0.0;
  while (!term.done(x_prev, x, fx)) {
    if (iters >= tol.max_iter) {
      rep.root = x;
      rep.iterations = iters;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = fx;
      throw NonConvergenceError(rep);
    }
    const double y = x - fx / dx;  // half-step (a Newton step)
    if (!std::isfinite(y) || y <= 0.0) {
      // the raw Newton step left the domain
      rep.root = y;
      rep.iterations = iters + 0.5;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = std::nan("");
      if (single_iteration) return rep;  // caller must repair the iterate
      rep.root = x;
      rep.final_residual = fx;
      throw NonConvergenceError(rep);
    }
    const double fy = obj.eval_value(y);
    iters += 0.5;
    if (term.done(x, y, fy)) {
      rep.root = y;
      rep.iterations = iters;
      rep.function_evals = obj.evals() - evals0;
      rep.converged = true;
      rep.final_residual = fy;
      return rep;
    }
    const double denom = fx - 2.0 * fy;
    double z;
    if (std::abs(denom) < 1e-300 * (std::abs(fx) + std::abs(fy) + 1e-300)) {
      z = y - fy / dx;  // degenerate denominator: plain Newton step from y
    } else {
      z = y - (fy / dx) * (fx / denom);
    }
    iters += 0.5;
    x_prev = x;
    x = z;
    if (single_iteration) {
      // Hand the full-step iterate back unevaluated; the caller's follow-up
      // scheme re-checks convergence with its own first evaluation, so an
      // extra residual computation here would be redundant work.
      rep.root = x;
      rep.iterations = iters;
      rep.converged = false;
      rep.final_residual = std::nan("");
      rep.function_evals = obj.evals() - evals0;
      return rep;
    }
    if (!std::isfinite(x) || x <= 0.0) {
      rep.root = y;
      rep.iterations = iters;
      rep.function_evals = obj.evals() - evals0;
      rep.final_residual = fy;
      throw NonConvergenceError(rep);
    }
    std::tie(fx, dx) = obj.eval_pair(x);
  }
  rep.root = x;
  rep.iterations = iters;
  rep.function_evals = obj.evals() - evals0;
  rep.converged = true;
  rep.final_residual = fx;
  return rep;
}
}  // namespace detail

template <class Objective>
SolveReport ostrowski(Objective& obj, double x0, const ToleranceSpec& tol) {
  return detail::ostrowski_impl(obj, x0, tol, /*single_iteration=*/false);
}

// One full Ostrowski iteration, then positive Newton.  A non-finite or
// non-positive Ostrowski output is replaced by the lower bound before the
// Newton correction, making the positivity guard explicit.
template <class Objective>
SolveReport ostrowski_newton(Objective& obj, double x0, double lower_bound,
                             const ToleranceSpec& tol, std::vector<double>* trace = nullptr) {
  SolveReport first = detail::ostrowski_impl(obj, x0, tol, /*single_iteration=*/true);
  if (first.converged) return first;  // the half-step already satisfied the criterion
  double seed = first.root;
  if (!std::isfinite(seed) || seed <= 0.0) seed = lower_bound;
  try {
    SolveReport rep = positive_newton(obj, seed, lower_bound, tol, trace);
    rep.iterations += first.iterations;
    rep.function_evals += first.function_evals;
    return rep;
  } catch (NonConvergenceError& e) {
    e.report.iterations += first.iterations;
    e.report.function_evals += first.function_evals;
    throw;
  }
}

// Guermond & Popov style bracketing iteration: two Hermite quadratics pinch
// psi between them; their roots tighten the bracket with cubic convergence.
// Converges only when an endpoint satisfies the termination criterion; a
// collapsed bracket (or numerically invalid update) without that is reported
// as non-convergence, which does occur for extreme states at tight tolerances.
template <class Objective>
SolveReport bounding_polynomials(Objective& obj, double x_minus0, double x_plus0,
                                 const ToleranceSpec& tol,
                                 std::vector<std::pair<double, double>>* trace = nullptr) {
  SolveReport rep;
  const int evals0 = obj.evals();
  double xm = x_minus0, xp = x_plus0;
  auto [fm, dm] = obj.eval_pair(xm);
  auto [fp, dp] = obj.eval_pair(xp);
  Terminator term(tol, std::abs(fm) < std::abs(fp) ? fm : fp);
  double xm_prev = std::nan(""), xp_prev = std::nan("");
  int k = 0;
  if (trace) trace->push_back({xm, xp});

  auto finish = [&](double root, double residual) {
    rep.root = root;
    rep.iterations = k;
    rep.function_evals = obj.evals() - evals0;
    rep.converged = true;
    rep.final_residual = residual;
    return rep;
  };
  auto fail = [&]() -> NonConvergenceError {
    rep.root = std::abs(fm) < std::abs(fp) ? xm : xp;
    rep.iterations = k;
    rep.function_evals = obj.evals() - evals0;
    rep.final_residual = std::abs(fm) < std::abs(fp) ? fm : fp;
    return NonConvergenceError(rep);
  };

  while (true) {
    if (term.done(xm_prev, xm, fm)) return finish(xm, fm);
    if (term.done(xp_prev, xp, fp)) return finish(xp, fp);
    if (k >= tol.max_iter) throw fail();
    const double gap = xp - xm;
    // Once the bracket has collapsed to the tolerance scale no further
    // progress is possible; if neither end met the criterion, report failure.
    if (!(gap > tol.eps_r * 0.5 * (std::abs(xm) + std::abs(xp)))) throw fail();
    // Divided differences psi[xm,xm,xp] and psi[xm,xp,xp].
    const double slope = (fp - fm) / gap;
    const double ddm = (slope - dm) / gap;
    const double ddp = (dp - slope) / gap;
    const double disc_m = dm * dm - 4.0 * fm * ddm;
    const double disc_p = dp * dp - 4.0 * fp * ddp;
    if (!(disc_m >= 0.0) || !(disc_p >= 0.0)) throw fail();
    const double xm_new = xm - 2.0 * fm / (dm + std::sqrt(disc_m));
    const double xp_new = xp - 2.0 * fp / (dp + std::sqrt(disc_p));
    if (!std::isfinite(xm_new) || !std::isfinite(xp_new)) throw fail();
    // The exact updates keep the bracket nested; violation means the floating
    // point noise dominates and no further progress is possible.
    if (xm_new < xm || xp_new > xp || xm_new > xp_new) throw fail();
    xm_prev = xm;
    xp_prev = xp;
    xm = xm_new;
    xp = xp_new;
    std::tie(fm, dm) = obj.eval_pair(xm);
    std::tie(fp, dp) = obj.eval_pair(xp);
    ++k;
    if (trace) trace->push_back({xm, xp});
  }
}

}  // namespace riemann::rootfind

#endif
