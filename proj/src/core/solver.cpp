#include "solver.hpp"

#include <cmath>
#include <limits>

namespace riemann::solver {

namespace {

template <class Objective, class UpperBracketFn>
rootfind::SolveReport dispatch(Objective& obj, SchemeKind scheme, double x0, double lower_bound,
                               UpperBracketFn&& upper_bracket,
                               const rootfind::ToleranceSpec& tol) {
  switch (scheme) {
    case SchemeKind::PositiveNewton:
      return rootfind::positive_newton(obj, x0, lower_bound, tol);
    case SchemeKind::TwoStepNewton:
      return rootfind::two_step_newton(obj, x0, tol);
    case SchemeKind::Ostrowski:
      return rootfind::ostrowski(obj, x0, tol);
    case SchemeKind::OstrowskiNewton:
      return rootfind::ostrowski_newton(obj, x0, lower_bound, tol);
    case SchemeKind::BoundingPolynomials:
      return rootfind::bounding_polynomials(obj, lower_bound, upper_bracket(), tol);
    default:
      throw std::invalid_argument("scheme not applicable here");
  }
}

}  // namespace

SweSolution solve_star(const swe::RiemannProblem& rp, GuessKind guess, SchemeKind scheme,
                       const rootfind::ToleranceSpec& tol) {
  swe::validate(rp);
  if (scheme == SchemeKind::GottliebGroth || scheme == SchemeKind::VanLeer)
    throw std::invalid_argument("scheme not applicable to shallow water");

  const double h_min = std::min(rp.left.h, rp.right.h);
  const double h_max = std::max(rp.left.h, rp.right.h);
  swe::DepthObjective obj(rp);
  guess::PhiCache cache;
  cache.at_min = obj.eval_value(h_min);

  SweSolution sol;
  if (cache.at_min > 0.0) {  // two rarefactions: closed form, no iteration
    // phi(h_min) <= 0 guarantees a wet state, so the dry-state check is only
    // needed on this branch
    if (!swe::check_depth_positivity(rp)) throw swe::DryStateError();
    sol.report.root = swe::h_two_rarefaction(rp);
    sol.report.converged = true;
    sol.report.function_evals = obj.evals();
    sol.star = swe::star_state_from_h(sol.report.root, rp);
    return sol;
  }

  double x0 = h_min;
  if (scheme != SchemeKind::BoundingPolynomials) {
    const guess::GuessResult g = guess::swe_guess(guess, rp, &cache);
    obj.add_evals(g.phi_evals);
    x0 = g.value;
  }
  const double lb = (!std::isnan(cache.at_max) && cache.at_max < 0.0) ? h_max : h_min;
  if (!std::isfinite(x0) || x0 <= 0.0) x0 = lb;

  try {
    sol.report = dispatch(obj, scheme, x0, lb, [&] { return swe::h_two_rarefaction(rp); }, tol);
  } catch (rootfind::NonConvergenceError& e) {
    e.report.function_evals = obj.evals();
    throw;
  }
  sol.report.function_evals = obj.evals();
  sol.star = swe::star_state_from_h(sol.report.root, rp);
  return sol;
}

EulerSolution solve_star(const euler::RiemannProblem& rp, GuessKind guess, SchemeKind scheme,
                         const rootfind::ToleranceSpec& tol) {
  euler::validate(rp);

  const double p_min = std::min(rp.left.p, rp.right.p);
  const double p_max = std::max(rp.left.p, rp.right.p);
  euler::PressureObjective obj(rp);
  guess::PhiCache cache;
  cache.at_min = obj.eval_value(p_min);

  EulerSolution sol;
  if (cache.at_min > 0.0) {
    // phi(p_min) <= 0 guarantees a non-vacuum state, so the vacuum check is
    // only needed on this branch
    if (!euler::check_pressure_positivity(rp)) throw euler::VacuumError();
    sol.report.root = euler::p_two_rarefaction(rp);
    sol.report.converged = true;
    sol.report.function_evals = obj.evals();
    sol.star = euler::star_closures(sol.report.root, rp);
    return sol;
  }

  if (scheme == SchemeKind::GottliebGroth) {
    sol = gottlieb_groth(rp, tol);
    sol.report.function_evals += obj.evals();
    return sol;
  }

  double x0 = p_min;
  if (scheme != SchemeKind::BoundingPolynomials) {
    const guess::GuessResult g = guess::euler_guess(guess, rp, &cache);
    obj.add_evals(g.phi_evals);
    x0 = g.value;
  }
  const double lb = (!std::isnan(cache.at_max) && cache.at_max < 0.0) ? p_max : p_min;
  if (!std::isfinite(x0) || x0 <= 0.0) x0 = lb;

  if (scheme == SchemeKind::VanLeer) {
    const int pre = obj.evals();
    sol = van_leer(rp, x0, tol);
    sol.report.function_evals += pre;
    return sol;
  }

  try {
    sol.report = dispatch(obj, scheme, x0, lb, [&] { return euler::p_two_rarefaction(rp); }, tol);
  } catch (rootfind::NonConvergenceError& e) {
    e.report.function_evals = obj.evals();
    throw;
  }
  sol.report.function_evals = obj.evals();
  sol.star = euler::star_closures(sol.report.root, rp);
  return sol;
}

// Newton iteration on the contact velocity u.  Each side expresses the star
// pressure it would need to match u (shock or rarefaction branch); the
// iteration drives the two pressures together.  See Gottlieb & Groth,
// J. Comput. Phys. 78 (1988).
EulerSolution gottlieb_groth(const euler::RiemannProblem& rp,
                             const rootfind::ToleranceSpec& tol) {
  euler::validate(rp);
  if (!euler::check_pressure_positivity(rp)) throw euler::VacuumError();
  const double gamma = rp.params.gamma;
  const double u_l = rp.left.u, u_r = rp.right.u;
  const double a_l = euler::sound_speed(rp.left, rp.params);
  const double a_r = euler::sound_speed(rp.right, rp.params);
  const double C_l = gamma * rp.left.p / a_l;
  const double C_r = gamma * rp.right.p / a_r;

  const double z1 = 2.0 / (gamma - 1.0);
  const double z2 = (a_r / a_l) * std::pow(rp.left.p / rp.right.p, (gamma - 1.0) / (2.0 * gamma));
  double u = ((u_l + z1 * a_l) * z2 + (u_r - z1 * a_r)) / (1.0 + z2);

  rootfind::SolveReport rep;
  double p_l_star = 0.0, p_r_star = 0.0, dp_l = 0.0, dp_r = 0.0;
  auto evaluate = [&]() {
    ++rep.function_evals;
    if (u <= u_l) {  // left shock
      const double z = 0.25 * (gamma + 1.0) * (u - u_l) / a_l;
      const double W = z - std::sqrt(1.0 + z * z);
      p_l_star = rp.left.p + C_l * (u - u_l) * W;
      dp_l = 2.0 * C_l * W * W * W / (1.0 + W * W);
    } else {  // left rarefaction
      const double a_star = a_l - 0.5 * (gamma - 1.0) * (u - u_l);
      if (!(a_star > 0.0)) throw rootfind::NonConvergenceError(rep);
      p_l_star = rp.left.p * std::pow(a_star / a_l, 2.0 * gamma / (gamma - 1.0));
      dp_l = -gamma * p_l_star / a_star;
    }
    if (u >= u_r) {  // right shock
      const double z = 0.25 * (gamma + 1.0) * (u - u_r) / a_r;
      const double W = z + std::sqrt(1.0 + z * z);
      p_r_star = rp.right.p + C_r * (u - u_r) * W;
      dp_r = 2.0 * C_r * W * W * W / (1.0 + W * W);
    } else {  // right rarefaction
      const double a_star = a_r + 0.5 * (gamma - 1.0) * (u - u_r);
      p_r_star = rp.right.p * std::pow(a_star / a_r, 2.0 * gamma / (gamma - 1.0));
      dp_r = gamma * p_r_star / a_star;
    }
    if (!std::isfinite(p_l_star) || !std::isfinite(p_r_star))
      throw rootfind::NonConvergenceError(rep);
  };

  evaluate();
  // iterations counts the side-pressure evaluation sweeps, including the one
  // performed on the linearized starting velocity
  int k = 1;
  while (std::abs((p_r_star - p_l_star) / p_r_star) >= tol.eps_r) {
    rep.root = p_r_star;
    rep.iterations = k;
    rep.final_residual = (p_r_star - p_l_star) / p_r_star;
    if (k > tol.max_iter) throw rootfind::NonConvergenceError(rep);
    u -= (p_l_star - p_r_star) / (dp_l - dp_r);
    if (!std::isfinite(u)) throw rootfind::NonConvergenceError(rep);
    ++k;
    evaluate();
  }
  rep.root = p_r_star;
  rep.iterations = k;
  rep.converged = true;
  rep.final_residual = (p_r_star - p_l_star) / p_r_star;

  EulerSolution sol;
  sol.report = rep;
  sol.star = euler::star_closures(rep.root, rp);
  sol.star.u_star = u;
  return sol;
}

// Newton iteration on the star pressure matching the contact velocities
// computed independently from each side (van Leer, J. Comput. Phys. 32,
// 1979, appendix).  The relative velocity mismatch is the stopping test,
// which is why this iteration stalls whenever the contact velocity is
// close to zero.
EulerSolution van_leer(const euler::RiemannProblem& rp, double p0,
                       const rootfind::ToleranceSpec& tol) {
  euler::validate(rp);
  if (!euler::check_pressure_positivity(rp)) throw euler::VacuumError();
  const double gamma = rp.params.gamma;

  struct Side {
    double p, rho, a, u;
    int sgn;  // -1 left, +1 right
  };
  const Side left{rp.left.p, rp.left.rho, euler::sound_speed(rp.left, rp.params), rp.left.u, -1};
  const Side right{rp.right.p, rp.right.rho, euler::sound_speed(rp.right, rp.params), rp.right.u,
                   +1};

  // u*(p) from one side and its derivative
  auto side_velocity = [&](const Side& s, double p) {
    double ustar, dudp;
    if (p >= s.p) {  // shock: mass flux M, u* = u -/+ (p - p_side)/M
      const double M2 = s.rho * (0.5 * (gamma + 1.0) * p + 0.5 * (gamma - 1.0) * s.p);
      const double M = std::sqrt(M2);
      ustar = s.u + s.sgn * (p - s.p) / M;
      dudp = s.sgn * 0.5 * (M2 + gamma * s.p * s.rho) / (M2 * M);
    } else {  // rarefaction
      const double ratio = std::pow(p / s.p, 0.5 * (gamma - 1.0) / gamma);
      ustar = s.u + s.sgn * 2.0 * s.a / (gamma - 1.0) * (ratio - 1.0);
      dudp = s.sgn * ratio * s.p / (s.rho * s.a * p);
    }
    return std::pair{ustar, dudp};
  };

  rootfind::SolveReport rep;
  double p = p0;
  if (!(p > 0.0) || !std::isfinite(p)) p = std::min(rp.left.p, rp.right.p);
  auto [ul_star, dul] = side_velocity(left, p);
  auto [ur_star, dur] = side_velocity(right, p);
  ++rep.function_evals;

  auto mismatch = [&]() {
    const double diff = std::abs(ur_star - ul_star);
    if (ur_star == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / std::abs(ur_star);
  };

  int k = 0;
  while (mismatch() >= tol.eps_r) {
    rep.root = p;
    rep.iterations = k;
    rep.final_residual = ur_star - ul_star;
    if (k >= tol.max_iter) throw rootfind::NonConvergenceError(rep);
    p -= (ul_star - ur_star) / (dul - dur);
    if (!(p > 0.0) || !std::isfinite(p)) throw rootfind::NonConvergenceError(rep);
    ++k;
    std::tie(ul_star, dul) = side_velocity(left, p);
    std::tie(ur_star, dur) = side_velocity(right, p);
    ++rep.function_evals;
  }
  rep.root = p;
  rep.iterations = k;
  rep.converged = true;
  rep.final_residual = ur_star - ul_star;

  EulerSolution sol;
  sol.report = rep;
  sol.star = euler::star_closures(p, rp);
  sol.star.u_star = 0.5 * (ul_star + ur_star);
  return sol;
}

}  // namespace riemann::solver
