// Full exact solves: initial guess plus iterative scheme, with the
// two-rarefaction shortcut (no iteration needed when phi(min) > 0).

#ifndef RIEMANN_CORE_SOLVER_HPP
#define RIEMANN_CORE_SOLVER_HPP

#include "euler.hpp"
#include "guess.hpp"
#include "kinds.hpp"
#include "rootfind.hpp"
#include "swe.hpp"

namespace riemann::solver {

struct SweSolution {
  swe::StarState star;
  rootfind::SolveReport report;
};

struct EulerSolution {
  euler::StarState star;
  rootfind::SolveReport report;
};

// function_evals in the report counts every depth/pressure-function
// evaluation of the whole solve, shortcut check and guess included.
SweSolution solve_star(const swe::RiemannProblem& rp, GuessKind guess, SchemeKind scheme,
                       const rootfind::ToleranceSpec& tol = {});

EulerSolution solve_star(const euler::RiemannProblem& rp, GuessKind guess, SchemeKind scheme,
                         const rootfind::ToleranceSpec& tol = {});

// Velocity-based iteration of Gottlieb & Groth; ignores the guess machinery
// (it has its own dedicated starting value) and counts one function
// evaluation per (p*_l, p*_r, derivatives) sweep.
EulerSolution gottlieb_groth(const euler::RiemannProblem& rp,
                             const rootfind::ToleranceSpec& tol = {});

// van Leer's pressure iteration matching the velocities computed from each
// side; p0 is the starting pressure (conventionally the two-shock guess).
EulerSolution van_leer(const euler::RiemannProblem& rp, double p0,
                       const rootfind::ToleranceSpec& tol = {});

}  // namespace riemann::solver

#endif
