// Initial guesses for the star-state iteration.  Each guess reports how many
// extra depth/pressure-function evaluations it consumed on top of the
// two-rarefaction check the caller has usually already performed.

#ifndef RIEMANN_CORE_GUESS_HPP
#define RIEMANN_CORE_GUESS_HPP

#include <cmath>

#include "euler.hpp"
#include "kinds.hpp"
#include "swe.hpp"

namespace riemann::guess {

struct GuessResult {
  double value = 0.0;
  int phi_evals = 0;   // evaluations performed by the guess itself
  bool is_exact = false;
};

// phi values the caller may already know; NaN means not computed.  Guesses
// that need them reuse the cached values instead of re-evaluating.
struct PhiCache {
  double at_min = std::nan("");
  double at_max = std::nan("");
};

GuessResult swe_guess(GuessKind kind, const swe::RiemannProblem& rp, PhiCache* cache = nullptr);
GuessResult euler_guess(GuessKind kind, const euler::RiemannProblem& rp, PhiCache* cache = nullptr);

}  // namespace riemann::guess

#endif
