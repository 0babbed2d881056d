#ifndef RIEMANN_CORE_KINDS_HPP
#define RIEMANN_CORE_KINDS_HPP

#include <stdexcept>
#include <string>

namespace riemann {

enum class GuessKind { RR, AV, QA, PV, SS, CC, HLLE };

enum class SchemeKind {
  PositiveNewton,
  TwoStepNewton,
  Ostrowski,
  OstrowskiNewton,
  BoundingPolynomials,
  GottliebGroth,  // Euler only
  VanLeer,        // Euler only
};

std::string to_string(GuessKind kind);
std::string to_string(SchemeKind kind);
GuessKind guess_kind_from_string(const std::string& name);
SchemeKind scheme_kind_from_string(const std::string& name);

}  // namespace riemann

#endif
