#include "kinds.hpp"

namespace riemann {

std::string to_string(GuessKind kind) {
  switch (kind) {
    case GuessKind::RR: return "RR";
    case GuessKind::AV: return "AV";
    case GuessKind::QA: return "QA";
    case GuessKind::PV: return "PV";
    case GuessKind::SS: return "SS";
    case GuessKind::CC: return "CC";
    case GuessKind::HLLE: return "HLLE";
  }
  throw std::invalid_argument("unknown guess kind");
}

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::PositiveNewton: return "newton";
    case SchemeKind::TwoStepNewton: return "two-step";
    case SchemeKind::Ostrowski: return "ostrowski";
    case SchemeKind::OstrowskiNewton: return "ostrowski-newton";
    case SchemeKind::BoundingPolynomials: return "bounding-polynomials";
    case SchemeKind::GottliebGroth: return "gottlieb-groth";
    case SchemeKind::VanLeer: return "van-leer";
  }
  throw std::invalid_argument("unknown scheme kind");
}

GuessKind guess_kind_from_string(const std::string& name) {
  if (name == "RR" || name == "rr") return GuessKind::RR;
  if (name == "AV" || name == "av") return GuessKind::AV;
  if (name == "QA" || name == "qa") return GuessKind::QA;
  if (name == "PV" || name == "pv") return GuessKind::PV;
  if (name == "SS" || name == "ss") return GuessKind::SS;
  if (name == "CC" || name == "cc") return GuessKind::CC;
  if (name == "HLLE" || name == "hlle") return GuessKind::HLLE;
  throw std::invalid_argument("unknown guess kind: " + name);
}

SchemeKind scheme_kind_from_string(const std::string& name) {
  if (name == "newton") return SchemeKind::PositiveNewton;
  if (name == "two-step") return SchemeKind::TwoStepNewton;
  if (name == "ostrowski") return SchemeKind::Ostrowski;
  if (name == "ostrowski-newton") return SchemeKind::OstrowskiNewton;
  if (name == "bounding-polynomials") return SchemeKind::BoundingPolynomials;
  if (name == "gottlieb-groth") return SchemeKind::GottliebGroth;
  if (name == "van-leer") return SchemeKind::VanLeer;
  throw std::invalid_argument("unknown scheme kind: " + name);
}

}  // namespace riemann
