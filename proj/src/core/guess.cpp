#include "guess.hpp"

#include <algorithm>

#include "approx.hpp"

namespace riemann::guess {

namespace {

double cached_phi(double& slot, int& evals, double x, auto&& phi) {
  if (std::isnan(slot)) {
    slot = phi(x);
    ++evals;
  }
  return slot;
}

}  // namespace

GuessResult swe_guess(GuessKind kind, const swe::RiemannProblem& rp, PhiCache* cache) {
  PhiCache local;
  if (!cache) cache = &local;
  const double g = rp.params.g;
  const double h_l = rp.left.h, h_r = rp.right.h;
  const double u_l = rp.left.u, u_r = rp.right.u;
  const double h_min = std::min(h_l, h_r);
  const double h_max = std::max(h_l, h_r);
  auto phi = [&](double h) { return swe::depth_function(h, rp); };
  GuessResult res;

  switch (kind) {
    case GuessKind::RR:
      res.value = swe::h_two_rarefaction(rp);
      break;
    case GuessKind::AV:
      res.value = 0.5 * (h_l + h_r);
      break;
    case GuessKind::QA: {
      static const double x0 = (2.0 * std::sqrt(2.0) - 1.0) * (2.0 * std::sqrt(2.0) - 1.0);
      double phi_lo = phi(x0 * h_min);
      ++res.phi_evals;
      if (phi_lo >= 0.0) {
        res.value = swe::h_two_rarefaction(rp);
      } else {
        double phi_hi = phi(x0 * h_max);
        ++res.phi_evals;
        if (phi_hi < 0.0) {
          res.value = std::sqrt(h_min * h_max) *
                      (1.0 + std::sqrt(2.0) * (u_l - u_r) /
                                 (std::sqrt(g * h_min) + std::sqrt(g * h_max)));
        } else {
          const double inner = 3.0 * h_min + 2.0 * std::sqrt(2.0 * h_min * h_max) +
                               std::sqrt(2.0 / g) * (u_l - u_r) * std::sqrt(h_min);
          const double s = -std::sqrt(2.0 * h_min) + std::sqrt(inner);
          res.value = s * s;
        }
        // guard: the middle branch can go non-positive for extreme diverging
        // velocities, which the formula's source does not cover
        if (!(res.value > 0.0)) res.value = h_min;
      }
      break;
    }
    case GuessKind::PV:
      res.value = 0.5 * (h_l + h_r) + 0.25 * (u_l - u_r) * (h_l + h_r) /
                                          (std::sqrt(g * h_l) + std::sqrt(g * h_r));
      break;
    case GuessKind::SS: {
      const double hbar = 0.5 * (h_l + h_r) + 0.25 * (u_l - u_r) * (h_l + h_r) /
                                                  (std::sqrt(g * h_l) + std::sqrt(g * h_r));
      const double y_l = std::sqrt(0.5 * g * (hbar + h_l) / (hbar * h_l));
      const double y_r = std::sqrt(0.5 * g * (hbar + h_r) / (hbar * h_r));
      res.value = (h_l * y_l + h_r * y_r - u_r + u_l) / (y_l + y_r);
      break;
    }
    case GuessKind::CC: {
      const double phi_min = cached_phi(cache->at_min, res.phi_evals, h_min, phi);
      const double phi_max = cached_phi(cache->at_max, res.phi_evals, h_max, phi);
      const swe::Bracket br = swe::bracket_star(rp, phi_min, phi_max);
      const double phi_lo = br.h_minus == h_max ? phi_max : phi_min;
      double phi_hi;
      if (br.h_plus == h_max) {
        phi_hi = phi_max;
      } else {
        phi_hi = phi(br.h_plus);
        ++res.phi_evals;
      }
      res.value = (phi_hi * br.h_minus - phi_lo * br.h_plus) / (phi_hi - phi_lo);
      break;
    }
    case GuessKind::HLLE: {
      const approx::HlleState hs = approx::hlle(rp);
      res.value = hs.q_middle[0] > 0.0 ? hs.q_middle[0] : h_min;
      break;
    }
  }
  return res;
}

GuessResult euler_guess(GuessKind kind, const euler::RiemannProblem& rp, PhiCache* cache) {
  PhiCache local;
  if (!cache) cache = &local;
  const double gamma = rp.params.gamma;
  const double p_l = rp.left.p, p_r = rp.right.p;
  const double u_l = rp.left.u, u_r = rp.right.u;
  const double p_min = std::min(p_l, p_r);
  const double p_max = std::max(p_l, p_r);
  auto phi = [&](double p) { return euler::pressure_function(p, rp); };
  GuessResult res;

  switch (kind) {
    case GuessKind::RR:
      res.value = euler::p_two_rarefaction(rp);
      break;
    case GuessKind::AV:
      res.value = 0.5 * (p_l + p_r);
      break;
    case GuessKind::QA:
      throw std::invalid_argument("the quadratic approximation guess exists only for shallow water");
    case GuessKind::PV: {
      const double a_l = euler::sound_speed(rp.left, rp.params);
      const double a_r = euler::sound_speed(rp.right, rp.params);
      const double p_pv = 0.5 * (p_l + p_r) -
                          0.125 * (u_r - u_l) * (rp.left.rho + rp.right.rho) * (a_l + a_r);
      res.value = std::max(p_min, p_pv);
      break;
    }
    case GuessKind::SS: {
      const double a_l = euler::sound_speed(rp.left, rp.params);
      const double a_r = euler::sound_speed(rp.right, rp.params);
      const double p_pv = std::max(
          p_min, 0.5 * (p_l + p_r) -
                     0.125 * (u_r - u_l) * (rp.left.rho + rp.right.rho) * (a_l + a_r));
      const double gfac = (gamma - 1.0) / (gamma + 1.0);
      const double g_l =
          std::sqrt(2.0 / ((gamma + 1.0) * rp.left.rho) / (p_pv + gfac * p_l));
      const double g_r =
          std::sqrt(2.0 / ((gamma + 1.0) * rp.right.rho) / (p_pv + gfac * p_r));
      res.value = (g_l * p_l + g_r * p_r - u_r + u_l) / (g_l + g_r);
      break;
    }
    case GuessKind::CC: {
      const double phi_min = cached_phi(cache->at_min, res.phi_evals, p_min, phi);
      if (phi_min > 0.0)
        throw std::domain_error("convex combination requires at least one shock");
      const double phi_max = cached_phi(cache->at_max, res.phi_evals, p_max, phi);
      const double p_rr = euler::p_two_rarefaction(rp);
      double p_lo, p_hi, phi_lo, phi_hi;
      if (phi_max < 0.0) {
        p_lo = p_max;
        phi_lo = phi_max;
        p_hi = p_rr;
        phi_hi = phi(p_rr);
        ++res.phi_evals;
      } else {
        p_lo = p_min;
        phi_lo = phi_min;
        if (p_rr < p_max) {
          p_hi = p_rr;
          phi_hi = phi(p_rr);
          ++res.phi_evals;
        } else {
          p_hi = p_max;
          phi_hi = phi_max;
        }
      }
      res.value = (phi_hi * p_lo - phi_lo * p_hi) / (phi_hi - phi_lo);
      break;
    }
    case GuessKind::HLLE: {
      const approx::HlleState hs = approx::hlle(rp);
      const euler::Conserved qm{hs.q_middle[0], hs.q_middle[1], hs.q_middle[2]};
      double p = qm.rho > 0.0 ? euler::to_primitive(qm, rp.params).p : p_min;
      res.value = p > 0.0 ? p : p_min;
      break;
    }
  }
  return res;
}

}  // namespace riemann::guess
