#include "fv1d.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "approx.hpp"
#include "solver.hpp"

namespace riemann::fv1d {

namespace {

using Arr3 = std::array<double, 3>;

struct Iface {
  int nwaves = 0;
  Arr3 s{};
  std::array<Arr3, 3> w{};
  Arr3 am{}, ap{};
};

double limiter_value(Limiter lim, double theta) {
  switch (lim) {
    case Limiter::None:
      return 1.0;
    case Limiter::Minmod:
      return std::max(0.0, std::min(1.0, theta));
    case Limiter::MC:
      return std::max(0.0, std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
  }
  return 1.0;
}

// Shock speed from the jump, falling back to the characteristic speed when
// the wave has vanishing strength.
double jump_speed(double m_out, double m_star, double rho_out, double rho_star, double fallback) {
  const double dr = rho_out - rho_star;
  if (std::abs(dr) < 1e-9 * (std::abs(rho_out) + std::abs(rho_star))) return fallback;
  return (m_out - m_star) / dr;
}

struct SwePhysics {
  swe::Params params;
  Options opt;
  rootfind::ToleranceSpec tol;

  double cell_speed(const Arr3& q) const {
    return std::abs(q[1] / q[0]) + std::sqrt(params.g * q[0]);
  }

  bool admissible(const Arr3& q) const { return q[0] > 0.0; }

  Arr3 to_arr(const swe::Conserved& q) const { return {q.h, q.hu, q.hv}; }

  void iface(const Arr3& ql, const Arr3& qr, Iface& f) const {
    swe::RiemannProblem rp;
    rp.params = params;
    rp.left = swe::to_primitive({ql[0], ql[1], ql[2]});
    rp.right = swe::to_primitive({qr[0], qr[1], qr[2]});
    switch (opt.flux) {
      case FluxSolver::Exact: {
        const swe::StarState star =
            solver::solve_star(rp, GuessKind::SS, SchemeKind::OstrowskiNewton, tol).star;
        const swe::Primitive w0 = swe::sample_solution(star, rp, 0.0);
        auto fluxp = [&](const swe::Primitive& w) {
          const double hu = w.h * w.u;
          return Arr3{hu, hu * w.u + 0.5 * params.g * w.h * w.h, hu * w.v};
        };
        const Arr3 fl = fluxp(rp.left);
        const Arr3 fr = fluxp(rp.right);
        const Arr3 f0 = fluxp(w0);
        for (int i = 0; i < 3; ++i) {
          f.am[i] = f0[i] - fl[i];
          f.ap[i] = fr[i] - f0[i];
        }
        const double hs = star.h_star, us = star.u_star;
        f.nwaves = 3;
        if (opt.order >= 2) {  // wave vectors only feed the correction terms
          const Arr3 qsl{hs, hs * us, hs * star.v_left};
          const Arr3 qsr{hs, hs * us, hs * star.v_right};
          for (int i = 0; i < 3; ++i) {
            f.w[0][i] = qsl[i] - ql[i];
            f.w[1][i] = qsr[i] - qsl[i];
            f.w[2][i] = qr[i] - qsr[i];
          }
        }
        const double cs = std::sqrt(params.g * hs);
        f.s[0] = star.left_wave == swe::WaveType::Shock
                     ? jump_speed(ql[1], hs * us, ql[0], hs, us - cs)
                     : 0.5 * (rp.left.u - std::sqrt(params.g * rp.left.h) + us - cs);
        f.s[1] = us;
        f.s[2] = star.right_wave == swe::WaveType::Shock
                     ? jump_speed(qr[1], hs * us, qr[0], hs, us + cs)
                     : 0.5 * (rp.right.u + std::sqrt(params.g * rp.right.h) + us + cs);
        break;
      }
      case FluxSolver::Roe: {
        const approx::RoeData rd = approx::roe(rp);
        f.nwaves = 3;
        f.s = rd.speeds;
        for (int p = 0; p < 3; ++p) f.w[p] = rd.waves[p];
        f.am = rd.fluct_minus;
        f.ap = rd.fluct_plus;
        break;
      }
      case FluxSolver::Hlle: {
        const approx::HlleState hs = approx::hlle(rp);
        f.nwaves = 2;
        f.s = {hs.s_left, hs.s_right, 0.0};
        for (int i = 0; i < 3; ++i) {
          f.w[0][i] = hs.q_middle[i] - ql[i];
          f.w[1][i] = qr[i] - hs.q_middle[i];
        }
        for (int i = 0; i < 3; ++i) {
          f.am[i] = std::min(hs.s_left, 0.0) * f.w[0][i] + std::min(hs.s_right, 0.0) * f.w[1][i];
          f.ap[i] = std::max(hs.s_left, 0.0) * f.w[0][i] + std::max(hs.s_right, 0.0) * f.w[1][i];
        }
        break;
      }
    }
  }
};

struct EulerPhysics {
  euler::Params params;
  Options opt;
  rootfind::ToleranceSpec tol;

  double cell_speed(const Arr3& q) const {
    const euler::Primitive w = euler::to_primitive({q[0], q[1], q[2]}, params);
    return std::abs(w.u) + euler::sound_speed(w, params);
  }

  bool admissible(const Arr3& q) const {
    return q[0] > 0.0 && euler::to_primitive({q[0], q[1], q[2]}, params).p > 0.0;
  }

  Arr3 to_arr(const euler::Conserved& q) const { return {q.rho, q.rho_u, q.E}; }

  void iface(const Arr3& ql, const Arr3& qr, Iface& f) const {
    euler::RiemannProblem rp;
    rp.params = params;
    rp.left = euler::to_primitive({ql[0], ql[1], ql[2]}, params);
    rp.right = euler::to_primitive({qr[0], qr[1], qr[2]}, params);
    switch (opt.flux) {
      case FluxSolver::Exact: {
        const euler::StarState star =
            solver::solve_star(rp, GuessKind::SS, SchemeKind::PositiveNewton, tol).star;
        const euler::Primitive w0 = euler::sample_solution(star, rp, 0.0);
        const double gamma = params.gamma;
        auto fluxp = [&](const euler::Primitive& w) {
          const double m = w.rho * w.u;
          const double E = w.p / (gamma - 1.0) + 0.5 * m * w.u;
          return Arr3{m, m * w.u + w.p, w.u * (E + w.p)};
        };
        const Arr3 fl = fluxp(rp.left);
        const Arr3 fr = fluxp(rp.right);
        const Arr3 f0 = fluxp(w0);
        for (int i = 0; i < 3; ++i) {
          f.am[i] = f0[i] - fl[i];
          f.ap[i] = fr[i] - f0[i];
        }
        const double ps = star.p_star, us = star.u_star;
        const double rsl = star.rho_star_l, rsr = star.rho_star_r;
        f.nwaves = 3;
        if (opt.order >= 2) {  // wave vectors only feed the correction terms
          const double Esl = ps / (gamma - 1.0) + 0.5 * rsl * us * us;
          const double Esr = ps / (gamma - 1.0) + 0.5 * rsr * us * us;
          const Arr3 qsl{rsl, rsl * us, Esl};
          const Arr3 qsr{rsr, rsr * us, Esr};
          for (int i = 0; i < 3; ++i) {
            f.w[0][i] = qsl[i] - ql[i];
            f.w[1][i] = qsr[i] - qsl[i];
            f.w[2][i] = qr[i] - qsr[i];
          }
        }
        f.s[0] = star.left_wave == swe::WaveType::Shock
                     ? jump_speed(ql[1], rsl * us, ql[0], rsl,
                                  us - std::sqrt(gamma * ps / rsl))
                     : 0.5 * (rp.left.u - euler::sound_speed(rp.left, params) + us -
                              std::sqrt(gamma * ps / rsl));
        f.s[1] = us;
        f.s[2] = star.right_wave == swe::WaveType::Shock
                     ? jump_speed(qr[1], rsr * us, qr[0], rsr,
                                  us + std::sqrt(gamma * ps / rsr))
                     : 0.5 * (rp.right.u + euler::sound_speed(rp.right, params) + us +
                              std::sqrt(gamma * ps / rsr));
        break;
      }
      case FluxSolver::Roe: {
        const approx::RoeData rd = approx::roe(rp);
        f.nwaves = 3;
        f.s = rd.speeds;
        for (int p = 0; p < 3; ++p) f.w[p] = rd.waves[p];
        f.am = rd.fluct_minus;
        f.ap = rd.fluct_plus;
        break;
      }
      case FluxSolver::Hlle: {
        const approx::HlleState hs = approx::hlle(rp);
        f.nwaves = 2;
        f.s = {hs.s_left, hs.s_right, 0.0};
        for (int i = 0; i < 3; ++i) {
          f.w[0][i] = hs.q_middle[i] - ql[i];
          f.w[1][i] = qr[i] - hs.q_middle[i];
        }
        for (int i = 0; i < 3; ++i) {
          f.am[i] = std::min(hs.s_left, 0.0) * f.w[0][i] + std::min(hs.s_right, 0.0) * f.w[1][i];
          f.ap[i] = std::max(hs.s_left, 0.0) * f.w[0][i] + std::max(hs.s_right, 0.0) * f.w[1][i];
        }
        break;
      }
    }
  }
};

template <class Physics, class InitFn>
Result run_generic(const Physics& phys, InitFn&& init_q, double x_lo, double x_hi, double t_end,
                   int cells, const Options& opt) {
  if (cells < 3) throw std::invalid_argument("need at least 3 cells");
  const int N = cells;
  const double dx = (x_hi - x_lo) / N;
  std::vector<Arr3> q(N + 4);  // two ghost cells each side; interior [2, N+2)
  for (int i = 0; i < N; ++i) q[i + 2] = init_q(x_lo + (i + 0.5) * dx);

  auto fill_ghosts = [&]() {  // reflecting walls: mirror with negated momentum
    auto reflect = [](Arr3 v) {
      v[1] = -v[1];
      return v;
    };
    q[1] = reflect(q[2]);
    q[0] = reflect(q[3]);
    q[N + 2] = reflect(q[N + 1]);
    q[N + 3] = reflect(q[N]);
  };

  Result res;
  res.cells = N;
  res.x_lo = x_lo;
  res.dx = dx;
  for (int i = 2; i < N + 2; ++i) res.mass_initial += q[i][0] * dx;

  double smax_prev = 0.0;
  for (int i = 2; i < N + 2; ++i) smax_prev = std::max(smax_prev, phys.cell_speed(q[i]));
  if (!(smax_prev > 0.0)) smax_prev = 1.0;

  std::vector<Iface> ifc(N + 4);        // interface j sits left of cell j; used 1..N+3
  std::vector<Arr3> corr(N + 4, Arr3{});  // second-order correction fluxes

  const auto t0 = std::chrono::steady_clock::now();
  double t = 0.0;
  while (t < t_end) {
    fill_ghosts();
    double smax = 0.0;
    for (int j = 1; j <= N + 3; ++j) {
      phys.iface(q[j - 1], q[j], ifc[j]);
      for (int p = 0; p < ifc[j].nwaves; ++p) {
        if (!std::isfinite(ifc[j].s[p]))
          throw std::runtime_error("non-finite wave speed at interface " + std::to_string(j));
        smax = std::max(smax, std::abs(ifc[j].s[p]));
      }
      for (int c = 0; c < 3; ++c)
        if (!std::isfinite(ifc[j].am[c]) || !std::isfinite(ifc[j].ap[c]))
          throw std::runtime_error("non-finite fluctuation at interface " + std::to_string(j));
    }
    double dt = opt.cfl * dx / smax_prev;
    if (dt * smax > dx) dt = opt.cfl * dx / smax;  // retake with the realized speeds
    dt = std::min(dt, t_end - t);

    const std::vector<Arr3> saved(q.begin() + 2, q.begin() + 2 + N);
    int halvings = 0;
    while (true) {
      if (opt.order >= 2) {
        for (int j = 2; j <= N + 2; ++j) {
          corr[j] = {};
          const Iface& f = ifc[j];
          for (int p = 0; p < f.nwaves; ++p) {
            const double sp = f.s[p];
            double wnorm2 = 0.0, wdot = 0.0;
            const Iface& fn = ifc[sp > 0.0 ? j - 1 : j + 1];
            for (int i = 0; i < 3; ++i) {
              wnorm2 += f.w[p][i] * f.w[p][i];
              wdot += f.w[p][i] * fn.w[p][i];
            }
            if (wnorm2 == 0.0) continue;
            const double coef = 0.5 * std::abs(sp) * (1.0 - std::abs(sp) * dt / dx) *
                                limiter_value(opt.limiter, wdot / wnorm2);
            for (int i = 0; i < 3; ++i) corr[j][i] += coef * f.w[p][i];
          }
        }
      }

      const double r = dt / dx;
      for (int i = 2; i < N + 2; ++i)
        for (int c = 0; c < 3; ++c) {
          q[i][c] -= r * (ifc[i].ap[c] + ifc[i + 1].am[c]);
          if (opt.order >= 2) q[i][c] -= r * (corr[i + 1][c] - corr[i][c]);
        }

      bool ok = true;
      for (int i = 2; ok && i < N + 2; ++i) ok = phys.admissible(q[i]);
      if (ok) break;
      // limited corrections can overshoot at very strong fronts; retake the
      // step with a smaller dt (the fluctuations do not depend on dt)
      if (++halvings > 12)
        throw std::runtime_error("positivity lost even under repeated step-size reduction");
      std::copy(saved.begin(), saved.end(), q.begin() + 2);
      dt *= 0.5;
    }

    t += dt;
    smax_prev = smax;
    ++res.steps;
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  res.q.assign(q.begin() + 2, q.begin() + 2 + N);
  for (const auto& cell : res.q) res.mass_final += cell[0] * dx;
  return res;
}

}  // namespace

Result run(const SweSetup& setup, int cells, const Options& opt) {
  SwePhysics phys{setup.params, opt, {}};
  return run_generic(
      phys,
      [&](double x) {
        const swe::Primitive w = setup.init(x);
        const swe::Conserved c = swe::to_conserved(w);
        return Arr3{c.h, c.hu, c.hv};
      },
      setup.x_lo, setup.x_hi, setup.t_end, cells, opt);
}

Result run(const EulerSetup& setup, int cells, const Options& opt) {
  EulerPhysics phys{setup.params, opt, {}};
  return run_generic(
      phys,
      [&](double x) {
        const euler::Conserved c = euler::to_conserved(setup.init(x), setup.params);
        return Arr3{c.rho, c.rho_u, c.E};
      },
      setup.x_lo, setup.x_hi, setup.t_end, cells, opt);
}

SweSetup swe_blast() {
  SweSetup s;
  s.x_lo = -5.0;
  s.x_hi = 5.0;
  s.t_end = 10.0;
  s.init = [](double x) {
    swe::Primitive w;
    w.h = x <= -2.0 ? 30.0 : (x < 2.0 ? 1.0 : 50.0);
    return w;
  };
  return s;
}

EulerSetup euler_blast() {
  EulerSetup s;
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.t_end = 0.5;
  s.init = [](double x) {
    const double gamma = 1.4;
    euler::Primitive w;
    w.rho = 0.1;
    const double E = x < 0.1 ? 1000.0 / (gamma - 1.0) : (x > 0.9 ? 100.0 / (gamma - 1.0) : 1.0);
    w.p = (gamma - 1.0) * E;
    return w;
  };
  return s;
}

std::vector<ConvergenceRow> convergence_errors(const std::vector<Result>& runs,
                                               const Result& reference, int field) {
  std::vector<ConvergenceRow> rows;
  for (const Result& run : runs) {
    if (run.cells <= 0 || reference.cells % run.cells != 0)
      throw std::invalid_argument("grids must nest into the reference");
    const int ratio = reference.cells / run.cells;
    ConvergenceRow row;
    row.cells = run.cells;
    double sum2 = 0.0;
    for (int i = 0; i < run.cells; ++i) {
      double avg = 0.0;
      for (int k = 0; k < ratio; ++k) avg += reference.q[i * ratio + k][field];
      avg /= ratio;
      const double e = run.q[i][field] - avg;
      sum2 += e * e;
      row.linf = std::max(row.linf, std::abs(e));
    }
    // grid-function 2-norm scaled by the cell width (the convention used by
    // the reference convergence scripts: dx * ||e||_2)
    row.l2 = run.dx * std::sqrt(sum2);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace riemann::fv1d
