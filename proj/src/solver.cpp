#include "scatent/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scatent/constants.hpp"
#include "scatent/error.hpp"

namespace scatent {

namespace {

using cplx = std::complex<double>;

struct SweepResult {
  cplx u_inner;
  cplx u_outer;
};

// Numerov sweep of u'' = Q(r) u over nodes r = h..points*h, started from the
// regular r^(l+1) behavior (with its leading curvature correction so free
// solutions are reproduced well below the matching tolerances).  The solution
// is renormalized whenever it threatens the floating-point range; only the
// ratio of the two matching values is used downstream.
template <typename QFn>
SweepResult numerov_core(QFn q, int points, int match_index, double h, int l) {
  const double h2_12 = h * h / 12.0;
  const cplx a2 = (q(0) - l * (l + 1.0) / (h * h)) / (4.0 * l + 6.0);

  cplx um = 1e-30 * (1.0 + a2 * h * h);
  cplx u0 = 1e-30 * std::pow(2.0, l + 1) * (1.0 + 4.0 * a2 * h * h);
  cplx qm = q(0), q0 = q(1);

  cplx u_inner = 0;
  bool recorded = false;
  if (match_index == 1) {
    u_inner = um;
    recorded = true;
  } else if (match_index == 2) {
    u_inner = u0;
    recorded = true;
  }

  for (int i = 2; i < points; ++i) {
    const cplx q1 = q(i);
    const cplx u1 = ((2.0 + 10.0 * h2_12 * q0) * u0 - (1.0 - h2_12 * qm) * um) /
                    (1.0 - h2_12 * q1);
    um = u0;
    u0 = u1;
    qm = q0;
    q0 = q1;
    if (!std::isfinite(u0.real()) || !std::isfinite(u0.imag()))
      throw Error("numerov: overflow at r = " + std::to_string((i + 1) * h) +
                  " (l = " + std::to_string(l) + ", h = " + std::to_string(h) +
                  "); reduce the step");
    if (std::abs(u0.real()) > 1e200 || std::abs(u0.imag()) > 1e200) {
      um *= 1e-200;
      u0 *= 1e-200;
      if (recorded) u_inner *= 1e-200;
    }
    if (i + 1 == match_index) {
      u_inner = u0;
      recorded = true;
    }
  }
  if (!recorded) throw Error("numerov: matching node not reached");
  return {u_inner, u0};
}

double ls2_factor(int l, JSign j_sign) {
  if (l == 0) return 0.0;
  return 2.0 * ls_expectation(l, j_sign);
}

}  // namespace

std::vector<double> RadialGrid::radii() const {
  std::vector<double> r(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) r[static_cast<size_t>(i)] = (i + 1) * h;
  return r;
}

RadialGrid make_radial_grid(const Kinematics& kin, const NucleusSpec& nucleus,
                            double sommerfeld, const SolveOptions& opts) {
  if (kin.k <= 0) throw Error("make_radial_grid: requires k > 0");
  RadialGrid grid;
  grid.h = opts.step > 0 ? opts.step : std::min(0.01, 1.0 / (20.0 * kin.k));

  const GrazingGeometry g = grazing(nucleus.A, kin.k);
  grid.l_cap = static_cast<int>(std::ceil(kin.k * g.R)) + 45;

  // Inner matching node: past the nuclear surface and outside the classical
  // turning point of the highest supported partial wave, so the asymptotic
  // Coulomb forms are valid there for every l.
  const double base = g.R + 12.0 * g.a_diff;
  const double rho_needed =
      1.05 * (sommerfeld +
              std::sqrt(sommerfeld * sommerfeld +
                        grid.l_cap * (grid.l_cap + 1.0)));
  const double r_match = std::max(base, rho_needed / kin.k);

  grid.match_index = static_cast<int>(std::ceil(r_match / grid.h));
  const double sep = std::min(kPi / (2.0 * kin.k), 5.0);
  const int sep_nodes = std::max(4, static_cast<int>(std::lround(sep / grid.h)));
  grid.points = grid.match_index + sep_nodes;
  grid.r_match = grid.match_index * grid.h;
  grid.r_min = grid.h;
  return grid;
}

const ChannelSolution& PartialWaveSet::channel(int l, JSign j_sign) const {
  if (l < 0 || l > l_max) throw Error("channel: l out of range");
  if (l == 0 && j_sign == JSign::kMinus)
    throw Error("channel: l = 0 has no j = l - 1/2 channel");
  const size_t idx = l == 0 ? 0
                            : static_cast<size_t>(2 * l - 1) +
                                  (j_sign == JSign::kMinus ? 1 : 0);
  return channels.at(idx);
}

MatchingValues integrate_channel(const PotentialProfile& profile, double k,
                                 double two_mu_over_hbar2,
                                 const RadialGrid& grid, JSign j_sign) {
  if (static_cast<int>(profile.grid.size()) != grid.points)
    throw Error("integrate_channel: profile does not cover the grid");
  const auto& column =
      j_sign == JSign::kPlus ? profile.central_plus : profile.central_minus;

  double vmax = 0;
  for (const auto& v : column) vmax = std::max(vmax, std::abs(v));
  const double k_local = std::sqrt(k * k + two_mu_over_hbar2 * vmax);
  if (grid.h * k_local >= 0.5)
    throw Error("integrate_channel: step violates stability bound, h*k_local = " +
                std::to_string(grid.h * k_local));

  const int l = profile.l;
  const double k2 = k * k;
  auto q = [&](int i) -> cplx {
    const double r = profile.grid[static_cast<size_t>(i)];
    return l * (l + 1.0) / (r * r) +
           two_mu_over_hbar2 * column[static_cast<size_t>(i)] - k2;
  };
  const SweepResult res = numerov_core(q, grid.points, grid.match_index, grid.h, l);

  MatchingValues mv;
  mv.u_inner = res.u_inner;
  mv.u_outer = res.u_outer;
  mv.r_inner = grid.r_match;
  mv.r_outer = grid.points * grid.h;
  return mv;
}

std::complex<double> match_channel(const MatchingValues& u, int l,
                                   const CoulombFunctions& inner,
                                   const CoulombFunctions& outer) {
  const cplx i1(0.0, 1.0);
  const cplx hp1 = inner.G[static_cast<size_t>(l)] + i1 * inner.F[static_cast<size_t>(l)];
  const cplx hm1 = inner.G[static_cast<size_t>(l)] - i1 * inner.F[static_cast<size_t>(l)];
  const cplx hp2 = outer.G[static_cast<size_t>(l)] + i1 * outer.F[static_cast<size_t>(l)];
  const cplx hm2 = outer.G[static_cast<size_t>(l)] - i1 * outer.F[static_cast<size_t>(l)];

  const cplx den = u.u_inner * hp2 - u.u_outer * hp1;
  const double scale = std::abs(u.u_inner) + std::abs(u.u_outer);
  if (std::abs(den) < 1e-14 * scale)
    throw Error("match_channel: matching determinant singular (l = " +
                std::to_string(l) + ")");
  return (u.u_inner * hm2 - u.u_outer * hm1) / den;
}

ChannelSolution match_neutron(const MatchingValues& u, double k, int l,
                              JSign j_sign) {
  const CoulombFunctions inner = coulomb_functions(0.0, l, k * u.r_inner);
  const CoulombFunctions outer = coulomb_functions(0.0, l, k * u.r_outer);
  ChannelSolution ch;
  ch.l = l;
  ch.j_sign = j_sign;
  ch.eta = match_channel(u, l, inner, outer);
  ch.delta = std::log(ch.eta) / cplx(0.0, 2.0);
  return ch;
}

PartialWaveSet solve_all(const OpticalPotentialParams& params,
                         const NucleusSpec& nucleus, const Kinematics& kin,
                         const SolveOptions& opts) {
  if (kin.T <= 0 || kin.k <= 0) throw Error("solve_all: requires T > 0");

  OpticalPotentialParams local = params;
  int charge = projectile_charge(params.projectile) * nucleus.Z;
  if (!opts.coulomb_distortion) {
    charge = 0;
    local.coulomb_enabled = false;
  }
  const double sommerfeld =
      charge * kE2 * kin.two_mu_over_hbar2 / (2.0 * kin.k);

  const RadialGrid grid = make_radial_grid(kin, nucleus, sommerfeld, opts);
  const std::vector<double> radii = grid.radii();
  const size_t n = radii.size();

  std::vector<cplx> central(n), so(n);
  for (size_t i = 0; i < n; ++i) {
    central[i] = evaluate_central(local, nucleus, radii[i]);
    so[i] = evaluate_spin_orbit(local, nucleus, radii[i]);
  }

  // Stability bound with the potential depth folded into the local wave number.
  double vmax = 0;
  for (size_t i = 0; i < n; ++i)
    vmax = std::max(vmax, std::abs(central[i]) + (grid.l_cap + 1.0) * std::abs(so[i]));
  const double k_local = std::sqrt(kin.k * kin.k + kin.two_mu_over_hbar2 * vmax);
  if (grid.h * k_local >= 0.5)
    throw Error("solve_all: step violates stability bound");

  const CoulombFunctions cf_inner =
      coulomb_functions(sommerfeld, grid.l_cap, kin.k * grid.r_match);
  const CoulombFunctions cf_outer =
      coulomb_functions(sommerfeld, grid.l_cap, kin.k * grid.points * grid.h);

  const GrazingGeometry g = grazing(nucleus.A, kin.k);
  const double k2 = kin.k * kin.k;
  const double c = kin.two_mu_over_hbar2;

  PartialWaveSet ws;
  ws.k = kin.k;
  ws.sommerfeld = sommerfeld;

  auto solve_one = [&](int l, JSign j_sign) {
    const double ls2 = ls2_factor(l, j_sign);
    auto q = [&](int i) -> cplx {
      const double r = radii[static_cast<size_t>(i)];
      return l * (l + 1.0) / (r * r) +
             c * (central[static_cast<size_t>(i)] + ls2 * so[static_cast<size_t>(i)]) -
             k2;
    };
    const SweepResult res =
        numerov_core(q, grid.points, grid.match_index, grid.h, l);
    MatchingValues mv{res.u_inner, res.u_outer, grid.r_match,
                      grid.points * grid.h};
    cplx eta = match_channel(mv, l, cf_inner, cf_outer);

    const double m = std::abs(eta);
    ws.max_abs_eta_raw = std::max(ws.max_abs_eta_raw, m);
    if (m > 1.0) {
      if (m > 1.0 + 1e-6)
        throw Error("solve_all: |eta| = " + std::to_string(m) +
                    " exceeds unitarity at l = " + std::to_string(l));
      eta /= m;  // roundoff guard; raw value kept in max_abs_eta_raw
    }
    ChannelSolution ch;
    ch.l = l;
    ch.j_sign = j_sign;
    ch.eta = eta;
    ch.delta = std::log(eta) / cplx(0.0, 2.0);
    return ch;
  };

  int consecutive_converged = 0;
  int l_final = -1;
  for (int l = 0; l <= grid.l_cap; ++l) {
    const ChannelSolution plus = solve_one(l, JSign::kPlus);
    ws.channels.push_back(plus);
    bool conv = std::norm(1.0 - plus.eta) < opts.convergence_eps &&
                1.0 - std::norm(plus.eta) < opts.convergence_eps;
    if (l > 0) {
      const ChannelSolution minus = solve_one(l, JSign::kMinus);
      ws.channels.push_back(minus);
      conv = conv && std::norm(1.0 - minus.eta) < opts.convergence_eps &&
             1.0 - std::norm(minus.eta) < opts.convergence_eps;
    }
    consecutive_converged = conv ? consecutive_converged + 1 : 0;
    if (l >= g.l_max + opts.l_pad && consecutive_converged >= 2) {
      l_final = l;
      break;
    }
  }
  if (l_final < 0)
    throw Error("solve_all: partial waves not converged by l = " +
                std::to_string(grid.l_cap) + " (T = " + std::to_string(kin.T) +
                " MeV, A = " + std::to_string(nucleus.A) + ")");

  ws.l_max = l_final;
  const std::vector<double> sigma = coulomb_phases(sommerfeld, l_final);
  ws.coulomb_phase = sigma;
  return ws;
}

}  // namespace scatent
