#pragma once

#include <complex>
#include <vector>

#include "scatent/kinematics.hpp"
#include "scatent/potential.hpp"

namespace scatent {

// Radial mesh with two matching nodes.  Nodes sit at r = i h for
// i = 1..points; the inner matching radius r_match lies beyond the nuclear
// surface (and beyond the classical turning point of the highest partial
// wave), the outer one is the last node, about a quarter wavelength further.
struct RadialGrid {
  double r_min = 0;
  double r_match = 0;
  double h = 0;
  int points = 0;
  int match_index = 0;  // node index of r_match
  int l_cap = 0;        // largest l this grid supports

  std::vector<double> radii() const;
};

struct SolveOptions {
  double step = 0;                 // 0 -> min(0.01, 1/(20 k))
  bool coulomb_distortion = true;  // proton eta include the Coulomb field
  double convergence_eps = 1e-8;   // stop when 1-|eta|^2 and |1-eta|^2 fall below
  int l_pad = 2;                   // always solve past the grazing l by this much
};

RadialGrid make_radial_grid(const Kinematics& kin, const NucleusSpec& nucleus,
                            double sommerfeld, const SolveOptions& opts = {});

struct ChannelSolution {
  int l = 0;
  JSign j_sign = JSign::kPlus;
  std::complex<double> eta;    // S-matrix element
  std::complex<double> delta;  // complex phase shift, eta = exp(2 i delta)
};

struct PartialWaveSet {
  double k = 0;
  int l_max = 0;
  std::vector<ChannelSolution> channels;  // (0,+), (1,+), (1,-), (2,+), ...
  std::vector<double> coulomb_phase;      // sigma_l, zero for neutral solves
  double sommerfeld = 0;
  // Largest |eta| seen before the unit-modulus roundoff guard.
  double max_abs_eta_raw = 0;

  const ChannelSolution& channel(int l, JSign j_sign) const;
};

// Regular/irregular Coulomb functions and rho-derivatives for l = 0..l_max.
// Satisfies F' G - F G' = 1 per l; at sommerfeld = 0 they reduce to the
// Riccati-Bessel forms rho j_l and -rho y_l.
struct CoulombFunctions {
  double sommerfeld = 0;
  double rho = 0;
  std::vector<double> F, Fp, G, Gp;
};

CoulombFunctions coulomb_functions(double sommerfeld, int l_max, double rho);

// Coulomb phase shifts sigma_l = arg Gamma(l + 1 + i eta), l = 0..l_max.
std::vector<double> coulomb_phases(double sommerfeld, int l_max);

// Radial wavefunction of one channel at the two matching nodes, from a
// Numerov sweep of u'' = [l(l+1)/r^2 + 2mu/hbar^2 V - k^2] u started with
// the regular r^(l+1) behavior.
struct MatchingValues {
  std::complex<double> u_inner;
  std::complex<double> u_outer;
  double r_inner = 0;
  double r_outer = 0;
};

MatchingValues integrate_channel(const PotentialProfile& profile, double k,
                                 double two_mu_over_hbar2,
                                 const RadialGrid& grid, JSign j_sign);

// eta from matching to G +- iF combinations at the two nodes; the neutral
// case (sommerfeld 0) is matching to spherical Hankel functions.
std::complex<double> match_channel(const MatchingValues& u, int l,
                                   const CoulombFunctions& inner,
                                   const CoulombFunctions& outer);

ChannelSolution match_neutron(const MatchingValues& u, double k, int l,
                              JSign j_sign);

// Full partial-wave sweep: solves every (l, j) channel from l = 0 until the
// elastic and reaction strengths both drop below convergence_eps past the
// grazing angular momentum.
PartialWaveSet solve_all(const OpticalPotentialParams& params,
                         const NucleusSpec& nucleus, const Kinematics& kin,
                         const SolveOptions& opts = {});

}  // namespace scatent
