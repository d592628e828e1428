#pragma once

#include <vector>

#include "scatent/nuclide.hpp"
#include "scatent/potential.hpp"

namespace scatent {

// Bound levels of a standard Woods-Saxon well with Thomas spin-orbit coupling
// (depth 51 -+ 33 (N-Z)/A MeV, r0 = 1.27 fm, a = 0.67 fm).  The level order
// reproduces the canonical shell gaps at 2, 8, 20, 28, 50, 82 and 126, which
// is what feeds shell structure into the FermiModel::kShell parameterization.

struct SingleParticleLevel {
  int l = 0;
  int two_j = 0;
  double energy = 0;       // MeV, negative for bound levels
  int degeneracy = 0;      // 2j + 1
  double mean_square_radius = 0;  // fm^2
};

struct SingleParticleSpectrum {
  std::vector<SingleParticleLevel> levels;  // sorted by energy

  // Midpoint of the last filled and first empty level after filling `count`
  // particles; halfway to the continuum when the well holds nothing above.
  double fermi_energy(int count) const;

  // Mean square radius of the lowest `count` particles (sharp filling,
  // fractional occupancy of the last level).
  double filled_mean_square_radius(int count) const;

  int bound_capacity() const;
};

SingleParticleSpectrum single_particle_spectrum(const NucleusSpec& nucleus,
                                                Projectile species);

// Point-nucleon matter rms radius from the filled proton and neutron
// configurations, fm.
double shell_matter_rms(const NucleusSpec& nucleus);

}  // namespace scatent
