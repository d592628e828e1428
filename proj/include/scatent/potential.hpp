#pragma once

#include <complex>
#include <string>
#include <vector>

#include "scatent/nuclide.hpp"

namespace scatent {

enum class Projectile { kNeutron, kProton };

Projectile parse_projectile(const std::string& tag);  // "n" | "p"
char projectile_tag(Projectile p);
double projectile_mass(Projectile p);
int projectile_charge(Projectile p);

// One Woods-Saxon shaped term.  depth is a strength in MeV; the attractive or
// absorptive sign is applied by the evaluator, so built-in depths come out
// positive.  R = radius_const * A^(1/3).
struct WoodsSaxonTerm {
  double depth = 0;
  double radius_const = 0;
  double diffuseness = 0.1;
};

// Source of the Fermi energies and geometry entering the parameterization:
// kGlobal uses smooth mass-number formulas; kShell derives them from the
// bound single-particle spectrum of the target, which restores genuine
// shell structure along isotope chains.
enum class FermiModel { kGlobal, kShell };

FermiModel parse_fermi_model(const std::string& name);

struct OpticalPotentialParams {
  WoodsSaxonTerm real_volume;
  WoodsSaxonTerm imag_volume;
  WoodsSaxonTerm imag_surface;    // derivative (surface-peaked) shape
  WoodsSaxonTerm real_spin_orbit; // Thomas form, (1/r) d/dr of a Woods-Saxon
  WoodsSaxonTerm imag_spin_orbit;
  double coulomb_radius_const = 1.25;  // fm
  double energy = 0;                   // lab kinetic energy, MeV
  Projectile projectile = Projectile::kNeutron;
  bool coulomb_enabled = true;  // cleared by the no-distortion solve switch
  std::string id = "custom";
};

struct GlobalParamOptions {
  FermiModel fermi_model = FermiModel::kGlobal;
  bool coulomb_correction = true;  // proton real-depth Coulomb correction
  bool isovector = true;           // (N-Z)/A coupling
};

// Built-in global parameterization (Koning-Delaroche functional form with an
// n/p-symmetric coefficient set and a stabilized real-volume energy dependence
// so the set stays usable over 20-1000 MeV).  Warns on stderr outside that range.
OpticalPotentialParams global_params(const NucleusSpec& nucleus, double T,
                                     Projectile projectile,
                                     const GlobalParamOptions& options = {});

// Fixed parameter set from a sectioned key-value text file; see README for the
// schema ([real_volume] depth/radius_const/diffuseness, ...).
OpticalPotentialParams load_potential_config(const std::string& path,
                                             Projectile projectile, double T);

enum class JSign { kPlus, kMinus };

// <l.s> = l/2 for j = l + 1/2 and -(l+1)/2 for j = l - 1/2.
double ls_expectation(int l, JSign j_sign);

// Central part (volume + surface + Coulomb for protons), no spin-orbit.
std::complex<double> evaluate_central(const OpticalPotentialParams& params,
                                      const NucleusSpec& nucleus, double r);

// Radial factor of the spin-orbit term; the channel potential adds
// 2 <l.s> times this to the central part.
std::complex<double> evaluate_spin_orbit(const OpticalPotentialParams& params,
                                         const NucleusSpec& nucleus, double r);

// Full channel potential at radius r.
std::complex<double> evaluate(const OpticalPotentialParams& params,
                              const NucleusSpec& nucleus, double r, int l,
                              JSign j_sign);

// Central and spin-orbit values tabulated on a grid, the per-(l,j) channel
// profile is central +- the spin-orbit column scaled by 2 <l.s>.
struct PotentialProfile {
  std::vector<double> grid;
  std::vector<std::complex<double>> central_plus;
  std::vector<std::complex<double>> central_minus;
  int l = 0;
};

PotentialProfile profile_on_grid(const OpticalPotentialParams& params,
                                 const NucleusSpec& nucleus,
                                 const std::vector<double>& grid, int l);

}  // namespace scatent
