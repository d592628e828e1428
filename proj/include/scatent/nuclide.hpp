#pragma once

#include <string>
#include <vector>

namespace scatent {

// Nuclear mass conventions.  kAu keeps target masses strictly proportional to A,
// which makes scans reproducible without any nuclide data; kAuElectrons removes
// the electron masses from the A*u bookkeeping value.
enum class MassModel {
  kAu,         // m = A * amu
  kAuElectrons // m = A * amu - Z * m_e
};

struct NucleusSpec {
  int Z = 0;
  int N = 0;
  int A = 0;        // = Z + N
  double mass = 0;  // rest mass, MeV
};

NucleusSpec make_nucleus(int Z, int N, MassModel model = MassModel::kAu);

// Accepts "208Pb", "Pb208" or "Pb-208".
NucleusSpec parse_nuclide(const std::string& token,
                          MassModel model = MassModel::kAu);

std::string element_symbol(int Z);
int element_z(const std::string& symbol);

MassModel parse_mass_model(const std::string& name);

// Isotope chains used by the isotope scans.  Ranges bracket the neutron magic
// numbers 8, 20, 28, 50, 82 and 126 visible in these elements.
struct IsotopeChain {
  int Z = 0;
  std::string element;
  int n_min = 0;
  int n_max = 0;
};

const IsotopeChain& isotope_chain(const std::string& element);
const std::vector<IsotopeChain>& all_isotope_chains();

// The seven standard scan targets: 4He 12C 16O 40Ca 58Ni 90Zr 208Pb.
std::vector<NucleusSpec> default_targets(MassModel model = MassModel::kAu);

}  // namespace scatent
