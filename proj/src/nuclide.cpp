#include "scatent/nuclide.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "scatent/constants.hpp"
#include "scatent/error.hpp"

namespace scatent {

namespace {

constexpr std::array<const char*, 93> kSymbols = {
    "n",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu"};

const std::vector<IsotopeChain> kChains = {
    {8, "O", 6, 16},    {20, "Ca", 14, 34},  {28, "Ni", 24, 52},
    {40, "Zr", 44, 64}, {50, "Sn", 46, 88},  {82, "Pb", 114, 134}};

}  // namespace

NucleusSpec make_nucleus(int Z, int N, MassModel model) {
  if (Z < 1) throw Error("nucleus must have Z >= 1");
  if (N < 0) throw Error("nucleus must have N >= 0");
  NucleusSpec n;
  n.Z = Z;
  n.N = N;
  n.A = Z + N;
  n.mass = n.A * kAmu;
  if (model == MassModel::kAuElectrons) n.mass -= Z * kElectronMass;
  return n;
}

std::string element_symbol(int Z) {
  if (Z < 1 || Z >= static_cast<int>(kSymbols.size()))
    throw Error("no element symbol for Z = " + std::to_string(Z));
  return kSymbols[static_cast<size_t>(Z)];
}

int element_z(const std::string& symbol) {
  for (size_t z = 1; z < kSymbols.size(); ++z)
    if (symbol == kSymbols[z]) return static_cast<int>(z);
  throw Error("unknown element symbol '" + symbol + "'");
}

NucleusSpec parse_nuclide(const std::string& token, MassModel model) {
  std::string digits, letters;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      digits += c;
    else if (std::isalpha(static_cast<unsigned char>(c)))
      letters += c;
    else if (c != '-')
      throw Error("cannot parse nuclide '" + token + "'");
  }
  if (digits.empty() || letters.empty())
    throw Error("cannot parse nuclide '" + token + "'");
  const int a = std::stoi(digits);
  const int z = element_z(letters);
  if (a <= z) throw Error("nuclide '" + token + "' has A <= Z");
  return make_nucleus(z, a - z, model);
}

MassModel parse_mass_model(const std::string& name) {
  if (name == "au") return MassModel::kAu;
  if (name == "au-electrons") return MassModel::kAuElectrons;
  throw Error("unknown mass model '" + name + "' (au | au-electrons)");
}

const IsotopeChain& isotope_chain(const std::string& element) {
  for (const auto& c : kChains)
    if (c.element == element) return c;
  throw Error("no isotope chain for element '" + element +
              "' (O, Ca, Ni, Zr, Sn, Pb)");
}

const std::vector<IsotopeChain>& all_isotope_chains() { return kChains; }

std::vector<NucleusSpec> default_targets(MassModel model) {
  return {make_nucleus(2, 2, model),   make_nucleus(6, 6, model),
          make_nucleus(8, 8, model),   make_nucleus(20, 20, model),
          make_nucleus(28, 30, model), make_nucleus(40, 50, model),
          make_nucleus(82, 126, model)};
}

}  // namespace scatent
