#include "scatent/potential.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "scatent/constants.hpp"
#include "scatent/error.hpp"
#include "scatent/single_particle.hpp"

namespace scatent {

namespace {

// Stable Woods-Saxon form factor and its radial derivative.
double ws_f(double r, double R, double a) {
  const double x = (r - R) / a;
  if (x > 0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double ws_dfdr(double r, double R, double a) {
  const double f = ws_f(r, R, a);
  return -f * (1.0 - f) / a;
}

// Surface shape -4 a d/dr f, normalized to peak value 1 at r = R.
double ws_surface(double r, double R, double a) {
  const double f = ws_f(r, R, a);
  return 4.0 * f * (1.0 - f);
}

double coulomb_sphere(double r, double Rc, int Zz) {
  if (Zz == 0) return 0.0;
  const double q = Zz * kE2;
  if (r < Rc) return q * (3.0 - (r / Rc) * (r / Rc)) / (2.0 * Rc);
  return q / r;
}

// Energy polynomial of the real volume depth.  The cubic form turns around
// near x ~ 220 MeV, so beyond its stationary point it is continued by a slow
// exponential decay; kHighEnergyScale sets that decay.
constexpr double kHighEnergyScale = 1500.0;  // MeV

struct EnergyPoly {
  double v2, v3, v4, x_cap, p_cap;

  EnergyPoly(double v2_, double v3_, double v4_) : v2(v2_), v3(v3_), v4(v4_) {
    x_cap = (v3 - std::sqrt(v3 * v3 - 3.0 * v4 * v2)) / (3.0 * v4);
    p_cap = raw(x_cap);
  }
  double raw(double x) const { return 1.0 - v2 * x + v3 * x * x - v4 * x * x * x; }
  double value(double x) const {
    if (x <= x_cap) return raw(x);
    return p_cap * std::exp(-(x - x_cap) / kHighEnergyScale);
  }
  double derivative(double x) const {
    if (x <= x_cap) return -v2 + 2.0 * v3 * x - 3.0 * v4 * x * x;
    return -value(x) / kHighEnergyScale;
  }
};

}  // namespace

Projectile parse_projectile(const std::string& tag) {
  if (tag == "n" || tag == "neutron") return Projectile::kNeutron;
  if (tag == "p" || tag == "proton") return Projectile::kProton;
  throw Error("unsupported projectile '" + tag + "' (n | p)");
}

char projectile_tag(Projectile p) {
  return p == Projectile::kNeutron ? 'n' : 'p';
}

double projectile_mass(Projectile p) {
  return p == Projectile::kNeutron ? kNeutronMass : kProtonMass;
}

int projectile_charge(Projectile p) {
  return p == Projectile::kNeutron ? 0 : 1;
}

FermiModel parse_fermi_model(const std::string& name) {
  if (name == "global") return FermiModel::kGlobal;
  if (name == "shell") return FermiModel::kShell;
  throw Error("unknown fermi model '" + name + "' (global | shell)");
}

double ls_expectation(int l, JSign j_sign) {
  if (l < 0) throw Error("ls_expectation: negative l");
  if (j_sign == JSign::kPlus) return 0.5 * l;
  if (l == 0) throw Error("ls_expectation: l = 0 has no j = l - 1/2 channel");
  return -0.5 * (l + 1);
}

OpticalPotentialParams global_params(const NucleusSpec& nucleus, double T,
                                     Projectile projectile,
                                     const GlobalParamOptions& options) {
  if (T <= 0) throw Error("global_params: requires T > 0");
  if (T < 20.0 || T > 1000.0)
    std::cerr << "scatent: warning: T = " << T
              << " MeV is outside the 20-1000 MeV range of the built-in "
                 "parameterization\n";

  const double A = nucleus.A;
  const double a13 = std::cbrt(A);
  const double alpha =
      options.isovector ? (nucleus.N - nucleus.Z) / A : 0.0;
  const double sign = projectile == Projectile::kProton ? 1.0 : -1.0;

  // Smooth n/p-symmetric coefficient set in the Koning-Delaroche form.
  double ef = -9.84445 + 0.02012 * A;
  const double v1 = 59.30 - 0.024 * A + sign * 21.0 * alpha;
  const EnergyPoly poly(0.0071475 + 1.375e-6 * A, 1.8615e-5 - 4.32e-9 * A,
                        7.1e-9);
  const double w1 = 13.431 + 0.0131645 * A;
  const double w2 = 73.55 + 0.0795 * A;
  const double d1 = 16.0 + sign * 16.0 * alpha;
  const double d2 = 0.0180 + 0.003802 / (1.0 + std::exp((A - 156.0) / 8.0));
  const double d3 = 11.5;
  const double vso1 = 5.922 + 0.0030 * A;
  const double vso2 = 0.0040;

  double radius_scale = 1.0;
  if (options.fermi_model == FermiModel::kShell) {
    const auto spectrum = single_particle_spectrum(nucleus, projectile);
    const int count =
        projectile == Projectile::kNeutron ? nucleus.N : nucleus.Z;
    ef = spectrum.fermi_energy(count);
    const double rms = shell_matter_rms(nucleus);
    radius_scale = rms / (std::sqrt(0.6) * 1.27 * a13);
    if (!(radius_scale > 0.8 && radius_scale < 1.2))
      throw Error("global_params: shell-model radius scale out of range");
  }

  OpticalPotentialParams p;
  p.energy = T;
  p.projectile = projectile;
  p.id = options.fermi_model == FermiModel::kShell ? "kd-sym-ext/shell"
                                                   : "kd-sym-ext";

  const double x = T - ef;
  p.real_volume.depth = v1 * poly.value(x);
  p.real_volume.radius_const = (1.3039 - 0.4054 / a13) * radius_scale;
  p.real_volume.diffuseness = 0.6778 - 1.487e-4 * A;

  if (projectile == Projectile::kProton && options.coulomb_correction) {
    const double rc_const =
        1.198 + 0.697 / (a13 * a13) + 12.994 / std::pow(a13, 5);
    const double vcbar = 1.73 * nucleus.Z / (rc_const * a13);
    p.real_volume.depth += -vcbar * v1 * poly.derivative(x);
  }

  p.imag_volume.depth = w1 * x * x / (x * x + w2 * w2);
  p.imag_volume.radius_const = p.real_volume.radius_const;
  p.imag_volume.diffuseness = p.real_volume.diffuseness;

  p.imag_surface.depth = d1 * x * x * std::exp(-d2 * x) / (x * x + d3 * d3);
  p.imag_surface.radius_const = (1.3424 - 0.01585 * a13) * radius_scale;
  p.imag_surface.diffuseness = 0.53165 + 1.7745e-4 * A;

  p.real_spin_orbit.depth = vso1 * std::exp(-vso2 * x);
  p.real_spin_orbit.radius_const = (1.1854 - 0.647 / a13) * radius_scale;
  p.real_spin_orbit.diffuseness = 0.59;

  // The absorptive spin-orbit strength of the published set is small and can
  // locally flip the sign of Im V in the j = l + 1/2 surface region; the
  // built-in set keeps it at zero so every channel is strictly absorptive.
  p.imag_spin_orbit.depth = 0.0;
  p.imag_spin_orbit.radius_const = p.real_spin_orbit.radius_const;
  p.imag_spin_orbit.diffuseness = p.real_spin_orbit.diffuseness;

  p.coulomb_radius_const = 1.198 + 0.697 / (a13 * a13) + 12.994 / std::pow(a13, 5);
  return p;
}

std::complex<double> evaluate_central(const OpticalPotentialParams& params,
                                      const NucleusSpec& nucleus, double r) {
  if (r <= 0) throw Error("potential evaluated at r <= 0");
  const double a13 = std::cbrt(static_cast<double>(nucleus.A));
  const auto& rv = params.real_volume;
  const auto& wv = params.imag_volume;
  const auto& wd = params.imag_surface;

  const double re = -rv.depth * ws_f(r, rv.radius_const * a13, rv.diffuseness);
  double im = -wv.depth * ws_f(r, wv.radius_const * a13, wv.diffuseness);
  im -= wd.depth * ws_surface(r, wd.radius_const * a13, wd.diffuseness);

  double vc = 0.0;
  if (params.projectile == Projectile::kProton && params.coulomb_enabled)
    vc = coulomb_sphere(r, params.coulomb_radius_const * a13, nucleus.Z);

  return {re + vc, im};
}

std::complex<double> evaluate_spin_orbit(const OpticalPotentialParams& params,
                                         const NucleusSpec& nucleus, double r) {
  if (r <= 0) throw Error("potential evaluated at r <= 0");
  const double a13 = std::cbrt(static_cast<double>(nucleus.A));
  const auto& vso = params.real_spin_orbit;
  const auto& wso = params.imag_spin_orbit;
  const double thomas_v =
      ws_dfdr(r, vso.radius_const * a13, vso.diffuseness) / r;
  const double thomas_w =
      ws_dfdr(r, wso.radius_const * a13, wso.diffuseness) / r;
  return {kPionComptonSq * vso.depth * thomas_v,
          kPionComptonSq * wso.depth * thomas_w};
}

std::complex<double> evaluate(const OpticalPotentialParams& params,
                              const NucleusSpec& nucleus, double r, int l,
                              JSign j_sign) {
  std::complex<double> v = evaluate_central(params, nucleus, r);
  if (l > 0 || j_sign == JSign::kPlus)
    v += 2.0 * ls_expectation(l, j_sign) *
         evaluate_spin_orbit(params, nucleus, r);
  return v;
}

PotentialProfile profile_on_grid(const OpticalPotentialParams& params,
                                 const NucleusSpec& nucleus,
                                 const std::vector<double>& grid, int l) {
  PotentialProfile prof;
  prof.l = l;
  prof.grid = grid;
  prof.central_plus.reserve(grid.size());
  prof.central_minus.reserve(grid.size());
  for (double r : grid) {
    const auto c = evaluate_central(params, nucleus, r);
    const auto so = evaluate_spin_orbit(params, nucleus, r);
    prof.central_plus.push_back(c + 2.0 * ls_expectation(l, JSign::kPlus) * so);
    prof.central_minus.push_back(
        l > 0 ? c + 2.0 * ls_expectation(l, JSign::kMinus) * so : c);
  }
  return prof;
}

OpticalPotentialParams load_potential_config(const std::string& path,
                                             Projectile projectile, double T) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open potential config '" + path + "'");

  OpticalPotentialParams p;
  p.projectile = projectile;
  p.energy = T;
  const auto slash = path.find_last_of('/');
  p.id = "file:" + (slash == std::string::npos ? path : path.substr(slash + 1));

  std::map<std::string, WoodsSaxonTerm*> sections = {
      {"real_volume", &p.real_volume},
      {"imag_volume", &p.imag_volume},
      {"imag_surface", &p.imag_surface},
      {"real_spin_orbit", &p.real_spin_orbit},
      {"imag_spin_orbit", &p.imag_spin_orbit}};
  for (auto& [name, term] : sections) *term = WoodsSaxonTerm{0.0, 1.0, 0.6};

  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    if (trimmed.front() == '[' && trimmed.back() == ']') {
      section = trimmed.substr(1, trimmed.size() - 2);
      if (!sections.count(section) && section != "coulomb")
        throw IoError(path + ":" + std::to_string(lineno) +
                      ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos || section.empty())
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": expected 'key = value' inside a section");
    const std::string key = trimmed.substr(0, eq);
    double value = 0;
    try {
      value = std::stod(trimmed.substr(eq + 1));
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(lineno) + ": bad number");
    }
    if (section == "coulomb") {
      if (key != "radius_const")
        throw IoError(path + ":" + std::to_string(lineno) +
                      ": [coulomb] only has radius_const");
      p.coulomb_radius_const = value;
      continue;
    }
    WoodsSaxonTerm* term = sections.at(section);
    if (key == "depth")
      term->depth = value;
    else if (key == "radius_const")
      term->radius_const = value;
    else if (key == "diffuseness")
      term->diffuseness = value;
    else
      throw IoError(path + ":" + std::to_string(lineno) + ": unknown key '" +
                    key + "'");
  }
  for (auto& [name, term] : sections)
    if (term->diffuseness <= 0 || term->radius_const <= 0)
      throw IoError(path + ": [" + name +
                    "] needs positive radius_const and diffuseness");
  return p;
}

}  // namespace scatent
