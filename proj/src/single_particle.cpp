#include "scatent/single_particle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "scatent/constants.hpp"
#include "scatent/error.hpp"

namespace scatent {

namespace {

// Standard single-particle well: V = -(51 -+ 33 (N-Z)/A) f(r), r0 = 1.27 fm,
// a = 0.67 fm, Thomas spin-orbit strength tuned to the canonical level order.
constexpr double kSpRadiusConst = 1.27;
constexpr double kSpDiffuseness = 0.67;
constexpr double kSpSpinOrbit = 9.8;  // MeV, in the (hbar/m_pi c)^2 convention
constexpr double kSpStep = 0.02;      // fm

struct Well {
  double depth = 0;  // MeV, attractive magnitude
  double R = 0;
  double a = 0;
  double Rc = 0;     // Coulomb sphere radius, 0 for neutrons
  int charge = 0;    // core charge seen by the particle
  double c = 0;      // 2 mu / (hbar c)^2
};

double well_potential(const Well& w, double r, int l, int two_j) {
  const double x = (r - w.R) / w.a;
  double f;
  if (x > 0) {
    const double e = std::exp(-x);
    f = e / (1.0 + e);
  } else {
    f = 1.0 / (1.0 + std::exp(x));
  }
  double v = -w.depth * f;
  if (l > 0) {
    const double ls2 = two_j == 2 * l + 1 ? l : -(l + 1);
    v += kSpSpinOrbit * kPionComptonSq * (-f * (1.0 - f) / w.a) / r * ls2;
  }
  if (w.charge > 0) {
    if (r < w.Rc)
      v += w.charge * kE2 * (3.0 - (r / w.Rc) * (r / w.Rc)) / (2.0 * w.Rc);
    else
      v += w.charge * kE2 / r;
  }
  return v;
}

// Outward Numerov sweep; returns u at the outer edge (sign is what matters).
// When out != nullptr the trajectory is stored for normalization integrals.
double shoot(const Well& w, int l, int two_j, double E, double r_max,
             std::vector<double>* out) {
  const double h = kSpStep;
  const double h2_12 = h * h / 12.0;
  const int n = static_cast<int>(r_max / h);
  auto q = [&](int i) {
    const double r = (i + 1) * h;
    return l * (l + 1) / (r * r) + w.c * (well_potential(w, r, l, two_j) - E);
  };
  double um = 1e-30;
  double u0 = um * std::pow((2.0 * h) / h, l + 1);
  double qm = q(0), q0 = q(1);
  if (out) {
    out->assign(static_cast<size_t>(n), 0.0);
    (*out)[0] = um;
    (*out)[1] = u0;
  }
  for (int i = 2; i < n; ++i) {
    const double q1 = q(i);
    double u1 = ((2.0 + 10.0 * h2_12 * q0) * u0 - (1.0 - h2_12 * qm) * um) /
                (1.0 - h2_12 * q1);
    um = u0;
    u0 = u1;
    qm = q0;
    q0 = q1;
    if (std::abs(u0) > 1e200) {
      um *= 1e-200;
      u0 *= 1e-200;
      if (out)
        for (int j2 = 0; j2 < i; ++j2) (*out)[static_cast<size_t>(j2)] *= 1e-200;
    }
    if (out) (*out)[static_cast<size_t>(i)] = u0;
  }
  return u0;
}

double level_mean_square_radius(const Well& w, int l, int two_j, double E,
                                double r_max) {
  std::vector<double> u;
  shoot(w, l, two_j, E, r_max, &u);
  // The outward solution picks up the growing exponential beyond the decay
  // region; integrate only until the tail starts to rise again.
  double umax = 0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  size_t stop = u.size();
  for (size_t i = 1; i + 1 < u.size(); ++i) {
    if (std::abs(u[i]) < 1e-5 * umax && std::abs(u[i + 1]) > std::abs(u[i])) {
      stop = i;
      break;
    }
  }
  double norm = 0, msr = 0;
  for (size_t i = 0; i < stop; ++i) {
    const double r = (i + 1) * kSpStep;
    norm += u[i] * u[i];
    msr += u[i] * u[i] * r * r;
  }
  if (norm <= 0) throw Error("single-particle level normalization failed");
  return msr / norm;
}

SingleParticleSpectrum compute_spectrum(const NucleusSpec& nucleus,
                                        Projectile species) {
  const double A = nucleus.A;
  const double alpha = (nucleus.N - nucleus.Z) / A;
  Well w;
  w.depth = species == Projectile::kNeutron ? 51.0 - 33.0 * alpha
                                            : 51.0 + 33.0 * alpha;
  w.R = kSpRadiusConst * std::cbrt(A);
  w.a = kSpDiffuseness;
  if (species == Projectile::kProton) {
    w.Rc = w.R;
    w.charge = nucleus.Z - 1;
  }
  const double m = projectile_mass(species);
  const double mcore = (A - 1.0) * kAmu;
  const double mu = m * mcore / (m + mcore);
  w.c = 2.0 * mu / (kHbarC * kHbarC);

  const double r_max = w.R + 22.0;
  const double e_bot = -(w.depth + 30.0);
  const double e_top = -0.02;
  const double e_step = 0.25;

  SingleParticleSpectrum spec;
  for (int l = 0; l <= 9; ++l) {
    for (int two_j : {2 * l + 1, 2 * l - 1}) {
      if (two_j < 1) continue;
      double e_prev = e_bot;
      double u_prev = shoot(w, l, two_j, e_prev, r_max, nullptr);
      for (double e = e_bot + e_step; e < e_top + 1e-12; e += e_step) {
        const double u_here = shoot(w, l, two_j, e, r_max, nullptr);
        if (u_prev * u_here < 0) {
          double lo = e_prev, hi = e, ulo = u_prev;
          for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double umid = shoot(w, l, two_j, mid, r_max, nullptr);
            if (ulo * umid <= 0) {
              hi = mid;
            } else {
              lo = mid;
              ulo = umid;
            }
            if (hi - lo < 1e-10) break;
          }
          SingleParticleLevel lev;
          lev.l = l;
          lev.two_j = two_j;
          lev.energy = 0.5 * (lo + hi);
          lev.degeneracy = two_j + 1;
          lev.mean_square_radius =
              level_mean_square_radius(w, l, two_j, lev.energy, r_max);
          spec.levels.push_back(lev);
        }
        e_prev = e;
        u_prev = u_here;
      }
    }
  }
  std::sort(spec.levels.begin(), spec.levels.end(),
            [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return spec;
}

std::mutex g_cache_mutex;
std::map<std::tuple<int, int, int>, SingleParticleSpectrum> g_cache;

}  // namespace

double SingleParticleSpectrum::fermi_energy(int count) const {
  if (count < 1) throw Error("fermi_energy: needs at least one particle");
  double e_last = 0, e_next = 0;
  int filled = 0;
  bool have_last = false, have_next = false;
  for (const auto& lev : levels) {
    if (!have_last) {
      filled += lev.degeneracy;
      if (filled >= count) {
        e_last = lev.energy;
        have_last = true;
        if (filled >= count + 1) {
          e_next = lev.energy;
          have_next = true;
        }
        continue;
      }
    } else if (!have_next) {
      e_next = lev.energy;
      have_next = true;
      break;
    }
  }
  if (!have_last) return -0.1;  // beyond the well capacity
  if (!have_next) return 0.5 * e_last;
  return 0.5 * (e_last + e_next);
}

double SingleParticleSpectrum::filled_mean_square_radius(int count) const {
  if (count < 1) throw Error("filled_mean_square_radius: empty configuration");
  double sum = 0;
  int remaining = count;
  for (const auto& lev : levels) {
    const int take = std::min(remaining, lev.degeneracy);
    sum += take * lev.mean_square_radius;
    remaining -= take;
    if (remaining == 0) break;
  }
  if (remaining > 0)
    throw Error("filled_mean_square_radius: well holds fewer than " +
                std::to_string(count) + " particles");
  return sum / count;
}

int SingleParticleSpectrum::bound_capacity() const {
  int c = 0;
  for (const auto& lev : levels) c += lev.degeneracy;
  return c;
}

SingleParticleSpectrum single_particle_spectrum(const NucleusSpec& nucleus,
                                                Projectile species) {
  const auto key = std::make_tuple(nucleus.Z, nucleus.N,
                                   species == Projectile::kNeutron ? 0 : 1);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  SingleParticleSpectrum spec = compute_spectrum(nucleus, species);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(key, spec);
  return spec;
}

double shell_matter_rms(const NucleusSpec& nucleus) {
  const auto sn = single_particle_spectrum(nucleus, Projectile::kNeutron);
  const auto sp = single_particle_spectrum(nucleus, Projectile::kProton);
  const double msr_n = nucleus.N > 0 ? sn.filled_mean_square_radius(
                                           std::min(nucleus.N, sn.bound_capacity()))
                                     : 0.0;
  const double msr_p =
      sp.filled_mean_square_radius(std::min(nucleus.Z, sp.bound_capacity()));
  const int n_eff = std::min(nucleus.N, sn.bound_capacity());
  const int z_eff = std::min(nucleus.Z, sp.bound_capacity());
  return std::sqrt((n_eff * msr_n + z_eff * msr_p) / (n_eff + z_eff));
}

}  // namespace scatent
