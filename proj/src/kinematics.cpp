#include "scatent/kinematics.hpp"

#include <cmath>

#include "scatent/constants.hpp"
#include "scatent/error.hpp"

namespace scatent {

double wave_number(double T, const ParticlePair& pair) {
  if (T < 0) throw Error("wave_number: negative kinetic energy");
  if (pair.m1 <= 0 || pair.m2 <= 0) throw Error("wave_number: masses must be positive");
  const double num = pair.m2 * pair.m2 * (T * T + 2.0 * pair.m1 * T);
  const double den = (pair.m1 + pair.m2) * (pair.m1 + pair.m2) + 2.0 * pair.m2 * T;
  return std::sqrt(num / den) / kHbarC;
}

double wave_number_leading_order(double T, const ParticlePair& pair) {
  if (T < 0) throw Error("wave_number: negative kinetic energy");
  const double s = pair.m1 + pair.m2;
  return std::sqrt(2.0 * pair.m1 * T) * pair.m2 / (s * kHbarC);
}

Kinematics make_kinematics(double T, const ParticlePair& pair) {
  Kinematics kin;
  kin.T = T;
  kin.k = wave_number(T, pair);
  const double p2 = kHbarC * kin.k * kHbarC * kin.k;
  const double e1 = std::sqrt(pair.m1 * pair.m1 + p2);
  const double e2 = std::sqrt(pair.m2 * pair.m2 + p2);
  kin.reduced_mass = e1 * e2 / (e1 + e2);
  kin.two_mu_over_hbar2 = 2.0 * kin.reduced_mass / (kHbarC * kHbarC);
  return kin;
}

GrazingGeometry grazing(int A, double k) {
  if (A < 1) throw Error("grazing: A must be >= 1");
  if (k < 0) throw Error("grazing: negative wave number");
  GrazingGeometry g;
  const double a13 = std::cbrt(static_cast<double>(A));
  g.x0 = g.r0 + 3.0 * g.a_diff / a13;
  g.R = g.x0 * a13;
  g.l_max = static_cast<int>(std::floor(k * g.R));
  return g;
}

double uniform_plane(double T, double A, double a) {
  return a + 0.5 * std::log(T) + std::log(A) / 3.0;
}

UniformEntropy uniform_entropy(double T, const NucleusSpec& nucleus,
                               const ParticlePair& pair) {
  if (T <= 0) throw Error("uniform_entropy: requires T > 0");
  const double k_lo = wave_number_leading_order(T, pair);
  const GrazingGeometry g = grazing(nucleus.A, k_lo);
  UniformEntropy u;
  u.l_max = g.l_max;
  u.S = std::log(static_cast<double>(g.l_max + 1));
  u.a = std::log(g.x0 * std::sqrt(2.0 * pair.m1) / kHbarC) +
        std::log(pair.m2 / (pair.m1 + pair.m2));
  u.S_continuous = uniform_plane(T, nucleus.A, u.a);
  return u;
}

}  // namespace scatent
