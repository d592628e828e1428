#pragma once

#include "scatent/nuclide.hpp"

namespace scatent {

struct ParticlePair {
  double m1 = 0;  // projectile rest mass, MeV
  double m2 = 0;  // target rest mass, MeV
};

struct Kinematics {
  double T = 0;                  // projectile lab kinetic energy, MeV
  double k = 0;                  // cm wave number, fm^-1
  double reduced_mass = 0;       // relativistic reduced mass E1 E2 / (E1 + E2), MeV
  double two_mu_over_hbar2 = 0;  // 2 mu / (hbar c)^2, MeV^-1 fm^-2
};

// Exact relativistic cm wave number for a beam of kinetic energy T on a target
// at rest: (hbarc k)^2 = m2^2 (T^2 + 2 m1 T) / ((m1 + m2)^2 + 2 m2 T).
double wave_number(double T, const ParticlePair& pair);

// Leading-order term of the same expression, (hbarc k)^2 = 2 m1 m2^2 T / (m1+m2)^2.
// Never exceeds the exact value; equal at T = 0 or m1 = m2.
double wave_number_leading_order(double T, const ParticlePair& pair);

Kinematics make_kinematics(double T, const ParticlePair& pair);

struct GrazingGeometry {
  double r0 = 1.15;      // fm
  double a_diff = 0.55;  // fm
  double x0 = 0;         // r0 + 3 a / A^(1/3), fm
  double R = 0;          // x0 A^(1/3), fm
  int l_max = 0;         // floor(k R)
};

GrazingGeometry grazing(int A, double k);

// Entropy of the uniform partial-wave model.  S assumes equal weight on the
// n = l_max + 1 grazing channels; the continuous form drops the flooring and
// collapses to the plane a + ln(T)/2 + ln(A)/3 built from the leading-order k.
struct UniformEntropy {
  double S = 0;
  double S_continuous = 0;
  double a = 0;
  int l_max = 0;
};

UniformEntropy uniform_entropy(double T, const NucleusSpec& nucleus,
                               const ParticlePair& pair);

// The closed-form plane itself, for slope and scaling checks.
double uniform_plane(double T, double A, double a);

}  // namespace scatent
