#pragma once

// Unit conventions used throughout: energies and masses in MeV, lengths in fm,
// wave numbers in fm^-1, cross sections in fm^2 (1 fm^2 = 10 mb), entropy in nats.

namespace scatent {

inline constexpr double kHbarC = 197.3269804;  // MeV fm
inline constexpr double kAmu = 931.49410;      // MeV per atomic mass unit
inline constexpr double kNeutronMass = 939.56542;   // MeV
inline constexpr double kProtonMass = 938.27209;    // MeV
inline constexpr double kElectronMass = 0.51099895; // MeV
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kE2 = kHbarC * kFineStructure;  // e^2 in MeV fm
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFm2ToMb = 10.0;
// (hbar / m_pi c)^2, the conventional scale of the Thomas spin-orbit term.
inline constexpr double kPionComptonSq = 2.0;  // fm^2

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scatent
