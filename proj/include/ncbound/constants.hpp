#pragma once

namespace ncbound {

// Critical value of the combined coupling g = Omega*(alphaZ)^6 for the
// ground state; also the default Omega, which calibrates the kernel
// constant against the Dirac critical charge Z_c = 1/alpha.
inline constexpr double kOmegaCritical = 0.40765;

// hbar*c in MeV*cm.
inline constexpr double kHbarC_MeVcm = 1.9733e-11;

// hbar in MeV*s.
inline constexpr double kHbar_MeVs = 6.58212e-22;

inline constexpr double kElectronRestEnergyMeV = 0.5110;
inline constexpr double kProtonRestEnergyMeV = 938.27;

}  // namespace ncbound
