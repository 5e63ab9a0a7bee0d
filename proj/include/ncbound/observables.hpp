#pragma once

#include <string>

#include "ncbound/radial.hpp"

namespace ncbound::observables {

using radial::QuantumNumbers;

// Side-by-side level energies (mu*c^2 units) at one coupling.
struct EnergyComparison {
  QuantumNumbers qn;
  double alpha_z = 0.0;
  double schrodinger = 0.0;
  double dirac = 0.0;
  double noncommutative = 0.0;
};

struct ParticleSpec {
  std::string name;
  double rest_energy_mev = 0.0;  // mu*c^2 in MeV
};

ParticleSpec electron();
ParticleSpec proton();

// E_nl = -(alphaZ)^2 / (2 n^2 eta^2), mu*c^2 units.
double energy_level(QuantumNumbers qn, double alpha_z, double eta);

// <|r2 - r1|> = eta^2 [3n^2 - l(l+1)] / (2 alphaZ), hbar/(mu c) units.
// The eta^2 combines the eta-stretched orbital with the (1-eps) contraction
// of the physical separation operator.
double mean_distance(QuantumNumbers qn, double alpha_z, double eta);

// Reference spectra, mu*c^2 units.
double schrodinger_energy(QuantumNumbers qn, double alpha_z);
double dirac_ground_energy(double alpha_z);
// Sommerfeld fine-structure level; j is the half-integer total angular momentum.
double dirac_energy(int n, double j, double alpha_z);

// Order-of-magnitude measurement estimates.
double compton_wavelength_cm(const ParticleSpec& p);
double position_impact_force_mev_per_cm(double delta_x_cm);
double momentum_impact_force_mev_per_cm(double delta_p_mev);
double measurement_duration_s(const ParticleSpec& p, double v_over_c);

}  // namespace ncbound::observables
