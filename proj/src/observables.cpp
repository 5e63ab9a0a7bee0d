#include "ncbound/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "ncbound/constants.hpp"

namespace ncbound::observables {

ParticleSpec electron() { return {"electron", kElectronRestEnergyMeV}; }
ParticleSpec proton() { return {"proton", kProtonRestEnergyMeV}; }

double energy_level(QuantumNumbers qn, double alpha_z, double eta) {
  qn.check();
  if (!(eta > 0.0)) throw std::domain_error("energy_level: eta must be > 0");
  const double n = qn.n;
  return -alpha_z * alpha_z / (2.0 * n * n * eta * eta);
}

double mean_distance(QuantumNumbers qn, double alpha_z, double eta) {
  qn.check();
  if (!(eta > 0.0)) throw std::domain_error("mean_distance: eta must be > 0");
  if (!(alpha_z > 0.0)) throw std::domain_error("mean_distance: alpha_z must be > 0");
  const double n = qn.n, l = qn.l;
  return eta * eta * (3.0 * n * n - l * (l + 1.0)) / (2.0 * alpha_z);
}

double schrodinger_energy(QuantumNumbers qn, double alpha_z) {
  qn.check();
  const double n = qn.n;
  return -alpha_z * alpha_z / (2.0 * n * n);
}

double dirac_ground_energy(double alpha_z) {
  if (!(alpha_z > 0.0 && alpha_z <= 1.0))
    throw std::domain_error("dirac_ground_energy: need 0 < alpha_z <= 1");
  return -1.0 + std::sqrt(1.0 - alpha_z * alpha_z);
}

double dirac_energy(int n, double j, double alpha_z) {
  if (n < 1) throw std::domain_error("dirac_energy: n must be >= 1");
  const double kappa = j + 0.5;
  if (!(alpha_z > 0.0 && alpha_z <= kappa))
    throw std::domain_error("dirac_energy: need 0 < alpha_z <= j + 1/2");
  const double denom = n - kappa + std::sqrt(kappa * kappa - alpha_z * alpha_z);
  const double ratio = alpha_z / denom;
  return 1.0 / std::sqrt(1.0 + ratio * ratio) - 1.0;
}

double compton_wavelength_cm(const ParticleSpec& p) {
  if (!(p.rest_energy_mev > 0.0)) throw std::domain_error("compton_wavelength: rest energy must be > 0");
  return 2.0 * M_PI * kHbarC_MeVcm / p.rest_energy_mev;
}

double position_impact_force_mev_per_cm(double delta_x_cm) {
  if (!(delta_x_cm > 0.0)) throw std::domain_error("position_impact_force: delta_x must be > 0");
  return kHbarC_MeVcm / (2.0 * delta_x_cm * delta_x_cm);
}

double momentum_impact_force_mev_per_cm(double delta_p_mev) {
  if (!(delta_p_mev > 0.0)) throw std::domain_error("momentum_impact_force: delta_p must be > 0");
  return 2.0 * delta_p_mev * delta_p_mev / kHbarC_MeVcm;
}

double measurement_duration_s(const ParticleSpec& p, double v_over_c) {
  if (!(p.rest_energy_mev > 0.0)) throw std::domain_error("measurement_duration: rest energy must be > 0");
  if (!(v_over_c >= 0.0 && v_over_c < 1.0))
    throw std::domain_error("measurement_duration: need 0 <= v/c < 1");
  return 2.0 * M_PI * kHbar_MeVs / p.rest_energy_mev * std::sqrt(1.0 - v_over_c * v_over_c);
}

}  // namespace ncbound::observables
