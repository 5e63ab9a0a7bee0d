#include "ncbound/radial.hpp"

#include <array>
#include <cmath>

namespace ncbound::radial {

namespace {

constexpr int kFactorialMax = 40;

std::array<double, kFactorialMax + 1> build_factorials() {
  std::array<double, kFactorialMax + 1> t{};
  t[0] = 1.0;
  for (int m = 1; m <= kFactorialMax; ++m) t[m] = t[m - 1] * m;
  return t;
}

const std::array<double, kFactorialMax + 1> kFactorials = build_factorials();

}  // namespace

double factorial(int m) {
  if (m < 0 || m > kFactorialMax) throw std::domain_error("factorial: argument out of table range");
  return kFactorials[m];
}

RadialState::RadialState(QuantumNumbers q, double eta_, double alpha_z) : qn(q), eta(eta_) {
  qn.check();
  if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("RadialState: eta must be in (0,1]");
  if (!(alpha_z > 0.0)) throw std::domain_error("RadialState: alpha_z must be positive");
  length_scale = eta * qn.n / alpha_z;
}

double hypergeometric_polynomial(QuantumNumbers qn, double x) {
  qn.check();
  if (x < 0.0) throw std::domain_error("hypergeometric_polynomial: x must be >= 0");
  const int degree = qn.n - qn.l - 1;
  const double a = -degree;       // first argument -n+l+1
  const double b = 2 * qn.l + 2;  // second argument 2l+2
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < degree; ++k) {
    term *= (a + k) / ((b + k) * (k + 1)) * x;
    sum += term;
  }
  return sum;
}

double normalization_constant(QuantumNumbers qn, double eta, double alpha_z) {
  qn.check();
  if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("normalization_constant: eta must be in (0,1]");
  if (!(alpha_z > 0.0)) throw std::domain_error("normalization_constant: alpha_z must be positive");
  const int n = qn.n;
  const int l = qn.l;
  const double ratio = std::sqrt(factorial(n + l) / (2.0 * n * factorial(n - l - 1)));
  const double scale = 2.0 * alpha_z / (eta * n);  // 2Z/((1-eps) n a0) in mu*c/hbar units
  return ratio / factorial(2 * l + 1) * std::pow(scale, l + 1.5);
}

double radial_wavefunction(const RadialState& state, double alpha_z, double r) {
  if (r < 0.0) throw std::domain_error("radial_wavefunction: r must be >= 0");
  const double scale = alpha_z / (state.eta * state.qn.n);
  const double x = 2.0 * scale * r;
  const double norm = normalization_constant(state.qn, state.eta, alpha_z);
  return norm * std::pow(r, state.qn.l + 1) * hypergeometric_polynomial(state.qn, x) *
         std::exp(-scale * r);
}

}  // namespace ncbound::radial
