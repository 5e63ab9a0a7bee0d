#pragma once

#include <stdexcept>

namespace ncbound::radial {

// Hydrogenic level labels. n >= 1, 0 <= l <= n-1, n capped at 20 so the
// factorial table (up to 40) covers every normalization constant.
struct QuantumNumbers {
  int n = 1;
  int l = 0;

  bool valid() const { return n >= 1 && n <= kMaxPrincipal && l >= 0 && l < n; }
  void check() const {
    if (!valid()) throw std::domain_error("invalid quantum numbers (need 1 <= n <= 20, 0 <= l < n)");
  }

  static constexpr int kMaxPrincipal = 20;
};

// Radial state with the rescaled Bohr radius. eta = 1 - epsilon in (0,1];
// length_scale = eta*n/alphaZ is the effective Bohr radius in hbar/(mu c).
struct RadialState {
  QuantumNumbers qn;
  double eta = 1.0;
  double length_scale = 1.0;

  RadialState(QuantumNumbers q, double eta_, double alpha_z);
};

// Exact factorial from a precomputed table, m <= 40.
double factorial(int m);

// F(-n+l+1, 2l+2, x): finite confluent-hypergeometric polynomial of degree
// n-l-1, summed with the exact term-ratio recurrence.
double hypergeometric_polynomial(QuantumNumbers qn, double x);

// N_nl for the chi_nl(r) radial function, natural units (hbar = c = 1,
// lengths in hbar/(mu c)); includes the (2 alphaZ /(eta n))^{l+3/2} scale.
double normalization_constant(QuantumNumbers qn, double eta, double alpha_z);

// chi_nl(r) = N_nl r^{l+1} F(-n+l+1, 2l+2, 2 alphaZ r/(eta n)) exp(-alphaZ r/(eta n)).
// Decaying exponential: the bound-state branch, normalized per int chi^2 dr = 1.
double radial_wavefunction(const RadialState& state, double alpha_z, double r);

}  // namespace ncbound::radial
