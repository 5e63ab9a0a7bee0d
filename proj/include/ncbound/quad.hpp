#pragma once

#include <stdexcept>

#include "ncbound/radial.hpp"

namespace ncbound::quad {

struct QuadratureSpec {
  double rel_tolerance = 1e-10;
  int max_subdivisions = 4000;
  int node_count = 32;  // Gauss-Legendre rule size, >= 16

  void check() const {
    if (!(rel_tolerance > 0.0)) throw std::domain_error("QuadratureSpec: rel_tolerance must be > 0");
    if (node_count < 16) throw std::domain_error("QuadratureSpec: node_count must be >= 16");
    if (max_subdivisions < 1) throw std::domain_error("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S_nl * int_0^inf x^{2l+2} e^{-x} e^{-c/x^4} F^2(-n+l+1, 2l+2, x) dx with
// S_nl = [1/((2l+1)!)^2] * (n+l)!/(2n(n-l-1)!).  The weight has an essential
// suppression at the origin: the integrand is taken as 0 at x = 0.
double integrate_selfconsistency(radial::QuantumNumbers qn, double c,
                                 const QuadratureSpec& spec = {});

// Same weight and prefactor with an extra x^power factor (power >= -1);
// used for mean-distance moments at c = 0.
double integrate_moment(radial::QuantumNumbers qn, double c, int power,
                        const QuadratureSpec& spec = {});

}  // namespace ncbound::quad
