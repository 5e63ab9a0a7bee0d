#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncbound/constants.hpp"
#include "ncbound/quad.hpp"
#include "ncbound/radial.hpp"

namespace ncbound::selfconsist {

using quad::NonConvergenceError;
using quad::QuadratureSpec;
using radial::QuantumNumbers;

struct Coupling {
  double alpha_z = 0.0;
  double omega = kOmegaCritical;

  double g() const {
    const double a2 = alpha_z * alpha_z;
    return omega * a2 * a2 * a2;
  }
  void check() const {
    if (!(alpha_z > 0.0)) throw std::domain_error("Coupling: alpha_z must be > 0");
    if (!(omega >= 0.0)) throw std::domain_error("Coupling: omega must be >= 0");
  }
};

enum class Branch { upper, lower };

struct SelfConsistentSolution {
  QuantumNumbers qn;
  Coupling coupling;
  double eta = 1.0;
  double epsilon = 0.0;
  double energy = 0.0;         // mu*c^2
  double mean_distance = 0.0;  // hbar/(mu c)
  double residual = 0.0;
  int iterations = 0;
  Branch branch = Branch::upper;
};

struct CriticalPoint {
  QuantumNumbers qn;
  double g_critical = 0.0;
  double alpha_z_critical = 0.0;  // at omega = kOmegaCritical
  double eta_critical = 0.0;
};

// No fixed point on (0,1]: g exceeds the level's critical coupling.
struct NoSolutionError : std::runtime_error {
  NoSolutionError(QuantumNumbers qn_, double g_, std::string what)
      : std::runtime_error(std::move(what)), qn(qn_), g(g_) {}
  QuantumNumbers qn;
  double g;
};

// Right-hand side of the eta fixed-point equation: the self-consistency
// integral at singular strength c = g / (eta^8 n^4).
double rhs(QuantumNumbers qn, double g, double eta, const QuadratureSpec& spec = {});

// All roots of rhs(eta) - eta on (0,1], dense-grid bracketing plus bisection.
// A near-tangent maximum within tangency_tol of zero counts as a double root.
std::vector<double> find_roots(QuantumNumbers qn, double g, double tol = 1e-8,
                               int grid_points = 2000, double tangency_tol = 1e-4);

// Solve the level, returning the root nearest 1 (the physical upper branch);
// throws NoSolutionError past the critical coupling.
SelfConsistentSolution solve_level(QuantumNumbers qn, Coupling coupling, double tol = 1e-8);

// Largest g for which the level has a fixed point, by bisection on existence
// of max_eta [rhs(eta) - eta] >= 0.
CriticalPoint critical_g(QuantumNumbers qn, double tol = 1e-5);

// Tabulate rhs over an eta grid, for curve emission.
std::vector<std::pair<double, double>> rhs_curve(QuantumNumbers qn, double g,
                                                 std::span<const double> eta_grid);

}  // namespace ncbound::selfconsist
