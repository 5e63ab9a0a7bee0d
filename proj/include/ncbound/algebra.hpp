#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace ncbound::algebra {

// One-dimensional two-body representation parameters: operators act on
// polynomials in the relative coordinate x and the center-of-mass X.
struct TwoBodyRep {
  double m1 = 1.0;
  double m2 = 1.0;
  double epsilon = 0.0;

  double total_mass() const { return m1 + m2; }
  void check() const {
    if (!(m1 > 0.0 && m2 > 0.0)) throw std::domain_error("TwoBodyRep: masses must be positive");
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::domain_error("TwoBodyRep: epsilon must be in [0,1)");
  }
};

// The six independent commutators, each a real multiple of i*hbar (the x-x
// and p-p entries are plain reals, both zero for a valid representation).
struct CommutatorTable {
  double x1_p1 = 0.0;
  double x2_p2 = 0.0;
  double x1_p2 = 0.0;
  double x2_p1 = 0.0;
  double x1_x2 = 0.0;
  double p1_p2 = 0.0;
};

// A commutator failed to act as a scalar on the polynomial test space.
struct RepresentationMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Symmetric, zero-diagonal matrix of pairwise noncommutativity parameters.
struct EpsilonMatrix {
  explicit EpsilonMatrix(int n) : entries(Eigen::MatrixXd::Zero(n, n)) {
    if (n < 2) throw std::domain_error("EpsilonMatrix: need N >= 2");
  }
  static EpsilonMatrix uniform(int n, double eps);

  int size() const { return static_cast<int>(entries.rows()); }
  void set(int j, int k, double eps);
  double operator()(int j, int k) const { return entries(j, k); }
  void check() const;

  Eigen::MatrixXd entries;
};

struct KineticCoefficients {
  Eigen::VectorXd A;   // diagonal Laplacian coefficients
  Eigen::MatrixXd B;   // symmetric cross-gradient coefficients, zero diagonal
};

struct ComSeparation {
  double com_coefficient = 0.0;        // must equal 1/M
  Eigen::MatrixXd relative_block;      // (N-1)x(N-1) quadratic form
  double max_offblock = 0.0;           // largest |coupling| between COM and relative rows
};

// Verify the two-body representation against the modified commutation table
// by exact action on polynomials in (x, X) of degree <= 6, and return the
// six scalars.
CommutatorTable commutator_table(const TwoBodyRep& rep);

// Gaussoid kernel 1 - exp(-omega * F^2 / (16 mu^4)), natural units.
double epsilon_kernel(double force_squared, double mu, double omega);

// A_i and B_ik induced by the noncommutativity matrix.
KineticCoefficients kinetic_coefficients(const std::vector<double>& masses,
                                         const EpsilonMatrix& eps);

// Kinetic quadratic form in gradient variables: diagonal A_i/m_i,
// off-diagonal B_ik/M.
Eigen::MatrixXd kinetic_form(const std::vector<double>& masses, const EpsilonMatrix& eps);

// Mass-weighted Jacobi rows (relative rows first, COM row last); reduces to
// the normed Jacobi coordinates for identical masses.
Eigen::MatrixXd jacobi_transform(const std::vector<double>& masses);

// Congruence-transform the kinetic form to Jacobi coordinates and report the
// COM coefficient, the relative block, and the residual COM coupling.
ComSeparation com_separation_check(const std::vector<double>& masses, const EpsilonMatrix& eps);

// Whether the relative-block form is dominated by its epsilon = 0 limit
// (kinetic energy not larger than the Schroedinger one).
bool kinetic_energy_bound_check(const std::vector<double>& masses, const EpsilonMatrix& eps);

}  // namespace ncbound::algebra
