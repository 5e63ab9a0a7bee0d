#include "ncbound/algebra.hpp"

#include <cmath>
#include <functional>

namespace ncbound::algebra {

namespace {

// Polynomials in (x, X): coeff(a, b) multiplies x^a X^b.  The operators are
// degree-1 in (x, X, d/dx, d/dX), so degree 8 storage holds every
// intermediate when testing monomials of total degree <= 6.
constexpr int kPolyDim = 9;
using Poly = Eigen::Matrix<double, kPolyDim, kPolyDim>;
using PolyOp = std::function<Poly(const Poly&)>;

Poly mul_x(const Poly& p) {
  Poly q = Poly::Zero();
  for (int a = 0; a + 1 < kPolyDim; ++a)
    for (int b = 0; b < kPolyDim; ++b) q(a + 1, b) = p(a, b);
  return q;
}

Poly mul_X(const Poly& p) {
  Poly q = Poly::Zero();
  for (int a = 0; a < kPolyDim; ++a)
    for (int b = 0; b + 1 < kPolyDim; ++b) q(a, b + 1) = p(a, b);
  return q;
}

Poly d_x(const Poly& p) {
  Poly q = Poly::Zero();
  for (int a = 1; a < kPolyDim; ++a)
    for (int b = 0; b < kPolyDim; ++b) q(a - 1, b) = a * p(a, b);
  return q;
}

Poly d_X(const Poly& p) {
  Poly q = Poly::Zero();
  for (int a = 0; a < kPolyDim; ++a)
    for (int b = 1; b < kPolyDim; ++b) q(a, b - 1) = b * p(a, b);
  return q;
}

// Scalar s with [A,B] = s * identity on all monomials of total degree <= 6;
// throws if the commutator is not proportional to the identity.
double commutator_scalar(const PolyOp& A, const PolyOp& B) {
  bool have_scalar = false;
  double scalar = 0.0;
  for (int a = 0; a + 0 <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      Poly mono = Poly::Zero();
      mono(a, b) = 1.0;
      const Poly comm = A(B(mono)) - B(A(mono));
      const double s = comm(a, b);
      Poly rest = comm;
      rest(a, b) = 0.0;
      if (rest.cwiseAbs().maxCoeff() > 1e-12)
        throw RepresentationMismatch("commutator is not a multiple of the identity");
      if (!have_scalar) {
        scalar = s;
        have_scalar = true;
      } else if (std::abs(s - scalar) > 1e-12) {
        throw RepresentationMismatch("commutator scalar varies across the test space");
      }
    }
  }
  return scalar;
}

}  // namespace

CommutatorTable commutator_table(const TwoBodyRep& rep) {
  rep.check();
  const double M = rep.total_mass();
  const double a1 = -(1.0 - rep.epsilon) * rep.m2 / M;
  const double a2 = (1.0 - rep.epsilon) * rep.m1 / M;
  const double w1 = rep.m1 / M;
  const double w2 = rep.m2 / M;

  // x1 = a1 x + X, x2 = a2 x + X; p_j = i*hbar*D_j with
  // D1 = d/dx - (m1/M) d/dX, D2 = -d/dx - (m2/M) d/dX.
  const PolyOp x1 = [a1](const Poly& p) { return Poly(a1 * mul_x(p) + mul_X(p)); };
  const PolyOp x2 = [a2](const Poly& p) { return Poly(a2 * mul_x(p) + mul_X(p)); };
  const PolyOp D1 = [w1](const Poly& p) { return Poly(d_x(p) - w1 * d_X(p)); };
  const PolyOp D2 = [w2](const Poly& p) { return Poly(-d_x(p) - w2 * d_X(p)); };

  CommutatorTable t;
  t.x1_p1 = commutator_scalar(x1, D1);
  t.x2_p2 = commutator_scalar(x2, D2);
  t.x1_p2 = commutator_scalar(x1, D2);
  t.x2_p1 = commutator_scalar(x2, D1);
  t.x1_x2 = commutator_scalar(x1, x2);
  t.p1_p2 = commutator_scalar(D1, D2);
  return t;
}

double epsilon_kernel(double force_squared, double mu, double omega) {
  if (!(force_squared >= 0.0)) throw std::domain_error("epsilon_kernel: F^2 must be >= 0");
  if (!(mu > 0.0)) throw std::domain_error("epsilon_kernel: mu must be > 0");
  if (!(omega >= 0.0)) throw std::domain_error("epsilon_kernel: omega must be >= 0");
  const double mu2 = mu * mu;
  return -std::expm1(-omega * force_squared / (16.0 * mu2 * mu2));
}

EpsilonMatrix EpsilonMatrix::uniform(int n, double eps) {
  EpsilonMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) m.set(j, k, eps);
  return m;
}

void EpsilonMatrix::set(int j, int k, double eps) {
  if (j == k) throw std::domain_error("EpsilonMatrix: diagonal entries are identically zero");
  if (!(eps >= 0.0 && eps < 1.0)) throw std::domain_error("EpsilonMatrix: entries must be in [0,1)");
  entries(j, k) = eps;
  entries(k, j) = eps;
}

void EpsilonMatrix::check() const {
  const int n = size();
  for (int j = 0; j < n; ++j) {
    if (entries(j, j) != 0.0) throw std::domain_error("EpsilonMatrix: nonzero diagonal");
    for (int k = 0; k < n; ++k) {
      if (entries(j, k) != entries(k, j)) throw std::domain_error("EpsilonMatrix: not symmetric");
      if (!(entries(j, k) >= 0.0 && entries(j, k) < 1.0))
        throw std::domain_error("EpsilonMatrix: entries must be in [0,1)");
    }
  }
}

KineticCoefficients kinetic_coefficients(const std::vector<double>& masses,
                                         const EpsilonMatrix& eps) {
  const int n = static_cast<int>(masses.size());
  if (n != eps.size()) throw std::invalid_argument("kinetic_coefficients: size mismatch");
  eps.check();
  double M = 0.0;
  for (double m : masses) {
    if (!(m > 0.0)) throw std::domain_error("kinetic_coefficients: masses must be positive");
    M += m;
  }

  KineticCoefficients kc;
  kc.A = Eigen::VectorXd::Zero(n);
  kc.B = Eigen::MatrixXd::Zero(n, n);

  Eigen::VectorXd sigma = Eigen::VectorXd::Zero(n);  // sum_q (m_q/M) eps_iq
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q) sigma(i) += masses[q] / M * eps(i, q);

  for (int i = 0; i < n; ++i) {
    double sq = 0.0;
    for (int q = 0; q < n; ++q) sq += masses[i] * masses[q] / (M * M) * eps(i, q) * eps(i, q);
    kc.A(i) = (1.0 - sigma(i)) * (1.0 - sigma(i)) + sq;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      double cross = 0.0;
      for (int q = 0; q < n; ++q) cross += masses[q] / M * eps(i, q) * eps(k, q);
      const double b = (2.0 - sigma(i) - sigma(k)) * eps(i, k) + cross;
      kc.B(i, k) = b;
      kc.B(k, i) = b;
    }
  }
  return kc;
}

Eigen::MatrixXd kinetic_form(const std::vector<double>& masses, const EpsilonMatrix& eps) {
  const int n = static_cast<int>(masses.size());
  const KineticCoefficients kc = kinetic_coefficients(masses, eps);
  double M = 0.0;
  for (double m : masses) M += m;
  Eigen::MatrixXd K = kc.B / M;
  for (int i = 0; i < n; ++i) K(i, i) = kc.A(i) / masses[i];
  return K;
}

Eigen::MatrixXd jacobi_transform(const std::vector<double>& masses) {
  const int n = static_cast<int>(masses.size());
  if (n < 2) throw std::domain_error("jacobi_transform: need at least two masses");
  double M = 0.0;
  for (double m : masses) {
    if (!(m > 0.0)) throw std::domain_error("jacobi_transform: masses must be positive");
    M += m;
  }
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n, n);
  double partial = masses[0];
  for (int k = 1; k < n; ++k) {
    const double norm = std::sqrt(static_cast<double>(k) / (k + 1));
    for (int s = 0; s < k; ++s) U(k - 1, s) = norm * masses[s] / partial;
    U(k - 1, k) = -norm;
    partial += masses[k];
  }
  for (int s = 0; s < n; ++s) U(n - 1, s) = masses[s] / M;  // center of mass, last row
  return U;
}

ComSeparation com_separation_check(const std::vector<double>& masses, const EpsilonMatrix& eps) {
  const int n = static_cast<int>(masses.size());
  const Eigen::MatrixXd K = kinetic_form(masses, eps);
  const Eigen::MatrixXd U = jacobi_transform(masses);
  const Eigen::MatrixXd Kq = U * K * U.transpose();

  ComSeparation out;
  out.com_coefficient = Kq(n - 1, n - 1);
  out.relative_block = Kq.topLeftCorner(n - 1, n - 1);
  out.max_offblock = Kq.row(n - 1).head(n - 1).cwiseAbs().maxCoeff();
  return out;
}

bool kinetic_energy_bound_check(const std::vector<double>& masses, const EpsilonMatrix& eps) {
  const int n = static_cast<int>(masses.size());
  const ComSeparation with_eps = com_separation_check(masses, eps);
  const ComSeparation schroedinger = com_separation_check(masses, EpsilonMatrix(n));
  const Eigen::MatrixXd diff = schroedinger.relative_block - with_eps.relative_block;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff);
  return es.eigenvalues().minCoeff() >= -1e-12;
}

}  // namespace ncbound::algebra
