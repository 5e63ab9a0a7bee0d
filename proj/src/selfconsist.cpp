#include "ncbound/selfconsist.hpp"

#include <algorithm>
#include <cmath>

#include "ncbound/observables.hpp"

namespace ncbound::selfconsist {

namespace {

constexpr double kEtaMin = 1e-3;  // below this, eta^8 drives c beyond any suppression scale
constexpr double kRootMergeDistance = 0.02;

double fixed_point_gap(QuantumNumbers qn, double g, double eta, const QuadratureSpec& spec) {
  return rhs(qn, g, eta, spec) - eta;
}

struct BisectedRoot {
  double eta;
  double residual;
  int iterations;
};

BisectedRoot bisect_root(QuantumNumbers qn, double g, double a, double b, double fa, double tol,
                         const QuadratureSpec& spec) {
  int iters = 0;
  while (b - a > tol && iters < 200) {
    const double m = 0.5 * (a + b);
    const double fm = fixed_point_gap(qn, g, m, spec);
    ++iters;
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  const double eta = 0.5 * (a + b);
  return {eta, std::abs(fixed_point_gap(qn, g, eta, spec)), iters};
}

// Golden-section maximum of the gap h(eta) on [a, b].
std::pair<double, double> golden_max(QuantumNumbers qn, double g, double a, double b,
                                     const QuadratureSpec& spec) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fixed_point_gap(qn, g, c, spec);
  double fd = fixed_point_gap(qn, g, d, spec);
  for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fixed_point_gap(qn, g, c, spec);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fixed_point_gap(qn, g, d, spec);
    }
  }
  const double eta = 0.5 * (a + b);
  return {eta, fixed_point_gap(qn, g, eta, spec)};
}

// Maximum of the gap over (0, 1] via a coarse grid plus golden refinement.
std::pair<double, double> gap_maximum(QuantumNumbers qn, double g, int grid_points,
                                      const QuadratureSpec& spec) {
  double best_eta = kEtaMin;
  double best = -1e300;
  for (int i = 0; i < grid_points; ++i) {
    const double eta = kEtaMin + (1.0 - kEtaMin) * i / (grid_points - 1);
    const double h = fixed_point_gap(qn, g, eta, spec);
    if (h > best) {
      best = h;
      best_eta = eta;
    }
  }
  const double step = (1.0 - kEtaMin) / (grid_points - 1);
  const double a = std::max(kEtaMin, best_eta - step);
  const double b = std::min(1.0, best_eta + step);
  auto [eta, h] = golden_max(qn, g, a, b, spec);
  if (best > h) return {best_eta, best};
  return {eta, h};
}

std::vector<BisectedRoot> scan_roots(QuantumNumbers qn, double g, double tol, int grid_points,
                                     double tangency_tol, const QuadratureSpec& spec) {
  std::vector<BisectedRoot> roots;
  double prev_eta = kEtaMin;
  double prev_h = fixed_point_gap(qn, g, prev_eta, spec);
  for (int i = 1; i < grid_points; ++i) {
    const double eta = kEtaMin + (1.0 - kEtaMin) * i / (grid_points - 1);
    const double h = fixed_point_gap(qn, g, eta, spec);
    if (prev_h == 0.0) {
      roots.push_back({prev_eta, 0.0, 0});
    } else if ((prev_h < 0.0) != (h < 0.0) && h != 0.0) {
      roots.push_back(bisect_root(qn, g, prev_eta, eta, prev_h, tol, spec));
    }
    prev_eta = eta;
    prev_h = h;
  }
  if (prev_h == 0.0) roots.push_back({prev_eta, 0.0, 0});

  // Near-tangent pair: the two branches have (almost) met; report the fold.
  if (roots.size() == 2 && roots[1].eta - roots[0].eta < kRootMergeDistance) {
    auto [eta, h] = golden_max(qn, g, roots[0].eta, roots[1].eta, spec);
    roots = {{eta, std::abs(h), roots[0].iterations + roots[1].iterations}};
  }
  if (roots.empty()) {
    // No sign change; accept a maximum within tangency_tol of zero as the
    // double root at criticality.
    auto [eta, h] = gap_maximum(qn, g, 512, spec);
    if (h >= -tangency_tol) roots.push_back({eta, std::abs(h), 0});
  }
  return roots;
}

}  // namespace

double rhs(QuantumNumbers qn, double g, double eta, const QuadratureSpec& spec) {
  qn.check();
  if (!(eta > 0.0)) throw std::domain_error("rhs: eta must be > 0");
  if (!(g >= 0.0)) throw std::domain_error("rhs: g must be >= 0");
  const double n = qn.n;
  const double eta4 = eta * eta * eta * eta;
  const double c = g / (eta4 * eta4 * n * n * n * n);
  return quad::integrate_selfconsistency(qn, c, spec);
}

std::vector<double> find_roots(QuantumNumbers qn, double g, double tol, int grid_points,
                               double tangency_tol) {
  qn.check();
  const QuadratureSpec spec{};
  std::vector<double> out;
  for (const auto& r : scan_roots(qn, g, tol, grid_points, tangency_tol, spec)) out.push_back(r.eta);
  return out;
}

SelfConsistentSolution solve_level(QuantumNumbers qn, Coupling coupling, double tol) {
  qn.check();
  coupling.check();
  if (!(tol > 0.0)) throw std::domain_error("solve_level: tol must be > 0");
  const QuadratureSpec spec{};
  const double g = coupling.g();
  auto roots = scan_roots(qn, g, tol, 2000, 1e-4, spec);
  if (roots.empty())
    throw NoSolutionError(qn, g, "no bound state: g > g_critical for this level");
  const auto& upper = *std::max_element(
      roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.eta < b.eta; });

  SelfConsistentSolution sol;
  sol.qn = qn;
  sol.coupling = coupling;
  sol.eta = upper.eta;
  sol.epsilon = 1.0 - upper.eta;
  sol.residual = upper.residual;
  sol.iterations = upper.iterations;
  sol.branch = Branch::upper;
  sol.energy = observables::energy_level(qn, coupling.alpha_z, sol.eta);
  sol.mean_distance = observables::mean_distance(qn, coupling.alpha_z, sol.eta);
  return sol;
}

CriticalPoint critical_g(QuantumNumbers qn, double tol) {
  qn.check();
  if (!(tol > 0.0)) throw std::domain_error("critical_g: tol must be > 0");
  const QuadratureSpec spec{};
  const auto exists = [&](double g) { return gap_maximum(qn, g, 256, spec).second >= 0.0; };

  double lo = 0.0;
  double hi = 1.0;
  while (exists(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) throw NonConvergenceError("critical_g: no upper bound on g found");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (exists(mid) ? lo : hi) = mid;
  }

  CriticalPoint cp;
  cp.qn = qn;
  cp.g_critical = 0.5 * (lo + hi);
  cp.alpha_z_critical = std::pow(cp.g_critical / kOmegaCritical, 1.0 / 6.0);
  cp.eta_critical = gap_maximum(qn, cp.g_critical, 512, spec).first;
  return cp;
}

std::vector<std::pair<double, double>> rhs_curve(QuantumNumbers qn, double g,
                                                 std::span<const double> eta_grid) {
  qn.check();
  const QuadratureSpec spec{};
  std::vector<std::pair<double, double>> curve;
  curve.reserve(eta_grid.size());
  for (double eta : eta_grid) {
    if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("rhs_curve: grid values must be in (0,1]");
    curve.emplace_back(eta, rhs(qn, g, eta, spec));
  }
  return curve;
}

}  // namespace ncbound::selfconsist
