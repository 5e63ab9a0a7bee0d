#include "ncbound/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "ncbound/radial.hpp"

namespace ncbound::quad {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n, seeded with the Chebyshev
// approximation to the k-th root.
GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[k] = x;
    rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& cached_rule(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

struct Integrand {
  radial::QuantumNumbers qn;
  double c;
  int power;

  double operator()(double x) const {
    if (x <= 0.0) return 0.0;
    const double suppression = c > 0.0 ? std::exp(-c / (x * x * x * x)) : 1.0;
    if (suppression == 0.0) return 0.0;
    const double f = radial::hypergeometric_polynomial(qn, x);
    return std::pow(x, 2 * qn.l + 2 + power) * std::exp(-x) * suppression * f * f;
  }
};

double gauss_panel(const Integrand& f, double a, double b, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

double adaptive_panel(const Integrand& f, double a, double b, double whole, double abs_tol,
                      int depth, int& budget, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_panel(f, a, mid, rule);
  const double right = gauss_panel(f, mid, b, rule);
  if (std::abs(left + right - whole) <= abs_tol || depth <= 0) return left + right;
  if (--budget <= 0) throw NonConvergenceError("quadrature: subdivision budget exhausted");
  return adaptive_panel(f, a, mid, left, 0.5 * abs_tol, depth - 1, budget, rule) +
         adaptive_panel(f, mid, b, right, 0.5 * abs_tol, depth - 1, budget, rule);
}

double prefactor(radial::QuantumNumbers qn) {
  const int n = qn.n, l = qn.l;
  const double f2l1 = radial::factorial(2 * l + 1);
  return radial::factorial(n + l) / (2.0 * n * radial::factorial(n - l - 1)) / (f2l1 * f2l1);
}

double integrate_weight(radial::QuantumNumbers qn, double c, int power,
                        const QuadratureSpec& spec) {
  qn.check();
  spec.check();
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::domain_error("integrate: c must be finite and >= 0");
  if (power < -1) throw std::domain_error("integrate: power must be >= -1");

  const Integrand f{qn, c, power};
  const GaussRule& rule = cached_rule(spec.node_count);

  const double x_max = 60.0 + 10.0 * (2 * qn.l + 2 + power);
  // The weight has a boundary layer of width ~c^{1/4} at the origin; split
  // there, adapt below, fixed panels above.
  const double split = std::min(std::max(std::pow(c, 0.25), 1.0), x_max);

  double tail = 0.0;
  const double panel_width = std::min(std::max(split, 1.0), 10.0);
  for (double a = split; a < x_max; a += panel_width)
    tail += gauss_panel(f, a, std::min(a + panel_width, x_max), rule);

  // Rough scale for the absolute tolerance of the adaptive region.
  double rough = 0.0;
  const int coarse = 4;
  for (int i = 0; i < coarse; ++i)
    rough += gauss_panel(f, split * i / coarse, split * (i + 1) / coarse, rule);

  const double scale = std::abs(rough) + std::abs(tail);
  if (scale == 0.0) return 0.0;

  const double abs_tol = spec.rel_tolerance * scale;
  int budget = spec.max_subdivisions;
  double head = 0.0;
  for (int i = 0; i < coarse; ++i) {
    const double a = split * i / coarse;
    const double b = split * (i + 1) / coarse;
    head += adaptive_panel(f, a, b, gauss_panel(f, a, b, rule), abs_tol / coarse, 60, budget, rule);
  }
  return prefactor(qn) * (head + tail);
}

}  // namespace

double integrate_selfconsistency(radial::QuantumNumbers qn, double c, const QuadratureSpec& spec) {
  return integrate_weight(qn, c, 0, spec);
}

double integrate_moment(radial::QuantumNumbers qn, double c, int power, const QuadratureSpec& spec) {
  return integrate_weight(qn, c, power, spec);
}

}  // namespace ncbound::quad
