// Command-line surface for the noncommuting two-body bound-state solver.
//
// Exit codes: 0 success, 1 usage/flag errors, 2 no self-consistent solution
// (coupling past critical), 3 numerical non-convergence.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ncbound/algebra.hpp"
#include "ncbound/constants.hpp"
#include "ncbound/observables.hpp"
#include "ncbound/selfconsist.hpp"

using json = nlohmann::json;
using ncbound::kOmegaCritical;
using ncbound::radial::QuantumNumbers;
namespace scf = ncbound::selfconsist;
namespace obs = ncbound::observables;
namespace alg = ncbound::algebra;

namespace {

// Round to 12 significant digits so every emitted number re-parses to the
// same value.
double sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string csv12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Range {
  double start = 0.0, stop = 0.0, step = 0.0;

  std::vector<double> grid() const {
    std::vector<double> g;
    for (int i = 0;; ++i) {
      const double v = start + i * step;
      if (v > stop + 0.5 * step) break;
      g.push_back(v);
    }
    return g;
  }
};

Range parse_range(const std::string& text) {
  Range r;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(text);
  if (!(in >> r.start >> sep1 >> r.stop >> sep2 >> r.step) || sep1 != ':' || sep2 != ':' ||
      !(r.step > 0.0) || r.stop < r.start)
    throw CLI::ValidationError("range", "expected start:stop:step with step > 0");
  return r;
}

std::vector<double> parse_masses(const std::string& text) {
  std::vector<double> masses;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) masses.push_back(std::stod(item));
  if (masses.size() < 2) throw CLI::ValidationError("masses", "need at least two comma-separated masses");
  return masses;
}

json solution_record(const scf::SelfConsistentSolution& sol, double tol) {
  return json{{"n", sol.qn.n},
              {"l", sol.qn.l},
              {"alpha_z", sig12(sol.coupling.alpha_z)},
              {"omega", sig12(sol.coupling.omega)},
              {"eta", sig12(sol.eta)},
              {"epsilon", sig12(sol.epsilon)},
              {"energy_mu_c2", sig12(sol.energy)},
              {"mean_distance_compton", sig12(sol.mean_distance)},
              {"residual", sig12(sol.residual)},
              {"iterations", sol.iterations},
              {"tol", sig12(tol)},
              {"branch", sol.branch == scf::Branch::upper ? "upper" : "lower"}};
}

int run_solve(int n, int l, double alpha_z, double omega, double tol) {
  const QuantumNumbers qn{n, l};
  const scf::Coupling coupling{alpha_z, omega};
  try {
    const auto sol = scf::solve_level(qn, coupling, tol);
    std::cout << solution_record(sol, tol).dump(2) << "\n";
    return 0;
  } catch (const scf::NoSolutionError& e) {
    const auto cp = scf::critical_g(qn);
    json diag{{"error", "no bound state: g > g_critical"},
              {"n", n},
              {"l", l},
              {"g", sig12(e.g)},
              {"g_critical", sig12(cp.g_critical)},
              {"alpha_z_critical", sig12(cp.alpha_z_critical)}};
    std::cerr << diag.dump(2) << "\n";
    return 2;
  }
}

int run_critical(int n, int l, bool as_omega_c) {
  const auto cp = scf::critical_g(QuantumNumbers{n, l});
  json rec{{"n", n},
           {"l", l},
           {"g_critical", sig12(cp.g_critical)},
           {"alpha_z_critical", sig12(cp.alpha_z_critical)},
           {"eta_critical", sig12(cp.eta_critical)},
           {"omega", sig12(kOmegaCritical)}};
  if (as_omega_c) rec["omega_c"] = sig12(cp.g_critical);
  std::cout << rec.dump(2) << "\n";
  return 0;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    std::exit(1);
  }
  return out;
}

int run_curve_rhs(int n, int l, double g, const Range& range, const std::string& out_path) {
  auto out = open_output(out_path);
  auto grid = range.grid();
  for (double& eta : grid) {  // absorb accumulated rounding at the endpoint
    if (eta > 1.0 && eta < 1.0 + 1e-9) eta = 1.0;
  }
  const auto curve = scf::rhs_curve(QuantumNumbers{n, l}, g, grid);
  out << "eta,rhs\n";
  for (const auto& [eta, value] : curve) out << csv12(eta) << "," << csv12(value) << "\n";
  return 0;
}

int run_curve_energy(const Range& range, double omega, const std::string& out_path) {
  auto out = open_output(out_path);
  out << "alpha_z,E_schrodinger,E_dirac,E_noncommutative\n";
  const QuantumNumbers ground{1, 0};
  for (double az : range.grid()) {
    out << csv12(az) << "," << csv12(obs::schrodinger_energy(ground, az)) << ",";
    if (az <= 1.0) out << csv12(obs::dirac_ground_energy(az));
    out << ",";
    try {
      const auto sol = scf::solve_level(ground, scf::Coupling{az, omega});
      out << csv12(sol.energy);
    } catch (const scf::NoSolutionError&) {
    }
    out << "\n";
  }
  return 0;
}

int run_curve_epsilon(const std::vector<QuantumNumbers>& levels, const Range& range, double omega,
                      const std::string& out_path) {
  auto out = open_output(out_path);
  out << "alpha_z";
  for (const auto& qn : levels) out << ",epsilon_" << qn.n << "_" << qn.l;
  out << "\n";
  for (double az : range.grid()) {
    out << csv12(az);
    for (const auto& qn : levels) {
      out << ",";
      try {
        out << csv12(scf::solve_level(qn, scf::Coupling{az, omega}).epsilon);
      } catch (const scf::NoSolutionError&) {
      }
    }
    out << "\n";
  }
  return 0;
}

int run_spectrum(double alpha_z, int n_max, double omega) {
  std::printf("%3s %3s %16s %16s %12s %12s\n", "n", "l", "E_nc", "E_schrodinger", "epsilon",
              "mean_r");
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const QuantumNumbers qn{n, l};
      const double es = obs::schrodinger_energy(qn, alpha_z);
      try {
        const auto sol = scf::solve_level(qn, scf::Coupling{alpha_z, omega});
        std::printf("%3d %3d %16.9g %16.9g %12.6g %12.6g\n", n, l, sol.energy, es, sol.epsilon,
                    sol.mean_distance);
      } catch (const scf::NoSolutionError&) {
        std::printf("%3d %3d %16s %16.9g %12s %12s\n", n, l, "-", es, "-", "-");
      }
    }
  }
  return 0;
}

int run_algebra_commutators(double m1, double m2, double eps) {
  const auto t = alg::commutator_table(alg::TwoBodyRep{m1, m2, eps});
  json rec{{"m1", sig12(m1)},
           {"m2", sig12(m2)},
           {"epsilon", sig12(eps)},
           {"x1_p1", sig12(t.x1_p1)},
           {"x2_p2", sig12(t.x2_p2)},
           {"x1_p2", sig12(t.x1_p2)},
           {"x2_p1", sig12(t.x2_p1)},
           {"x1_x2", sig12(t.x1_x2)},
           {"p1_p2", sig12(t.p1_p2)},
           {"units", "multiples of i*hbar for the coordinate-momentum entries"}};
  std::cout << rec.dump(2) << "\n";
  return 0;
}

alg::EpsilonMatrix uniform_eps(int n, double eps) { return alg::EpsilonMatrix::uniform(n, eps); }

int run_algebra_coeffs(const std::vector<double>& masses, double eps) {
  const auto kc = alg::kinetic_coefficients(masses, uniform_eps(masses.size(), eps));
  json a = json::array(), b = json::array();
  for (int i = 0; i < kc.A.size(); ++i) a.push_back(sig12(kc.A(i)));
  for (int i = 0; i < kc.B.rows(); ++i)
    for (int k = i + 1; k < kc.B.cols(); ++k)
      b.push_back(json{{"i", i}, {"k", k}, {"B", sig12(kc.B(i, k))}});
  std::cout << json{{"masses", masses}, {"eps_uniform", sig12(eps)}, {"A", a}, {"B", b}}.dump(2)
            << "\n";
  return 0;
}

int run_algebra_com_check(const std::vector<double>& masses, double eps) {
  const auto sep = alg::com_separation_check(masses, uniform_eps(masses.size(), eps));
  json block = json::array();
  for (int i = 0; i < sep.relative_block.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < sep.relative_block.cols(); ++k) row.push_back(sig12(sep.relative_block(i, k)));
    block.push_back(row);
  }
  json rec{{"masses", masses},
           {"eps_uniform", sig12(eps)},
           {"com_coefficient", sig12(sep.com_coefficient)},
           {"max_offblock", sig12(sep.max_offblock)},
           {"decoupled", sep.max_offblock < 1e-12},
           {"relative_block", block}};
  std::cout << rec.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-consistent bound states with noncommuting inter-particle operators"};
  app.require_subcommand(1);

  int n = 1, l = 0, n_max = 3;
  double alpha_z = 1.0, omega = kOmegaCritical, tol = 1e-8, g = 0.0;
  double m1 = 1.0, m2 = 1.0, eps = 0.0;
  std::string range_text, out_path, masses_text = "1,1", kind;
  std::vector<std::string> level_texts;

  auto* solve = app.add_subcommand("solve", "solve one (n,l) level at a coupling");
  solve->add_option("-n", n, "principal quantum number")->required();
  solve->add_option("-l", l, "orbital quantum number")->required();
  solve->add_option("--alpha-z", alpha_z, "coupling alpha*Z")->required();
  solve->add_option("--omega", omega, "kernel constant Omega (default 0.40765)");
  solve->add_option("--tol", tol, "root tolerance");

  auto* critical = app.add_subcommand("critical", "critical coupling of one level");
  critical->add_option("-n", n, "principal quantum number")->required();
  critical->add_option("-l", l, "orbital quantum number")->required();

  app.add_subcommand("omega-c", "critical coupling of the ground state");

  auto* curve = app.add_subcommand("curve", "emit CSV curves (rhs, energy, epsilon)");
  curve->add_option("kind", kind, "one of: rhs, energy, epsilon")->required();
  curve->add_option("-n", n, "principal quantum number (rhs)");
  curve->add_option("-l", l, "orbital quantum number (rhs)");
  curve->add_option("--g", g, "combined coupling Omega*(alphaZ)^6 (rhs)");
  curve->add_option("--eta", range_text, "eta grid start:stop:step (rhs)");
  curve->add_option("--alpha-z", range_text, "alpha*Z grid start:stop:step (energy, epsilon)");
  curve->add_option("--omega", omega, "kernel constant Omega");
  curve->add_option("--level", level_texts, "level as n,l (repeatable; epsilon)");
  curve->add_option("--out", out_path, "output CSV path")->required();

  auto* spectrum = app.add_subcommand("spectrum", "table of all levels up to n-max");
  spectrum->add_option("--alpha-z", alpha_z, "coupling alpha*Z")->required();
  spectrum->add_option("--n-max", n_max, "largest principal quantum number")
      ->check(CLI::Range(1, 20));
  spectrum->add_option("--omega", omega, "kernel constant Omega");

  auto* algebra = app.add_subcommand("algebra", "operator algebra checks");
  algebra->require_subcommand(1);
  auto* comm = algebra->add_subcommand("commutators", "two-body commutator table");
  comm->add_option("--m1", m1, "first mass")->required();
  comm->add_option("--m2", m2, "second mass")->required();
  comm->add_option("--eps", eps, "noncommutativity parameter")->required();
  auto* coeffs = algebra->add_subcommand("coeffs", "N-body kinetic coefficients");
  coeffs->add_option("--masses", masses_text, "comma-separated masses")->required();
  coeffs->add_option("--eps-uniform", eps, "uniform pairwise epsilon")->required();
  auto* com_check = algebra->add_subcommand("com-check", "center-of-mass separation");
  com_check->add_option("--masses", masses_text, "comma-separated masses")->required();
  com_check->add_option("--eps-uniform", eps, "uniform pairwise epsilon")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve->parsed()) return run_solve(n, l, alpha_z, omega, tol);
    if (critical->parsed()) return run_critical(n, l, false);
    if (app.got_subcommand("omega-c")) return run_critical(1, 0, true);
    if (spectrum->parsed()) return run_spectrum(alpha_z, n_max, omega);
    if (curve->parsed()) {
      if (kind == "rhs") {
        const Range r = parse_range(range_text.empty() ? "0.01:1.0:0.01" : range_text);
        return run_curve_rhs(n, l, g, r, out_path);
      }
      if (kind == "energy") {
        const Range r = parse_range(range_text.empty() ? "0.05:1.0:0.05" : range_text);
        return run_curve_energy(r, omega, out_path);
      }
      if (kind == "epsilon") {
        const Range r = parse_range(range_text.empty() ? "0.1:1.0:0.1" : range_text);
        std::vector<QuantumNumbers> levels;
        if (level_texts.empty()) level_texts = {"1,0"};
        for (const auto& text : level_texts) {
          int ln = 0, ll = 0;
          char sep = 0;
          std::istringstream in(text);
          if (!(in >> ln >> sep >> ll) || sep != ',') {
            std::cerr << "bad --level value: " << text << "\n";
            return 1;
          }
          levels.push_back({ln, ll});
        }
        return run_curve_epsilon(levels, r, omega, out_path);
      }
      std::cerr << "unknown curve kind: " << kind << "\n";
      return 1;
    }
    if (algebra->parsed()) {
      const auto masses = parse_masses(masses_text);
      if (comm->parsed()) return run_algebra_commutators(m1, m2, eps);
      if (coeffs->parsed()) return run_algebra_coeffs(masses, eps);
      if (com_check->parsed()) return run_algebra_com_check(masses, eps);
    }
  } catch (const scf::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
