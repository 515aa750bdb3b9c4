// Acceptance gate: one pass/fail line per requirement, exit code = number of
// failures. Every check runs the production API end to end with the stated
// tolerances; timing caps are enforced with a steady clock.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hermicl/clifford.hpp"
#include "hermicl/harness.hpp"
#include "hermicl/hermitean.hpp"
#include "hermicl/operators.hpp"
#include "hermicl/surface.hpp"

using namespace hermicl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const std::string& id, const std::string& name, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << " " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

std::string format_seconds(double t) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << t << "s";
  return out.str();
}

/// Runs a harness suite, requiring all checks to pass within the time cap.
bool suite_gate(const RunConfig& config, double time_cap, std::string& detail) {
  const Clock::time_point start = Clock::now();
  const Report rep = run_suite(config);
  const double elapsed = seconds_since(start);

  std::size_t passed = 0;
  double worst = 0.0;
  std::string worst_id;
  for (const auto& c : rep.checks) {
    if (c.pass) ++passed;
    const double margin = c.comparison == "<="
                              ? c.residual / std::max(c.threshold, 1e-300)
                              : c.threshold / std::max(c.residual, 1e-300);
    if (margin > worst) {
      worst = margin;
      worst_id = c.id;
    }
  }
  std::ostringstream out;
  out << rep.suite << " on " << (rep.surface.empty() ? "mesh-free" : rep.surface)
      << ": " << passed << "/" << rep.checks.size() << " checks, tightest '"
      << worst_id << "', " << format_seconds(elapsed);
  const bool in_time = time_cap <= 0.0 || elapsed < time_cap;
  if (!in_time) out << " (cap " << format_seconds(time_cap) << " exceeded)";
  detail = out.str();
  return rep.all_pass() && in_time;
}

double poly_residual(const MultivectorPolynomial& got, const MultivectorPolynomial& want) {
  const MultivectorPolynomial diff = got - want;
  return diff.coefficient_norm() / std::max(1.0, want.coefficient_norm());
}

MultivectorPolynomial scaled(MultivectorPolynomial p, cplx s) {
  p *= s;
  return p;
}

bool differential_identities(std::string& detail) {
  const Clock::time_point start = Clock::now();
  const cplx i(0.0, 1.0);
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    FieldRng rng(0xD1FFu + std::uint64_t(n));
    for (int trial = 0; trial < 6; ++trial) {
      const MultivectorPolynomial P = random_polynomial(n, 4, rng);
      const MultivectorPolynomial DP = dirac(P);
      const MultivectorPolynomial DJP = dirac_J(P);
      const MultivectorPolynomial lap = laplacian(P);
      const MultivectorPolynomial minus_lap = scaled(lap, cplx(-1.0, 0.0));

      // Factorizations of the Laplacian and anticommutation of the two
      // first-order operators.
      worst = std::max(worst, poly_residual(dirac(DP), minus_lap));
      worst = std::max(worst, poly_residual(dirac_J(DJP), minus_lap));
      worst = std::max(worst, poly_residual(scaled(dirac(DJP) + dirac_J(DP), cplx(-1.0, 0.0)),
                                            MultivectorPolynomial(n)));

      // Nilpotency of the split operators and their quarter-Laplacian
      // anticommutator.
      const MultivectorPolynomial ZP = dirac_Z(P);
      const MultivectorPolynomial ZdP = dirac_Zdag(P);
      worst = std::max(worst, poly_residual(dirac_Z(ZP), MultivectorPolynomial(n)));
      worst = std::max(worst, poly_residual(dirac_Zdag(ZdP), MultivectorPolynomial(n)));
      worst = std::max(worst, poly_residual(dirac_Z(ZdP) + dirac_Zdag(ZP),
                                            scaled(lap, cplx(0.25, 0.0))));

      // Recombinations back to the plain and rotated operators.
      worst = std::max(worst, poly_residual(scaled(ZdP - ZP, cplx(2.0, 0.0)), DP));
      worst = std::max(worst, poly_residual(scaled(ZP + ZdP, cplx(0.0, -2.0)), DJP));
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << "worst residual " << worst << " (bound 1e-10), " << format_seconds(elapsed);
  detail = out.str();
  return worst <= 1e-10 && elapsed < 10.0;
}

bool skew_contrast(std::string& detail) {
  const Clock::time_point start = Clock::now();
  const int M = 512;
  const SurfaceMesh circle = mesh_circle(M);
  const SurfaceMesh ellipse = mesh_ellipse(M, 2.0, 1.0);

  const BoundaryField Lc = random_smooth_field(circle, 3, 40961);
  const BoundaryField Le = random_smooth_field(ellipse, 3, 40961);

  const BoundaryField Ac = kerzman_stein(circle, Lc);
  const BoundaryField Ae = kerzman_stein(ellipse, Le);
  const double rc = field_norm(circle, Ac) / field_norm(circle, Lc);
  const double re = field_norm(ellipse, Ae) / field_norm(ellipse, Le);

  const double gc = ball_geometry_residual(circle);
  const double ge = ball_geometry_residual(ellipse);

  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << "circle " << rc << " (<= 5e-2), ellipse " << re << " (>= 10x circle), geometric "
      << gc << " / " << ge << ", " << format_seconds(elapsed);
  detail = out.str();
  return rc <= 5e-2 && re >= 10.0 * rc && gc <= 1e-14 && ge > 0.1;
}

bool sphere_grid_transform(std::string& detail) {
  const Clock::time_point start = Clock::now();
  const SurfaceMesh mesh = mesh_sphere_S3(16, 16, 16);

  double area = 0.0;
  for (double w : mesh.weights) area += w;
  const double area_target = 2.0 * M_PI * M_PI;
  const double area_err = std::abs(area - area_target) / area_target;

  VectorR2n dir{2.2, 0.9, -1.3, 0.7};
  double circumradius = 0.0;
  for (const auto& node : mesh.nodes) {
    circumradius = std::max(circumradius, euclidean_norm(node));
  }
  const VectorR2n pole = (3.0 * circumradius / euclidean_norm(dir)) * dir;
  const BoundaryField W = hardy_witness_field(mesh, pole);
  const BoundaryField HHW = hilbert_transform(mesh, hilbert_transform(mesh, W));

  BoundaryField diff = HHW;
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= W[j];
  const double residual = field_norm(mesh, diff) / field_norm(mesh, W);

  const double elapsed = seconds_since(start);
  std::ostringstream out;
  out << "weight-sum deviation " << area_err << " (<= 1e-3), involution residual "
      << residual << " (<= 2e-1), " << format_seconds(elapsed);
  detail = out.str();
  return area_err <= 1e-3 && residual <= 2e-1 && elapsed < 600.0;
}

bool deterministic_reports(std::string& detail) {
  RunConfig config;
  config.suite = "plemelj-jump";
  config.nodes = {128, 256};

  const std::string first = report_to_json(run_suite(config));
  const std::string second = report_to_json(run_suite(config));

  RunConfig csv_config;
  csv_config.suite = "cauchy-kernel-monogenicity";
  csv_config.format = "csv";
  const std::string csv_first = report_to_csv(run_suite(csv_config));
  const std::string csv_second = report_to_csv(run_suite(csv_config));

  const bool ok = first == second && csv_first == csv_second;
  detail = ok ? "json and csv reruns byte-identical"
              : "serialized reruns differ";
  return ok;
}

}  // namespace

int main() {
  std::string detail;

  {
    RunConfig config;
    config.suite = "clifford-product-axioms";
    const bool ok = suite_gate(config, 10.0, detail);
    report("A01", "clifford product axioms", ok, detail);
  }
  {
    const bool ok = differential_identities(detail);
    report("A02", "differential operator identities", ok, detail);
  }
  {
    RunConfig config;
    config.suite = "cauchy-kernel-monogenicity";
    const bool ok = suite_gate(config, 10.0, detail);
    report("A03", "kernel homogeneity and monogenicity", ok, detail);
  }
  {
    RunConfig config;
    config.suite = "plemelj-jump";
    config.nodes = {128, 256, 512};
    const bool ok = suite_gate(config, 30.0, detail);
    report("A04", "boundary jump relations on the circle", ok, detail);
  }
  {
    RunConfig config;
    config.suite = "hilbert-involution-adjoint";
    config.nodes = {128, 256, 512, 1024};
    const bool ok = suite_gate(config, 120.0, detail);
    report("A05", "transform involution and adjoint on the circle", ok, detail);
  }
  {
    const bool ok = skew_contrast(detail);
    report("A06", "skew defect separates circle from ellipse", ok, detail);
  }
  {
    RunConfig circle;
    circle.suite = "szego-projection";
    circle.nodes = {128, 256, 512};
    const bool ok_circle = suite_gate(circle, 0.0, detail);
    report("A07a", "szego projection on the circle", ok_circle, detail);

    RunConfig ellipse = circle;
    ellipse.surface = "ellipse";
    ellipse.axes = {2.0, 1.0};
    const bool ok_ellipse = suite_gate(ellipse, 0.0, detail);
    report("A07b", "szego projection on the ellipse", ok_ellipse, detail);
  }
  {
    RunConfig config;
    config.suite = "hardy-dirichlet";
    config.nodes = {128, 256, 512};
    const bool ok = suite_gate(config, 0.0, detail);
    report("A08", "harmonic extension of boundary data", ok, detail);
  }
  {
    const bool ok = sphere_grid_transform(detail);
    report("A09", "matrix-free transform on the unit-sphere grid", ok, detail);
  }
  {
    const bool ok = deterministic_reports(detail);
    report("A10", "byte-identical report reruns", ok, detail);
  }

  if (failures == 0) {
    std::cout << "all acceptance checks passed\n";
  } else {
    std::cout << failures << " acceptance check(s) failed\n";
  }
  return failures;
}
