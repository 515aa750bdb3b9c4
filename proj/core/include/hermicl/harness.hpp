#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hermicl/hermitean.hpp"
#include "hermicl/operators.hpp"
#include "hermicl/surface.hpp"

/**
 * Verification harness: named identity suites over the boundary operators,
 * with deterministic seeded inputs, machine-readable reports, and flat
 * key=value run configuration. Reruns with an identical configuration
 * produce byte-identical reports.
 */
namespace hermicl {

struct RunConfig {
  std::string suite;                 ///< one of suite_names()
  std::string surface = "circle";    ///< circle | ellipse | s3 | ellipsoid4
  std::vector<int> nodes;            ///< node-count ladder (per-angle resolution for s3 grids);
                                     ///< empty picks the suite default
  std::vector<double> axes;          ///< ellipse {a, b} or ellipsoid {a, b, c, d}
  std::uint64_t seed = 20260815;     ///< seed for all randomized inputs
  double tol = 0.0;                  ///< >0 overrides the default threshold of
                                     ///< discretization-level checks
  std::string out;                   ///< report path; empty writes nothing
  std::string format = "json";       ///< json | csv
};

/** Single named validation with its measured value and pass criterion. */
struct CheckResult {
  std::string id;
  std::string description;
  double residual = 0.0;
  double threshold = 0.0;
  std::string comparison = "<=";  ///< "<=" or ">=" (residual vs threshold)
  bool pass = false;
};

/** One rung of a refinement ladder for a named quantity. */
struct ConvergenceRow {
  std::string id;
  int M = 0;
  double residual = 0.0;
  double order = 0.0;   ///< rate vs previous rung; meaningful iff has_order
  bool has_order = false;
};

struct Report {
  std::string suite;
  std::string op;       ///< principal operator exercised by the suite
  std::string surface;  ///< mesh label ("" for mesh-free suites)
  int n = 0;
  int M = 0;            ///< largest ladder rung (or the single run size)
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<ConvergenceRow> convergence;
  bool calibrated = false;
  cplx c_hat;
  cplx c_analytic;
  int orientation_sign = 0;
  double calibration_deviation = 0.0;

  bool all_pass() const;
};

/** The eight suite identifiers, in canonical order. */
std::vector<std::string> suite_names();

/** Runs one suite; throws std::invalid_argument for unknown suites or
 *  unsupported surface/suite combinations. */
Report run_suite(const RunConfig& config);

/** Deterministic JSON serialization (the byte-identity target). */
std::string report_to_json(const Report& report);

/** Flat CSV serialization: one row per check and per convergence rung. */
std::string report_to_csv(const Report& report);

/** Writes the report to config.out in config.format; no-op when out is empty. */
void emit_report(const Report& report, const RunConfig& config);

/** Applies one key=value setting; throws std::invalid_argument on unknown
 *  keys or malformed values. Keys: suite, surface, nodes, axes, seed, tol,
 *  out, format. nodes and axes are comma-separated. */
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

/** Parses a flat key=value file ('#' comments and blank lines allowed). */
RunConfig load_config_file(const std::string& path);

/** Uniform deterministic source for all randomized suite inputs. */
class FieldRng {
 public:
  explicit FieldRng(std::uint64_t seed) : engine_(seed) {}

  /** Uniform in [-1, 1), 53-bit mantissa, identical across platforms. */
  double uniform() {
    const double u = double(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

  cplx complex_uniform() {
    const double re = uniform();
    return cplx(re, uniform());
  }

  /** Uniform integer in [0, bound). */
  std::uint64_t index(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

/** Random multivector with complex_uniform coefficients. */
Multivector random_multivector(int dim, FieldRng& rng);

/** Dense random polynomial of total degree <= max_degree in 2n variables. */
MultivectorPolynomial random_polynomial(int n, int max_degree, FieldRng& rng);

/**
 * Smooth pair-valued boundary field: both channels sampled from independent
 * random polynomials, so refining the mesh samples one fixed smooth field.
 */
BoundaryField random_smooth_field(const SurfaceMesh& mesh, int max_degree,
                                  std::uint64_t seed);

/** Mesh for a config at the given rung size; validates surface and axes. */
SurfaceMesh build_surface(const RunConfig& config, int rung_nodes);

}  // namespace hermicl
