#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hermicl/harness.hpp"
#include "hermicl/surface.hpp"

namespace {

// Raw CLI values; kept as strings and pushed through apply_config_entry so
// the flag parser and the config-file parser validate identically.
struct SuiteOptions {
  std::string config_path;
  std::string surface;
  std::string nodes;
  std::string axes;
  std::string seed;
  std::string tol;
  std::string out;
  std::string format;
};

void add_common_options(CLI::App* sub, SuiteOptions& opt) {
  sub->add_option("--config", opt.config_path,
                  "flat key=value configuration file; explicit flags override it");
  sub->add_option("--surface", opt.surface, "circle | ellipse | s3 | ellipsoid4");
  sub->add_option("--nodes", opt.nodes,
                  "comma-separated node ladder (per-angle resolution on s3 grids)");
  sub->add_option("--axes", opt.axes, "ellipse axes a,b or ellipsoid axes a,b,c,d");
  sub->add_option("--seed", opt.seed, "seed for all randomized inputs");
  sub->add_option("--tol", opt.tol,
                  "override the default threshold of discretization-level checks");
  sub->add_option("--out", opt.out, "also write the report to this path");
  sub->add_option("--format", opt.format, "report format: json | csv");
}

hermicl::RunConfig build_config(const std::string& suite, const CLI::App* sub,
                                const SuiteOptions& opt) {
  hermicl::RunConfig config;
  if (sub->count("--config") > 0) config = hermicl::load_config_file(opt.config_path);
  config.suite = suite;
  if (sub->count("--surface") > 0) apply_config_entry(config, "surface", opt.surface);
  if (sub->count("--nodes") > 0) apply_config_entry(config, "nodes", opt.nodes);
  if (sub->count("--axes") > 0) apply_config_entry(config, "axes", opt.axes);
  if (sub->count("--seed") > 0) apply_config_entry(config, "seed", opt.seed);
  if (sub->count("--tol") > 0) apply_config_entry(config, "tol", opt.tol);
  if (sub->count("--out") > 0) apply_config_entry(config, "out", opt.out);
  if (sub->count("--format") > 0) apply_config_entry(config, "format", opt.format);
  return config;
}

int run_and_report(const hermicl::RunConfig& config) {
  const hermicl::Report report = hermicl::run_suite(config);
  std::cout << (config.format == "csv" ? hermicl::report_to_csv(report)
                                       : hermicl::report_to_json(report));
  hermicl::emit_report(report, config);
  std::cerr << report.suite << ": " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary-operator verification for Hermitean Clifford analysis: "
      "meshes, Cauchy/Hilbert/Szego operators, and identity suites"};
  app.require_subcommand(1);

  struct SuiteCommand {
    const char* name;
    const char* alias;
    const char* blurb;
  };
  const std::vector<SuiteCommand> commands = {
      {"verify-algebra", nullptr, "Clifford product axioms and Witt-frame identities"},
      {"verify-kernels", nullptr, "kernel homogeneity and finite-difference monogenicity"},
      {"jump-test", nullptr, "boundary limits of the Cauchy transform on a Hardy witness"},
      {"operator-identities", nullptr, "Hilbert transform involution, adjoint, skewness"},
      {"kerzman-stein", nullptr, "skewness and size of the Kerzman-Stein operator"},
      {"szego", nullptr, "Szego projection: solver, idempotency, self-adjointness"},
      {"theorem41", "ball-characterization", "equivalent vanishing conditions on the ball"},
      {"dirichlet", nullptr, "harmonic extension of boundary data on the unit ball"},
  };

  std::vector<SuiteOptions> options(commands.size());
  std::vector<CLI::App*> subs(commands.size());
  for (std::size_t k = 0; k < commands.size(); ++k) {
    subs[k] = app.add_subcommand(commands[k].name, commands[k].blurb);
    if (commands[k].alias != nullptr) subs[k]->alias(commands[k].alias);
    add_common_options(subs[k], options[k]);
  }

  // Mesh construction / inspection utility around the CSV format.
  std::string mesh_surface = "circle";
  std::string mesh_nodes = "64";
  std::string mesh_axes;
  std::string mesh_out;
  std::string mesh_in;
  CLI::App* mesh_cmd =
      app.add_subcommand("mesh", "build a surface mesh or round-trip a mesh CSV file");
  mesh_cmd->add_option("--surface", mesh_surface, "circle | ellipse | s3 | ellipsoid4");
  mesh_cmd->add_option("--nodes", mesh_nodes,
                       "node count (per-angle resolution on s3 grids)");
  mesh_cmd->add_option("--axes", mesh_axes, "ellipse axes a,b or ellipsoid axes a,b,c,d");
  mesh_cmd->add_option("--mesh-out", mesh_out, "write the mesh as CSV to this path");
  mesh_cmd->add_option("--mesh-in", mesh_in,
                       "read and validate a mesh CSV instead of building one");

  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t k = 0; k < commands.size(); ++k) {
      if (subs[k]->parsed()) {
        return run_and_report(build_config(commands[k].name, subs[k], options[k]));
      }
    }
    if (mesh_cmd->parsed()) {
      hermicl::SurfaceMesh mesh;
      if (mesh_cmd->count("--mesh-in") > 0) {
        mesh = hermicl::read_mesh_csv(mesh_in);
      } else {
        hermicl::RunConfig config;
        config.surface = mesh_surface;
        apply_config_entry(config, "nodes", mesh_nodes);
        if (mesh_cmd->count("--axes") > 0) apply_config_entry(config, "axes", mesh_axes);
        mesh = hermicl::build_surface(config, config.nodes.at(0));
      }
      double weight_sum = 0.0;
      for (double w : mesh.weights) weight_sum += w;
      std::cout << "label: " << mesh.label << "\n"
                << "n: " << mesh.n << "\n"
                << "nodes: " << mesh.size() << "\n"
                << "weight-sum: " << weight_sum << "\n"
                << "spacing: " << mesh.spacing << "\n";
      if (!mesh_out.empty()) {
        hermicl::write_mesh_csv(mesh, mesh_out);
        std::cout << "written: " << mesh_out << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
