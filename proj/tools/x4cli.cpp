#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "x4/workbench.hpp"

#ifndef X4_DATA_DIR
#define X4_DATA_DIR "data"
#endif

namespace {

int write_output(const x4::json& j, const std::string& json_file) {
  std::string text = x4::dump_sorted(j);
  if (json_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_file);
    if (!out) {
      std::cerr << "error: cannot write " << json_file << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice workbench for the discriminant-four K3 configuration"};
  app.require_subcommand(1);

  std::string json_file;
  std::string dot_dir;
  std::string data_dir = X4_DATA_DIR;
  app.add_option("--json", json_file, "write the JSON output to this file instead of stdout");
  app.add_option("--emit-dot", dot_dir, "write DOT exports into this directory");
  app.add_option("--data-dir", data_dir, "directory holding the fiber fixture files");

  auto* reproduce = app.add_subcommand("reproduce-paper", "run the full verification suite");
  long expect_disc = 0;
  CLI::Option* expect_opt =
      reproduce->add_option("--expect-discriminant", expect_disc, "assert the computed discriminant");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate negative classes up to a degree bound");
  long bound = 0;
  enumerate->add_option("--bound", bound, "degree bound")->required();

  auto* fibers = app.add_subcommand("fibers", "recognize fibers from a component file");
  std::string fiber_file;
  fibers->add_option("--input", fiber_file, "JSON fiber component file")->required();

  app.add_subcommand("reflection", "certify the Cremona-induced reflection");

  auto* autos = app.add_subcommand("automorphisms", "compute a configuration graph automorphism group");
  std::string graph_arg;
  autos->add_option("--graph", graph_arg, "petersen, extended, or a JSON graph file")->required();

  // allow the global output options to appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("reproduce-paper")) {
      x4::WorkbenchOptions opt;
      opt.data_dir = data_dir;
      if (expect_opt->count() > 0) opt.expect_discriminant = x4::Z(expect_disc);
      if (!dot_dir.empty()) opt.emit_dot_dir = dot_dir;
      x4::RunReport rep = x4::run_all_checks(opt);
      int rc = write_output(rep.to_json(), json_file);
      if (rc != 0) return rc;
      return rep.has_failure() ? 1 : 0;
    }
    if (app.got_subcommand("enumerate")) {
      if (bound < 1) {
        std::cerr << "error: --bound must be >= 1\n";
        return 2;
      }
      return write_output(x4::run_enumerate(x4::Z(bound)), json_file);
    }
    if (app.got_subcommand("fibers")) return write_output(x4::run_fibers(fiber_file), json_file);
    if (app.got_subcommand("reflection")) return write_output(x4::run_reflection(), json_file);
    if (app.got_subcommand("automorphisms")) return write_output(x4::run_automorphisms(graph_arg), json_file);
  } catch (const std::runtime_error& e) {
    // I/O or parse problems
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
