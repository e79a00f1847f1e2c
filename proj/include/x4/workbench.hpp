#pragma once

#include <filesystem>

#include "x4/report.hpp"

namespace x4 {

struct FiberFixture {
  int rho = 20;
  Z sections_lower_bound = 1;
  std::optional<Z> det_t;
  std::vector<std::vector<ZVec>> fibers;        // component coords in s_x4
  std::vector<std::vector<std::string>> names;  // component display names
};

FiberFixture load_fiber_fixture(const std::filesystem::path& file, const CoverLattice& cover);

struct WorkbenchOptions {
  std::optional<Z> expect_discriminant;
  std::optional<std::filesystem::path> emit_dot_dir;
  std::filesystem::path data_dir;
};

RunReport run_all_checks(const WorkbenchOptions& opt);

// Per-subcommand surfaces.
json run_enumerate(const Z& bound);
json run_fibers(const std::filesystem::path& file);
json run_reflection();
json run_automorphisms(const std::string& graph_arg);

}  // namespace x4
