#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hsf::cli {

/// Parsed command line. `dim` sizes the sequence-space constructions and
/// demo grids; `level` sizes the dyadic constructions.
struct RunConfig {
  std::string construction;
  double p = 1.5;
  long dim = 8;
  int level = 3;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int samples = 1000;
  std::string out = ".";
};

/// Builds the construction, runs the verification battery, writes
/// report.json and local_duality.csv under config.out. Returns 0 when every
/// applicable assertion passes, 1 on an assertion failure (the failing field
/// is named on stdout), 2 on an unknown construction or out-of-scope
/// parameters.
int cmd_verify(const RunConfig& config);

/// Runs one of the narrative demos (l1_counterexample, lq_demo, embedding)
/// and writes its CSV artifacts under config.out. Exit codes as cmd_verify.
int cmd_demo(const RunConfig& config);

/// Full argv-level entry point (arguments after the program name). The
/// HSFRAMES_SEED environment variable, when set, overrides --seed.
int run(const std::vector<std::string>& args);

}  // namespace hsf::cli
