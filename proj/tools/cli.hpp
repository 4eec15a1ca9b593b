#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aft::cli {

enum class Command {
  kMobius,
  kFourier,
  kTaylor,
  kZtrans,
  kStep,
  kMuRegular,
  kDavenport,
  kFilterbank,
  kBench,
  kDiagnosePnt,
};

enum class OutputFormat { kJson, kCsv };

/// One CLI invocation. Zero/empty fields mean "not supplied"; run() applies
/// the documented defaults and validates the combination.
struct JobConfig {
  Command command = Command::kFourier;
  std::string signal;       // catalog:NAME or catalog:NAME(ARGS)
  std::string input_file;   // headerless CSV, one sample per line
  std::vector<int> indices;  // --n
  int k_fixed = 0;           // --K
  double adaptive_tol = 0.0;  // --adaptive-tol (with --Kmax)
  int k_max = 0;              // --Kmax
  double radius = 0.0;        // --radius, interior extraction circle
  double mu_param = 0.0;      // --mu-param, overrides the spec file value
  double theta = 0.25;        // --theta
  bool theta_set = false;
  std::string irrational;     // --irrational golden|sqrt2|ln2
  std::int64_t limit = 0;     // --limit, sieve size
  std::string output_path;    // --output, empty = stdout
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 0;     // --seed
  std::vector<int> checkpoints;        // --checkpoints, decade exponents
  std::vector<std::int64_t> queries;   // --query
};

/// Executes one job. Returns 0 on success, 2 on validation failure, 3 when an
/// adaptive extraction exhausted its budget (partials are still emitted).
int run(const JobConfig& config);

/// Full argv entry point: parse, run, map errors to exit codes.
int cli_main(int argc, char** argv);

}  // namespace aft::cli
