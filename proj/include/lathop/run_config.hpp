#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace lathop::cli {

enum class Experiment {
  spectrum,
  bands,
  evolve,
  verify_symmetry,
  classify,
  gauge_fix,
  staticity,
  spinor_check,
  parity,
};

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

// One validated run description. Parsed strictly: unknown keys anywhere in
// the config document are rejected.
struct RunConfig {
  Experiment experiment = Experiment::spectrum;
  std::array<int, 3> dims{4, 4, 4};
  std::string model = "staggered";  // scalar | staggered | dirac-gauge
  std::string mass = "none";        // none | susskind | alternating
  double mu = 0.0;

  // experiment parameters (defaults documented in the README)
  double time = -1.0;               // evolve: total time; staticity: override
  int steps = 8;                    // evolve: trajectory samples
  std::string method = "exact";     // evolve: exact | chebyshev
  double lambda = 4.0;              // packet width
  std::array<double, 3> k0{0, 0, 0};
  double k0_magnitude = 0.0;        // staticity packet momentum along +x
  std::string symmetry = "Rz";      // verify-symmetry: Rx | Rz | Tx | Ty | Tz
  std::uint64_t seed = 0;
  int count = 100;                  // spinor-check: sample count
  int sectors = 4;                  // spinor-check: 4 | 8
  std::optional<std::uint64_t> scramble_seed;  // gauge-fix: pre-apply random gauge

  std::string out_path;             // empty = stdout
  std::string format = "csv";       // csv | json
  std::string config_digest;        // fingerprint of the raw config bytes
};

// FNV-1a 64-bit over the raw bytes, hex encoded; stable fingerprint for
// output provenance.
std::string fingerprint(const std::string& bytes);

// Parses and validates a config document. The experiment comes from the
// subcommand; a config "experiment" entry must agree with it if present.
RunConfig load_run_config(const std::string& raw_json, const std::string& subcommand);

// Executes the experiment and returns the formatted output text.
std::string run_experiment(const RunConfig& cfg);

// Full command-line entry point (subcommands, flags, exit-code mapping).
int cli_main(int argc, const char* const* argv);

}  // namespace lathop::cli
