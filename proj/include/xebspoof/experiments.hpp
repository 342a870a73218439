#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xebspoof/bounds.hpp"
#include "xebspoof/serialization.hpp"

namespace xeb {

inline constexpr const char *kToolName = "xebspoof";
inline constexpr const char *kToolVersion = "0.1.0";

enum class Architecture { OneD, TwoD, File };
enum class OutputFormat { Csv, Json };
enum class GateEnsemble { Haar, Identity };

struct ExperimentConfig {
  Architecture arch = Architecture::OneD;
  int n = 8;
  int d = 2;
  int rows = 0;
  int cols = 0;
  std::string skeleton_path; // Architecture::File
  int m = 1;
  int trials = 100;
  std::int64_t samples = 0; // per-circuit sample count T
  std::uint64_t seed = 1;
  std::string output_path; // empty: stdout
  OutputFormat format = OutputFormat::Json;
  GateEnsemble gates = GateEnsemble::Haar;
  unsigned workers = 1;
  int max_qubits = 24;
  int max_chain_wires = 10;
  std::vector<int> depths;  // collision sweep; empty uses the default depth
  std::vector<int> outputs; // pauli-exact targets, 1-based; empty: greedy m
};

Json config_to_json(const ExperimentConfig &cfg);

/// Skeleton named by the config; `depth` overrides cfg.d when >= 0.
Skeleton build_skeleton(const ExperimentConfig &cfg, int depth = -1);

/// Circuit on `s` with gates from the configured ensemble.
Circuit trial_circuit(const ExperimentConfig &cfg, const Skeleton &s, Rng &rng);

/// Tabular result. Rows are ordered objects whose keys are `columns`.
struct ExperimentResult {
  std::string experiment;
  Json config;
  std::vector<std::string> columns;
  std::vector<Json> rows;
  Json aggregate = Json::object();
};

/// Renders with tool name, version, seed and config embedded. CSV carries
/// them as leading '#' lines.
std::string render(const ExperimentResult &r, OutputFormat format);

/// Writes to cfg.output_path, or stdout when it is empty.
void emit(const ExperimentResult &r, const ExperimentConfig &cfg);

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t count = 0;
};

/// Sample mean and standard error, accumulated in index order.
MeanStderr mean_stderr(const std::vector<double> &values);

/// Per trial: Haar circuit, spoof plan, closed-form fidelity, and (when
/// samples > 0) the empirical XEB of `samples` draws scored against the
/// statevector. Aggregates include theorem_bound and the exact expectation.
ExperimentResult run_spoof(const ExperimentConfig &cfg);

/// Monte Carlo E[q_{i,0}^2 + q_{i,1}^2] per output against the exact chain
/// value and (1 + 15^-d)/2.
ExperimentResult run_single_qubit_validation(const ExperimentConfig &cfg);

/// E[2^n CP(q_C)] with standard error, per depth of the sweep.
ExperimentResult run_collision_study(const ExperimentConfig &cfg);

/// Per-layer chain mass and the exact value for each target output.
ExperimentResult run_pauli_exact(const ExperimentConfig &cfg);

/// All closed-form bounds for the given parameters.
Json bounds_report(const BoundInputs &in);

/// ceil(log n / log(5/4)).
int anticoncentration_depth(int n);

} // namespace xeb
