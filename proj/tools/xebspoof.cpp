// Command-line front end: circuit generation, spoofing runs and the
// validation campaigns.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "xebspoof/experiments.hpp"
#include "xebspoof/pauli_chain.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

void add_circuit_options(CLI::App *cmd, xeb::ExperimentConfig &cfg) {
  static const std::map<std::string, xeb::Architecture> archs{
      {"1d", xeb::Architecture::OneD},
      {"2d", xeb::Architecture::TwoD},
      {"file", xeb::Architecture::File}};
  static const std::map<std::string, xeb::GateEnsemble> ensembles{
      {"haar", xeb::GateEnsemble::Haar},
      {"identity", xeb::GateEnsemble::Identity}};
  cmd->add_option("--arch", cfg.arch, "1d, 2d or file")
      ->transform(CLI::CheckedTransformer(archs, CLI::ignore_case));
  cmd->add_option("--n", cfg.n, "qubit count (1d)");
  cmd->add_option("--d", cfg.d, "circuit depth");
  cmd->add_option("--rows", cfg.rows, "grid rows (2d)");
  cmd->add_option("--cols", cfg.cols, "grid columns (2d)");
  cmd->add_option("--skeleton", cfg.skeleton_path, "skeleton JSON (--arch file)");
  cmd->add_option("--seed", cfg.seed, "master seed");
  cmd->add_option("--gates", cfg.gates, "haar or identity")
      ->transform(CLI::CheckedTransformer(ensembles, CLI::ignore_case));
  cmd->add_option("--max-qubits", cfg.max_qubits, "statevector cap in qubits");
  cmd->add_option("--max-chain-wires", cfg.max_chain_wires,
                  "Pauli chain cap in wires");
}

void add_run_options(CLI::App *cmd, xeb::ExperimentConfig &cfg) {
  static const std::map<std::string, xeb::OutputFormat> formats{
      {"json", xeb::OutputFormat::Json}, {"csv", xeb::OutputFormat::Csv}};
  cmd->add_option("--trials", cfg.trials, "Monte Carlo circuit count");
  cmd->add_option("--out", cfg.output_path, "output file (default stdout)");
  cmd->add_option("--format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--workers", cfg.workers, "worker threads")
      ->check(CLI::Range(1u, 1024u));
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_gen(const xeb::ExperimentConfig &cfg, bool skeleton_only,
            const std::string &distribution_path, const std::string &plan_path) {
  const xeb::Skeleton s = xeb::build_skeleton(cfg);
  if (skeleton_only) {
    write_text(cfg.output_path, xeb::dump(xeb::skeleton_to_json(s)));
    return kExitOk;
  }
  // Same stream as trial 0 of the Monte Carlo runs.
  xeb::Rng rng = xeb::make_rng(xeb::derive_seed(cfg.seed, 0), 0);
  const xeb::Circuit c = xeb::trial_circuit(cfg, s, rng);
  write_text(cfg.output_path, xeb::dump(xeb::circuit_to_json(c)));
  if (!plan_path.empty())
    write_text(plan_path,
               xeb::dump(xeb::plan_to_json(
                   xeb::plan(c, cfg.m, {cfg.max_qubits, cfg.workers}))));
  if (!distribution_path.empty()) {
    std::ofstream out(distribution_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + distribution_path);
    xeb::write_distribution_csv(
        out, xeb::probabilities(xeb::simulate(c, {cfg.max_qubits})));
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Light-cone spoofing of the linear cross-entropy benchmark"};
  app.set_version_flag("--version", std::string(xeb::kToolVersion));
  app.require_subcommand(1);

  xeb::ExperimentConfig cfg;

  auto *gen = app.add_subcommand("gen", "emit a circuit or skeleton as JSON");
  add_circuit_options(gen, cfg);
  gen->add_option("--out", cfg.output_path, "output file (default stdout)");
  gen->add_option("--m", cfg.m, "outputs for --plan");
  bool skeleton_only = false;
  std::string distribution_path, plan_path;
  gen->add_flag("--skeleton-only", skeleton_only, "omit the gates");
  gen->add_option("--distribution", distribution_path,
                  "also write the output distribution as CSV");
  gen->add_option("--plan", plan_path, "also write the spoofing plan as JSON");

  auto *spoof = app.add_subcommand("spoof", "run the spoofing sampler");
  add_circuit_options(spoof, cfg);
  add_run_options(spoof, cfg);
  spoof->add_option("--m", cfg.m, "outputs sampled from marginals");
  spoof->add_option("--samples", cfg.samples,
                    "samples per circuit scored against the statevector");

  auto *single = app.add_subcommand(
      "validate-single", "Monte Carlo check of the single-qubit expectation");
  add_circuit_options(single, cfg);
  add_run_options(single, cfg);

  auto *collision =
      app.add_subcommand("collision", "collision probability of random circuits");
  add_circuit_options(collision, cfg);
  add_run_options(collision, cfg);
  collision->add_option("--depths", cfg.depths, "depth sweep")->delimiter(',');

  auto *pauli = app.add_subcommand("pauli-exact", "exact Pauli chain values");
  add_circuit_options(pauli, cfg);
  add_run_options(pauli, cfg);
  pauli->add_option("--m", cfg.m, "greedy target count");
  pauli->add_option("--outputs", cfg.outputs, "target outputs, 1-based")
      ->delimiter(',');

  xeb::BoundInputs bin;
  bin.n = 0;
  bin.d = 0;
  std::string bounds_out;
  auto *bounds = app.add_subcommand("bounds", "closed-form bounds");
  bounds->add_option("--n", bin.n, "qubit count")->required();
  bounds->add_option("--d", bin.d, "depth")->required();
  bounds->add_option("--L", bin.L, "light-cone size");
  auto *bounds_m = bounds->add_option("--m", bin.m, "outputs (default n/L)");
  bounds->add_option("--eps", bin.epsilon, "epsilon");
  bounds->add_option("--delta", bin.delta, "delta");
  bounds->add_option("--cp", bin.cp, "collision probability");
  bounds->add_option("--var", bin.var,
                     "instance XEB variance (default: the cp bound)");
  bounds->add_option("--out", bounds_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen)
      return run_gen(cfg, skeleton_only, distribution_path, plan_path);
    if (*bounds) {
      if (!*bounds_m && bin.L > 0)
        bin.m = bin.n / bin.L;
      write_text(bounds_out, xeb::dump(xeb::bounds_report(bin)));
      return kExitOk;
    }
    if (*spoof)
      xeb::emit(xeb::run_spoof(cfg), cfg);
    else if (*single)
      xeb::emit(xeb::run_single_qubit_validation(cfg), cfg);
    else if (*collision)
      xeb::emit(xeb::run_collision_study(cfg), cfg);
    else if (*pauli)
      xeb::emit(xeb::run_pauli_exact(cfg), cfg);
    return kExitOk;
  } catch (const xeb::resource_error &e) {
    std::cerr << "xebspoof: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument &e) {
    std::cerr << "xebspoof: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range &e) {
    std::cerr << "xebspoof: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "xebspoof: " << e.what() << '\n';
    return kExitFailure;
  }
}
