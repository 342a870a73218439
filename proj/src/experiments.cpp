#include "xebspoof/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xebspoof/cone.hpp"
#include "xebspoof/pauli_chain.hpp"

namespace xeb {

namespace {

const char *arch_name(Architecture a) {
  switch (a) {
  case Architecture::OneD:
    return "1d";
  case Architecture::TwoD:
    return "2d";
  case Architecture::File:
    return "file";
  }
  return "?";
}

std::string csv_cell(const Json &v) {
  if (v.is_null())
    return "";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

Json stats_json(const MeanStderr &s) {
  Json j;
  j["mean"] = s.mean;
  j["stderr"] = s.stderr_;
  j["count"] = s.count;
  return j;
}

// Distinct streams for circuit gates and for sampling within one trial.
constexpr std::uint64_t kCircuitStream = 0;
constexpr std::uint64_t kSampleStream = 1;

Rng trial_rng(std::uint64_t seed, std::uint64_t block, std::uint64_t k,
              std::uint64_t stream) {
  return make_rng(derive_seed(seed, block), 2 * k + stream);
}

} // namespace

Json config_to_json(const ExperimentConfig &cfg) {
  Json j;
  j["arch"] = arch_name(cfg.arch);
  j["n"] = cfg.arch == Architecture::TwoD ? cfg.rows * cfg.cols : cfg.n;
  j["d"] = cfg.d;
  j["rows"] = cfg.rows;
  j["cols"] = cfg.cols;
  j["skeleton"] = cfg.skeleton_path;
  j["m"] = cfg.m;
  j["trials"] = cfg.trials;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["gates"] = cfg.gates == GateEnsemble::Haar ? "haar" : "identity";
  j["max_qubits"] = cfg.max_qubits;
  j["max_chain_wires"] = cfg.max_chain_wires;
  j["depths"] = cfg.depths;
  j["outputs"] = cfg.outputs;
  return j;
}

Skeleton build_skeleton(const ExperimentConfig &cfg, int depth) {
  const int d = depth >= 0 ? depth : cfg.d;
  switch (cfg.arch) {
  case Architecture::OneD:
    return build_1d_brickwork(cfg.n, d);
  case Architecture::TwoD:
    return build_2d_grid(cfg.rows, cfg.cols, d);
  case Architecture::File:
    return skeleton_from_json(read_json_file(cfg.skeleton_path));
  }
  throw std::invalid_argument("unknown architecture");
}

Circuit trial_circuit(const ExperimentConfig &cfg, const Skeleton &s, Rng &rng) {
  if (cfg.gates == GateEnsemble::Identity)
    return uniform_circuit(s, identity_gate());
  return haar_circuit(s, rng);
}

MeanStderr mean_stderr(const std::vector<double> &values) {
  MeanStderr out;
  out.count = values.size();
  if (values.empty())
    return out;
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double v : values) {
    ++k;
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  out.mean = mean;
  if (k > 1)
    out.stderr_ = std::sqrt(m2 / static_cast<double>(k - 1) /
                            static_cast<double>(k));
  return out;
}

std::string render(const ExperimentResult &r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["experiment"] = r.experiment;
    j["seed"] = r.config.contains("seed") ? r.config["seed"] : Json();
    j["config"] = r.config;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["aggregate"] = r.aggregate;
    return dump(j);
  }
  std::ostringstream os;
  os << "# tool: " << kToolName << ' ' << kToolVersion << '\n';
  os << "# experiment: " << r.experiment << '\n';
  os << "# config: " << r.config.dump() << '\n';
  os << "# aggregate: " << r.aggregate.dump() << '\n';
  for (std::size_t c = 0; c < r.columns.size(); ++c)
    os << (c ? "," : "") << r.columns[c];
  os << '\n';
  for (const auto &row : r.rows) {
    for (std::size_t c = 0; c < r.columns.size(); ++c)
      os << (c ? "," : "") << csv_cell(row.at(r.columns[c]));
    os << '\n';
  }
  return os.str();
}

void emit(const ExperimentResult &r, const ExperimentConfig &cfg) {
  const std::string text = render(r, cfg.format);
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + cfg.output_path);
  out << text;
  if (!out)
    throw std::runtime_error("failed writing " + cfg.output_path);
}

ExperimentResult run_spoof(const ExperimentConfig &cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  if (cfg.m < 1)
    throw std::invalid_argument("m must be >= 1");
  if (cfg.samples < 0)
    throw std::invalid_argument("samples must be >= 0");
  const Skeleton s = build_skeleton(cfg);
  const int n = s.n();
  if (cfg.samples > 0) {
    // Scoring samples needs q_C itself, so empirical XEB is limited to
    // statevector-sized circuits.
    require_statevector_fits(n, cfg.max_qubits);
    if (n > 64)
      throw std::invalid_argument("sampling needs n <= 64");
  }

  struct Trial {
    int m = 0;
    double fidelity = 0.0;
    double empirical = 0.0;
  };
  std::vector<Trial> trials(cfg.trials);
  const PlanOptions plan_opts{cfg.max_qubits, 1};
  parallel_for(trials.size(), cfg.workers, [&](std::size_t k) {
    Rng gate_rng = trial_rng(cfg.seed, 0, k, kCircuitStream);
    const Circuit c = trial_circuit(cfg, s, gate_rng);
    const SpoofPlan p = plan(c, cfg.m, plan_opts);
    Trial t;
    t.m = p.m();
    t.fidelity = closed_form_fidelity(p);
    if (cfg.samples > 0) {
      const VectorXd q = probabilities(simulate(c, {cfg.max_qubits}));
      Rng sample_rng = trial_rng(cfg.seed, 0, k, kSampleStream);
      double total = 0.0;
      for (std::int64_t i = 0; i < cfg.samples; ++i)
        total += xeb_instance(q, sample(p, sample_rng));
      t.empirical = total / static_cast<double>(cfg.samples);
    }
    trials[k] = t;
  });

  ExperimentResult r;
  r.experiment = "spoof";
  r.config = config_to_json(cfg);
  r.columns = {"trial", "m", "closed_form_fidelity", "empirical_xeb"};
  std::vector<double> fid, emp;
  for (std::size_t k = 0; k < trials.size(); ++k) {
    Json row;
    row["trial"] = k;
    row["m"] = trials[k].m;
    row["closed_form_fidelity"] = trials[k].fidelity;
    row["empirical_xeb"] =
        cfg.samples > 0 ? Json(trials[k].empirical) : Json();
    r.rows.push_back(std::move(row));
    fid.push_back(trials[k].fidelity);
    emp.push_back(trials[k].empirical);
  }

  const auto selected = greedy_disjoint(s, cfg.m);
  const int m = static_cast<int>(selected.size());
  auto &agg = r.aggregate;
  agg["n"] = n;
  agg["d"] = s.depth();
  agg["light_cone_size"] = light_cone_size(s);
  agg["m_requested"] = cfg.m;
  agg["m"] = m;
  agg["shortfall"] = m < cfg.m;
  Json sel = Json::array();
  for (int i : selected)
    sel.push_back(i + 1);
  agg["selected"] = sel;
  agg["closed_form_fidelity"] = stats_json(mean_stderr(fid));
  agg["empirical_xeb"] =
      cfg.samples > 0 ? stats_json(mean_stderr(emp)) : Json();
  agg["theorem_bound"] = theorem_bound(m, s.depth());
  try {
    agg["expected_fidelity_exact"] =
        cfg.gates == GateEnsemble::Haar
            ? Json(expected_fidelity_exact(s, selected,
                                           {cfg.max_chain_wires}))
            : Json();
  } catch (const resource_error &) {
    agg["expected_fidelity_exact"] = Json();
  }
  return r;
}

ExperimentResult run_single_qubit_validation(const ExperimentConfig &cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  const Skeleton s = build_skeleton(cfg);
  const int n = s.n();
  const bool full_state = n <= cfg.max_qubits;

  // sos[k][i] = q_{i,0}^2 + q_{i,1}^2 for trial k.
  std::vector<std::vector<double>> sos(cfg.trials, std::vector<double>(n));
  parallel_for(sos.size(), cfg.workers, [&](std::size_t k) {
    Rng rng = trial_rng(cfg.seed, 0, k, kCircuitStream);
    const Circuit c = trial_circuit(cfg, s, rng);
    if (full_state) {
      const VectorXd q = probabilities(simulate(c, {cfg.max_qubits}));
      for (int i = 0; i < n; ++i) {
        const auto qi = marginal(q, i);
        sos[k][i] = qi[0] * qi[0] + qi[1] * qi[1];
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const auto qi = cone_marginal(c, i, cfg.max_qubits);
        sos[k][i] = qi[0] * qi[0] + qi[1] * qi[1];
      }
    }
  });

  ExperimentResult r;
  r.experiment = "validate-single";
  r.config = config_to_json(cfg);
  r.columns = {"output", "estimate", "stderr", "exact", "bound",
               "exact_minus_bound", "z_score"};
  const double bound = 0.5 * (1.0 + std::pow(15.0, -s.depth()));
  for (int i = 0; i < n; ++i) {
    std::vector<double> column(cfg.trials);
    for (int k = 0; k < cfg.trials; ++k)
      column[k] = sos[k][i];
    const MeanStderr est = mean_stderr(column);
    Json row;
    row["output"] = i + 1;
    row["estimate"] = est.mean;
    row["stderr"] = est.stderr_;
    try {
      const double exact =
          single_qubit_expected_sos(s, i, {cfg.max_chain_wires});
      row["exact"] = exact;
      row["bound"] = bound;
      row["exact_minus_bound"] = exact - bound;
      row["z_score"] =
          est.stderr_ > 0 ? Json((est.mean - exact) / est.stderr_) : Json();
    } catch (const resource_error &) {
      row["exact"] = Json();
      row["bound"] = bound;
      row["exact_minus_bound"] = Json();
      row["z_score"] = Json();
    }
    r.rows.push_back(std::move(row));
  }
  r.aggregate["n"] = n;
  r.aggregate["d"] = s.depth();
  r.aggregate["trials"] = cfg.trials;
  r.aggregate["method"] = full_state ? "statevector" : "light_cone";
  return r;
}

int anticoncentration_depth(int n) {
  if (n < 2)
    return 0;
  return static_cast<int>(std::ceil(std::log(n) / std::log(1.25)));
}

ExperimentResult run_collision_study(const ExperimentConfig &cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  std::vector<int> depths = cfg.depths;
  const Skeleton probe = build_skeleton(cfg);
  const int n = probe.n();
  require_statevector_fits(n, cfg.max_qubits);
  if (depths.empty())
    depths.push_back(cfg.arch == Architecture::File ? probe.depth()
                                                    : anticoncentration_depth(n));

  ExperimentResult r;
  r.experiment = "collision";
  r.config = config_to_json(cfg);
  r.columns = {"d", "trials", "mean_scaled_cp", "stderr", "porter_thomas"};
  const double dim = std::ldexp(1.0, n);
  const double porter_thomas = 2.0 * dim / (dim + 1.0);
  for (int depth : depths) {
    if (depth < 0)
      throw std::invalid_argument("depths must be non-negative");
    const Skeleton s = cfg.arch == Architecture::File ? probe
                                                      : build_skeleton(cfg, depth);
    std::vector<double> scaled(cfg.trials);
    parallel_for(scaled.size(), cfg.workers, [&](std::size_t k) {
      Rng rng = trial_rng(cfg.seed, 1000 + static_cast<std::uint64_t>(depth), k,
                          kCircuitStream);
      const Circuit c = trial_circuit(cfg, s, rng);
      scaled[k] = dim * collision_probability(simulate(c, {cfg.max_qubits}));
    });
    const MeanStderr est = mean_stderr(scaled);
    Json row;
    row["d"] = s.depth();
    row["trials"] = cfg.trials;
    row["mean_scaled_cp"] = est.mean;
    row["stderr"] = est.stderr_;
    row["porter_thomas"] = porter_thomas;
    r.rows.push_back(std::move(row));
  }
  r.aggregate["n"] = n;
  r.aggregate["anticoncentration_depth"] = anticoncentration_depth(n);
  return r;
}

ExperimentResult run_pauli_exact(const ExperimentConfig &cfg) {
  const Skeleton s = build_skeleton(cfg);
  std::vector<int> targets;
  for (int o : cfg.outputs) {
    if (o < 1 || o > s.n())
      throw std::invalid_argument("output " + std::to_string(o) +
                                  " outside 1.." + std::to_string(s.n()));
    targets.push_back(o - 1);
  }
  if (targets.empty())
    targets = greedy_disjoint(s, std::max(1, cfg.m));

  ExperimentResult r;
  r.experiment = "pauli-exact";
  r.config = config_to_json(cfg);
  r.columns = {"output", "layer", "mass"};
  Json per_output = Json::array();
  const ChainOptions opts{cfg.max_chain_wires};
  for (int i : targets) {
    const ChainTrace trace = expected_trace_squared_traced(s, i, opts);
    for (std::size_t t = 0; t < trace.layer_mass.size(); ++t) {
      Json row;
      row["output"] = i + 1;
      row["layer"] = t;
      row["mass"] = trace.layer_mass[t];
      r.rows.push_back(std::move(row));
    }
    const Rational lb = lower_bound_assignment_weight(s, i);
    Json o;
    o["output"] = i + 1;
    o["cone_width"] = trace.width;
    o["expected_trace_squared"] = trace.value;
    o["expected_sos"] = 0.5 * (1.0 + trace.value);
    o["lower_bound_weight"] = lb.str();
    o["lower_bound_value"] = static_cast<double>(lb);
    per_output.push_back(std::move(o));
  }
  r.aggregate["d"] = s.depth();
  r.aggregate["outputs"] = std::move(per_output);
  if (cones_disjoint(s, targets)) {
    r.aggregate["expected_fidelity_exact"] =
        expected_fidelity_exact(s, targets, opts);
    r.aggregate["theorem_bound"] =
        theorem_bound(static_cast<int>(targets.size()), s.depth());
  }
  return r;
}

Json bounds_report(const BoundInputs &in) {
  in.validate();
  const double var_bound = variance_cp_bound(in.m, in.n, in.cp);
  const double var = in.var > 0.0 ? in.var : var_bound;
  Json j;
  Json inputs;
  inputs["n"] = in.n;
  inputs["d"] = in.d;
  inputs["L"] = in.L;
  inputs["m"] = in.m;
  inputs["epsilon"] = in.epsilon;
  inputs["delta"] = in.delta;
  inputs["cp"] = in.cp;
  inputs["var"] = in.var;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["inputs"] = inputs;
  j["theorem_bound"] = theorem_bound(in.m, in.d);
  j["success_prob_bound"] = success_prob_bound(in.m, in.d, in.epsilon);
  j["variance_cp_bound"] = var_bound;
  j["log2_variance_cp_bound"] =
      in.cp > 0.0 ? Json(log2_variance_cp_bound(in.m, in.n, in.cp)) : Json();
  j["chebyshev_samples"] = chebyshev_samples(var, in.epsilon, in.delta);
  j["chebyshev_variance_used"] = var;
  j["type1_path_bound"] = type1_path_bound(in.n, in.d);
  return j;
}

} // namespace xeb
