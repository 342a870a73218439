// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "xebspoof/cone.hpp"
#include "xebspoof/experiments.hpp"
#include "xebspoof/pauli_chain.hpp"

using namespace xeb;
using xeb::testing::Moments;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome &)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational fifteen_pow_minus(int d) {
  Rational r(1);
  for (int k = 0; k < d; ++k)
    r /= 15;
  return r;
}

void exact_single_gate(Outcome &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Skeleton s = build_1d_brickwork(2, 1);
  const double exact = expected_trace_squared(s, 0);
  out.require(std::abs(exact - 0.2) <= 1e-12, "exact value 1/5 to 1e-12");
  Rng rng(derive_seed(1, 0));
  Moments z2;
  for (int k = 0; k < 100000; ++k) {
    const double z = expectation_z(simulate(haar_circuit(s, rng)), 0);
    z2.add(z * z);
  }
  out.require(std::abs(z2.mean() - 0.2) <= 0.01, "Monte Carlo within 0.01");
  const double secs = seconds_since(t0);
  out.require(secs < 30, "runtime < 30 s");
  out.detail << "exact=" << exact << " mc=" << z2.mean() << " +- " << z2.stderr_()
             << " time=" << secs << "s";
}

void single_qubit_expectation(Outcome &out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int d = 1; d <= 3; ++d) {
    ExperimentConfig cfg;
    cfg.n = 8;
    cfg.d = d;
    cfg.trials = 100000;
    cfg.seed = 2;
    const ExperimentResult r = run_single_qubit_validation(cfg);
    double worst_z = 0.0, min_gap = 1.0;
    for (const auto &row : r.rows) {
      const double z = row["z_score"].get<double>();
      const double gap = row["exact_minus_bound"].get<double>();
      worst_z = std::max(worst_z, std::abs(z));
      min_gap = std::min(min_gap, gap);
      out.require(std::abs(z) <= 4, "d=" + std::to_string(d) + " within 4 sigma");
      out.require(gap >= 0, "d=" + std::to_string(d) + " exact >= bound");
    }
    out.detail << "d=" << d << ": max|z|=" << worst_z << " min gap=" << min_gap << "; ";
  }
  const double secs = seconds_since(t0);
  out.require(secs < 600, "runtime < 10 min");
  out.detail << "time=" << secs << "s";
}

void multi_qubit_fidelity(Outcome &out) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg;
  cfg.n = 12;
  cfg.d = 2;
  cfg.m = 3;
  cfg.trials = 5000;
  cfg.seed = 3;
  const ExperimentResult r = run_spoof(cfg);
  const Json &agg = r.aggregate;
  const double mean = agg["closed_form_fidelity"]["mean"].get<double>();
  const double se = agg["closed_form_fidelity"]["stderr"].get<double>();
  const double bound = agg["theorem_bound"].get<double>();
  const double exact = agg["expected_fidelity_exact"].get<double>();
  out.require(agg["m"] == 3, "three disjoint outputs");
  out.require(mean >= bound, "mean >= theorem bound");
  out.require(std::abs(mean - exact) <= 3 * se, "within 3 stderr of exact");
  const double secs = seconds_since(t0);
  out.require(secs < 900, "runtime < 15 min");
  out.detail << "mean=" << mean << " +- " << se << " exact=" << exact
             << " bound=" << bound << " time=" << secs << "s";
}

void identity_exactness(Outcome &out) {
  const std::vector<Skeleton> skeletons{build_1d_brickwork(12, 2), build_1d_brickwork(10, 1),
                                        build_2d_grid(4, 4, 2), build_2d_grid(2, 3, 0)};
  int plans = 0;
  for (const Skeleton &s : skeletons) {
    const Circuit c = uniform_circuit(s, identity_gate());
    const int achievable = static_cast<int>(greedy_disjoint(s, s.n()).size());
    for (int m = 1; m <= achievable; ++m) {
      const SpoofPlan p = plan(c, m);
      ++plans;
      out.require(p.m() == m, "achieved m");
      out.require(closed_form_fidelity(p) == std::ldexp(1.0, m) - 1, "fidelity 2^m - 1");
      Rng rng(derive_seed(4, plans));
      for (int k = 0; k < 5000; ++k) {
        const Bits x = sample(p, rng);
        for (int i : p.selected)
          if (bit_of(x, i)) {
            out.require(false, "selected bit sampled as 1");
            break;
          }
      }
    }
  }
  out.detail << plans << " plans checked";
}

void oracle_equivalence(Outcome &out) {
  Rng rng(derive_seed(5, 0));
  const std::vector<std::pair<int, int>> grids{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {4, 2}};
  double worst = 0.0;
  int factorized = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(rng() % 4);
    Skeleton s = build_1d_brickwork(2, 0);
    if (trial % 2 == 0) {
      s = build_1d_brickwork(2 * (1 + static_cast<int>(rng() % 5)), d);
    } else {
      const auto [rows, cols] = grids[rng() % grids.size()];
      s = build_2d_grid(rows, cols, d);
    }
    const Circuit c = haar_circuit(s, rng);
    const VectorXd q = xeb::testing::naive_probabilities(c);
    const StateVector psi = simulate(c);
    for (int i = 0; i < s.n(); ++i) {
      const auto ref = xeb::testing::naive_marginal(q, i);
      const auto cm = cone_marginal(c, i);
      worst = std::max({worst, std::abs(cm[0] - ref[0]), std::abs(cm[1] - ref[1])});
      const double z = expectation_z(psi, i);
      const double a1 = std::abs(ref[0] - ref[1] - z) +
                        std::abs(ref[0] * ref[0] + ref[1] * ref[1] - 0.5 * (1 + z * z));
      out.require(a1 <= 1e-9, "single-output marginal identity");
    }
    const auto sel = greedy_disjoint(s, s.n());
    if (sel.size() >= 2) {
      ++factorized;
      for (Bits v = 0; v < (Bits{1} << sel.size()); ++v) {
        double product = 1.0;
        for (std::size_t j = 0; j < sel.size(); ++j)
          product *= xeb::testing::naive_marginal(q, sel[j])[bit_of(v, static_cast<int>(j))];
        out.require(std::abs(joint_marginal(q, sel, v) - product) <= 1e-9,
                    "disjoint-cone factorization");
      }
    }
  }
  out.require(worst <= 1e-9, "light-cone marginals to 1e-9");
  out.detail << "max marginal error=" << worst << " factorization instances=" << factorized;
}

void haar_moments(Outcome &out) {
  Rng rng(derive_seed(6, 0));
  const int draws = 100000;
  std::array<Moments, 16> second, fourth;
  std::vector<std::array<int, 8>> tuples{{0, 0, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 1, 1, 2, 2, 3, 3},
                                         {0, 1, 1, 0, 2, 2, 3, 3},
                                         {1, 2, 2, 1, 0, 3, 3, 0}};
  Rng pick(derive_seed(6, 1));
  while (tuples.size() < 12) {
    std::array<int, 8> t;
    for (int &v : t)
      v = static_cast<int>(pick() % 4);
    tuples.push_back(t);
  }
  std::vector<Moments> re(tuples.size()), im(tuples.size());
  for (int k = 0; k < draws; ++k) {
    const Unitary2Q u = haar_unitary(rng);
    for (int e = 0; e < 16; ++e) {
      const double a = std::norm(u(e / 4, e % 4));
      second[e].add(a);
      fourth[e].add(a * a);
    }
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      const auto &i = tuples[t];
      const Complex v = u(i[0], i[4]) * std::conj(u(i[1], i[5])) * u(i[2], i[6]) *
                        std::conj(u(i[3], i[7]));
      re[t].add(v.real());
      im[t].add(v.imag());
    }
  }
  double worst = 0.0;
  for (int e = 0; e < 16; ++e) {
    const double z2 = (second[e].mean() - 0.25) / second[e].stderr_();
    const double z4 = (fourth[e].mean() - 0.1) / fourth[e].stderr_();
    worst = std::max({worst, std::abs(z2), std::abs(z4)});
  }
  out.require(worst <= 4, "|U|^2 and |U|^4 within 4 sigma");
  double worst_tuple = 0.0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto &i = tuples[t];
    const double exact = static_cast<double>(
        fourth_moment_reference(i[0], i[1], i[2], i[3], i[4], i[5], i[6], i[7]));
    const double zr = (re[t].mean() - exact) / std::max(re[t].stderr_(), 1e-300);
    const double zi = im[t].mean() / std::max(im[t].stderr_(), 1e-300);
    worst_tuple = std::max({worst_tuple, std::abs(zr), std::abs(zi)});
  }
  out.require(worst_tuple <= 4, "fourth-moment tuples within 4 sigma");
  out.detail << "max |z| entries=" << worst << " tuples(" << tuples.size()
             << ")=" << worst_tuple;
}

void assignment_lower_bound(Outcome &out) {
  int exact_checks = 0, dominance_checks = 0;
  for (int d = 0; d <= 10; ++d) {
    for (const Skeleton &s : {build_1d_brickwork(8, d), build_1d_brickwork(12, d),
                              build_2d_grid(3, 4, d), build_2d_grid(4, 4, d)}) {
      for (int i = 0; i < s.n(); ++i) {
        const Rational w = lower_bound_assignment_weight(s, i);
        ++exact_checks;
        out.require(w == fifteen_pow_minus(d), "weight equals 15^-d");
        if (static_cast<int>(light_cone(s, i).inputs.size()) > 10)
          continue;
        ++dominance_checks;
        out.require(static_cast<double>(w) <= expected_trace_squared(s, i) + 1e-15,
                    "weight <= exact value");
      }
    }
  }
  out.detail << exact_checks << " exact weights, " << dominance_checks
             << " dominance checks (cones up to 10 qubits)";
}

void variance_bound(Outcome &out) {
  Rng rng(derive_seed(8, 0));
  int violations = 0;
  double tightest = 0.0;
  for (int k = 0; k < 100; ++k) {
    // Depth 2 on eight qubits fits only two disjoint cones.
    const int m = 1 + k % 3;
    const int d = m == 3 ? 1 : 1 + (k / 3) % 2;
    const Circuit c = haar_circuit(build_1d_brickwork(8, d), rng);
    const SpoofPlan p = plan(c, m);
    out.require(p.m() == m, "requested m achieved");
    const VectorXd q = probabilities(simulate(c));
    const VectorXd a = spoof_distribution(p);
    double mean = 0.0, second = 0.0;
    for (Eigen::Index x = 0; x < q.size(); ++x) {
      const double f = xeb_instance(q, static_cast<Bits>(x));
      mean += a[x] * f;
      second += a[x] * f * f;
    }
    const double var = second - mean * mean;
    const double bound = variance_cp_bound(p.m(), 8, collision_probability(q));
    tightest = std::max(tightest, var / bound);
    if (var > bound)
      ++violations;
  }
  out.require(violations == 0, "zero violations");
  out.detail << "violations=" << violations << " max var/bound=" << tightest;
}

void collision_behavior(Outcome &out) {
  ExperimentConfig deep;
  deep.n = 8;
  deep.depths = {30};
  deep.trials = 4000;
  deep.seed = 9;
  const Json row = run_collision_study(deep).rows.at(0);
  const double mean = row["mean_scaled_cp"].get<double>();
  const double se = row["stderr"].get<double>();
  const double target = 2.0 * 256 / 257;
  out.require(std::abs(mean - target) <= 3 * se, "deep limit within 3 stderr");

  ExperimentConfig shallow;
  shallow.n = 12;
  shallow.trials = 1000;
  shallow.seed = 9;
  const Json row12 = run_collision_study(shallow).rows.at(0);
  out.require(row12["d"] == 12, "anticoncentration depth 12");
  const double mean12 = row12["mean_scaled_cp"].get<double>();
  out.require(mean12 <= 10, "n=12 value <= 10");
  out.detail << "n=8 d=30: " << mean << " +- " << se << " (target " << target
             << "); n=12 d=12: " << mean12 << " +- " << row12["stderr"].get<double>();
}

void chebyshev_contract(Outcome &out) {
  Rng rng(derive_seed(10, 0));
  const Circuit c = haar_circuit(build_1d_brickwork(10, 2), rng);
  const SpoofPlan p = plan(c, 2);
  const VectorXd q = probabilities(simulate(c));
  const double fidelity = closed_form_fidelity(p);
  // Pilot run measures the variance of the instance XEB under the sampler.
  Moments pilot;
  for (int k = 0; k < 100000; ++k)
    pilot.add(xeb_instance(q, sample(p, rng)));
  const double var = pilot.stderr_() * pilot.stderr_() * static_cast<double>(pilot.count);
  const double eps = 0.1, delta = 0.1;
  const std::int64_t T = chebyshev_samples(var, eps, delta);
  const int reps = 200;
  int shortfalls = 0;
  for (int r = 0; r < reps; ++r) {
    double total = 0.0;
    for (std::int64_t k = 0; k < T; ++k)
      total += xeb_instance(q, sample(p, rng));
    if (total / static_cast<double>(T) < fidelity - eps)
      ++shortfalls;
  }
  const double freq = static_cast<double>(shortfalls) / reps;
  const double sigma = std::sqrt(delta * (1 - delta) / reps);
  out.require(freq <= delta + 3 * sigma, "shortfall frequency <= delta + 3 sigma");
  out.detail << "var=" << var << " T=" << T << " F=" << fidelity << " shortfall freq=" << freq
             << " (limit " << delta + 3 * sigma << ")";
}

void determinism(Outcome &out) {
  ExperimentConfig base;
  base.n = 8;
  base.d = 3;
  base.m = 2;
  base.trials = 64;
  base.samples = 100;
  base.seed = 11;
  base.depths = {2, 6};
  using Runner = ExperimentResult (*)(const ExperimentConfig &);
  const std::vector<std::pair<const char *, Runner>> runners{
      {"spoof", run_spoof},
      {"validate-single", run_single_qubit_validation},
      {"collision", run_collision_study},
      {"pauli-exact", run_pauli_exact}};
  for (const auto &[name, run] : runners) {
    for (OutputFormat format : {OutputFormat::Json, OutputFormat::Csv}) {
      std::string reference;
      for (unsigned workers : {1u, 4u, 8u, 1u}) {
        ExperimentConfig cfg = base;
        cfg.workers = workers;
        const std::string body = render(run(cfg), format);
        if (reference.empty())
          reference = body;
        else
          out.require(body == reference, std::string(name) + " differs at " +
                                             std::to_string(workers) + " workers");
      }
    }
  }
  out.detail << runners.size() << " experiments x 2 formats at 1, 4, 8 workers and a re-run";
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, Criterion>> criteria{
      {"exact single-gate value", exact_single_gate},
      {"single-qubit expectation at desk scale", single_qubit_expectation},
      {"multi-qubit fidelity at desk scale", multi_qubit_fidelity},
      {"identity-circuit exactness", identity_exactness},
      {"oracle equivalence", oracle_equivalence},
      {"Haar sampler moments", haar_moments},
      {"assignment lower bound", assignment_lower_bound},
      {"variance bound", variance_bound},
      {"collision-probability behavior", collision_behavior},
      {"Chebyshev contract", chebyshev_contract},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      criteria[k].second(out);
    } catch (const std::exception &e) {
      out.pass = false;
      out.detail << " exception: " << e.what();
    }
    if (!out.pass)
      ++failures;
    std::printf("%s %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
