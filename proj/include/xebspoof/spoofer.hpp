#pragma once

#include <array>
#include <vector>

#include "xebspoof/statevector.hpp"

namespace xeb {

/// Outputs chosen for marginal sampling, with their single-qubit marginals.
/// Every other output is sampled uniformly.
struct SpoofPlan {
  int n = 0;
  int requested = 0;
  std::vector<int> selected;                    // 0-based output indices
  std::vector<std::array<double, 2>> marginals; // (q_{i,0}, q_{i,1})
  std::vector<int> cone_sizes;

  int m() const { return static_cast<int>(selected.size()); }
  bool shortfall() const { return m() < requested; }
};

struct PlanOptions {
  int max_cone_qubits = 24;
  unsigned workers = 1;
};

/// Greedy disjoint-cone selection followed by a light-cone simulation per
/// selected output. m = 0 yields the uniform sampler. When fewer than m
/// disjoint outputs exist the plan keeps what was found and reports
/// shortfall().
SpoofPlan plan(const Circuit &c, int m, const PlanOptions &opts = {});

/// Draws one output string. Needs n <= 64.
Bits sample(const SpoofPlan &p, Rng &rng);

/// 2^{-(n-m)} prod_j q_{i_j, x_{i_j}}. Needs n <= 64.
double spoof_pdf(const SpoofPlan &p, Bits x);

/// spoof_pdf over all 2^n strings.
VectorXd spoof_distribution(const SpoofPlan &p, int max_qubits = 24);

/// prod_j 2 (q_{i_j,0}^2 + q_{i_j,1}^2) - 1, the linear XEB of the sampler.
double closed_form_fidelity(const SpoofPlan &p);

} // namespace xeb
