#pragma once

#include <cstdint>

#include "xebspoof/common.hpp"

namespace xeb {

/// Parameters shared by the closed-form bound calculators.
struct BoundInputs {
  int n = 0;
  int d = 0;
  int L = 1;
  int m = 1;
  double epsilon = 0.1;
  double delta = 0.1;
  double cp = 0.0;  // collision probability
  double var = 0.0; // variance of the instance XEB

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// (1 + 15^-d)^m - 1, the guaranteed expected fidelity.
double theorem_bound(int m, int d);

/// (1 - eps) ((1 + 15^-d)^m - 1) / 2^m: lower bound on the probability over
/// circuits that the fidelity exceeds eps times theorem_bound.
double success_prob_bound(int m, int d, double epsilon);

/// ceil(var / (eps^2 delta)), at least 1.
std::int64_t chebyshev_samples(double var, double epsilon, double delta);

/// 2^(m+n) cp, an upper bound on the sampler's instance-XEB variance.
double variance_cp_bound(int m, int n, double cp);
double log2_variance_cp_bound(int m, int n, double cp);

/// (1 + (4/5)^d)^floor(n/2), the bound on type-(i) domain-wall weight.
double type1_path_bound(int n, int d);

/// type1_path_bound in exact rational arithmetic.
Rational type1_path_bound_exact(int n, int d);

} // namespace xeb
