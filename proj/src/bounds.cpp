#include "xebspoof/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace xeb {

namespace {

// log(1 + 15^-d) without forming 1 + tiny.
double log1p_fifteenth_power(int d) {
  return std::log1p(std::exp(-d * std::log(15.0)));
}

Rational rational_pow(Rational base, int exponent) {
  Rational out(1);
  for (int k = 0; k < exponent; ++k)
    out *= base;
  return out;
}

} // namespace

void BoundInputs::validate() const {
  auto fail = [](const std::string &what) {
    throw std::invalid_argument(what);
  };
  if (n < 1)
    fail("n must be positive");
  if (d < 0)
    fail("d must be non-negative");
  if (L < 1)
    fail("L must be positive");
  if (m < 0)
    fail("m must be non-negative");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    fail("delta must lie in (0, 1)");
  if (cp < 0.0 || cp > 1.0)
    fail("collision probability must lie in [0, 1]");
  if (var < 0.0)
    fail("variance must be non-negative");
}

double theorem_bound(int m, int d) {
  if (m < 0 || d < 0)
    throw std::invalid_argument("m and d must be non-negative");
  return std::expm1(m * log1p_fifteenth_power(d));
}

double success_prob_bound(int m, int d, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  const double gain = theorem_bound(m, d);
  if (gain <= 0.0 || epsilon >= 1.0)
    return 0.0;
  return std::exp(std::log1p(-epsilon) + std::log(gain) - m * std::log(2.0));
}

std::int64_t chebyshev_samples(double var, double epsilon, double delta) {
  if (var < 0.0)
    throw std::invalid_argument("variance must be non-negative");
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("epsilon and delta must lie in (0, 1)");
  const double raw = var / (epsilon * epsilon * delta);
  // Strip the last few ulps so exact ratios such as 1/(0.1^2 * 0.1) do not
  // round up past the integer.
  const double samples = std::ceil(raw * (1.0 - 8 * std::numeric_limits<double>::epsilon()));
  if (samples >= 9.2e18)
    throw std::overflow_error("sample count does not fit in 64 bits");
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(samples));
}

double log2_variance_cp_bound(int m, int n, double cp) {
  if (cp < 0.0 || cp > 1.0)
    throw std::invalid_argument("collision probability must lie in [0, 1]");
  return (m + n) + std::log2(cp);
}

double variance_cp_bound(int m, int n, double cp) {
  if (cp < 0.0 || cp > 1.0)
    throw std::invalid_argument("collision probability must lie in [0, 1]");
  if (m + n <= 50)
    return std::ldexp(cp, m + n);
  return std::exp2(log2_variance_cp_bound(m, n, cp));
}

double type1_path_bound(int n, int d) {
  if (n < 0 || d < 0)
    throw std::invalid_argument("n and d must be non-negative");
  const int half = n / 2;
  return std::exp(half * std::log1p(std::pow(0.8, d)));
}

Rational type1_path_bound_exact(int n, int d) {
  if (n < 0 || d < 0)
    throw std::invalid_argument("n and d must be non-negative");
  return rational_pow(1 + rational_pow(Rational(4, 5), d), n / 2);
}

} // namespace xeb
