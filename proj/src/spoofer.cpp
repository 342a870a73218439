#include "xebspoof/spoofer.hpp"

#include <cmath>
#include <random>

#include "xebspoof/cone.hpp"

namespace xeb {

namespace {

constexpr double kClampWindow = 1e-12;
constexpr double kMarginalSumTolerance = 1e-9;

double clamp_probability(double v) {
  if (v >= 0.0)
    return v;
  if (v >= -kClampWindow)
    return 0.0;
  throw std::logic_error("marginal probability " + std::to_string(v) +
                         " is negative beyond round-off");
}

void require_packed(int n) {
  if (n > 64)
    throw std::invalid_argument("bitstrings are packed in 64 bits; n = " +
                                std::to_string(n));
}

} // namespace

SpoofPlan plan(const Circuit &c, int m, const PlanOptions &opts) {
  if (m < 0)
    throw std::invalid_argument("requested output count must be >= 0");
  SpoofPlan p;
  p.n = c.skeleton.n();
  p.requested = m;
  if (m == 0)
    return p;
  p.selected = greedy_disjoint(c.skeleton, m);
  const std::size_t k = p.selected.size();
  p.marginals.resize(k);
  p.cone_sizes.resize(k);
  parallel_for(k, opts.workers, [&](std::size_t j) {
    const int out = p.selected[j];
    p.cone_sizes[j] =
        static_cast<int>(light_cone(c.skeleton, out).inputs.size());
    auto q = cone_marginal(c, out, opts.max_cone_qubits);
    q[0] = clamp_probability(q[0]);
    q[1] = clamp_probability(q[1]);
    if (std::abs(q[0] + q[1] - 1.0) > kMarginalSumTolerance)
      throw std::logic_error("marginal of output " + std::to_string(out) +
                             " does not sum to one");
    p.marginals[j] = q;
  });
  return p;
}

Bits sample(const SpoofPlan &p, Rng &rng) {
  require_packed(p.n);
  Bits x = rng();
  if (p.n < 64)
    x &= (Bits{1} << p.n) - 1;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int j = 0; j < p.m(); ++j) {
    const Bits mask = Bits{1} << p.selected[j];
    if (unit(rng) < p.marginals[j][1])
      x |= mask;
    else
      x &= ~mask;
  }
  return x;
}

double spoof_pdf(const SpoofPlan &p, Bits x) {
  require_packed(p.n);
  if (p.n < 64 && (x >> p.n) != 0)
    throw std::invalid_argument("bitstring longer than the plan's n");
  double value = std::ldexp(1.0, -(p.n - p.m()));
  for (int j = 0; j < p.m(); ++j)
    value *= p.marginals[j][bit_of(x, p.selected[j]) ? 1 : 0];
  return value;
}

VectorXd spoof_distribution(const SpoofPlan &p, int max_qubits) {
  require_statevector_fits(p.n, max_qubits);
  VectorXd out(Eigen::Index{1} << p.n);
  for (Eigen::Index x = 0; x < out.size(); ++x)
    out[x] = spoof_pdf(p, static_cast<Bits>(x));
  return out;
}

double closed_form_fidelity(const SpoofPlan &p) {
  double product = 1.0;
  for (const auto &q : p.marginals)
    product *= 2.0 * (q[0] * q[0] + q[1] * q[1]);
  return product - 1.0;
}

} // namespace xeb
