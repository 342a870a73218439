#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "xebspoof/gates.hpp"
#include "xebspoof/parallel.hpp"
#include "xebspoof/skeleton.hpp"

namespace xeb {

/// A skeleton with one unitary per gate node: gates[t-1][j] sits on node j of
/// gate layer t.
struct Circuit {
  Skeleton skeleton;
  std::vector<std::vector<Unitary2Q>> gates;

  Circuit(Skeleton s, std::vector<std::vector<Unitary2Q>> g);

  const Unitary2Q &gate(int layer, int node) const {
    return gates[layer - 1][node];
  }
};

/// Every gate drawn independently from the Haar measure, layer by layer.
Circuit haar_circuit(const Skeleton &s, Rng &rng);

/// Every gate set to `u`.
Circuit uniform_circuit(const Skeleton &s, const Unitary2Q &u);

/// Pure state on n qubits; qubit i is bit i of the amplitude index.
template <typename Scalar = double> class BasicStateVector {
public:
  using Amplitudes = typename math_types<Scalar>::VectorXc;

  BasicStateVector(int n, Amplitudes amps) : n_(n), amps_(std::move(amps)) {}

  int n() const { return n_; }
  const Amplitudes &amplitudes() const { return amps_; }
  Scalar squared_norm() const { return amps_.squaredNorm(); }

private:
  int n_;
  Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;

struct SimulateOptions {
  int max_qubits = 24;
  bool check_normalization = false; // verify the norm after every layer
  unsigned workers = 1;
};

inline constexpr double kNormalizationTolerance = 1e-10;

/// Throws resource_error when 2^n amplitudes exceed the cap.
void require_statevector_fits(int n, int max_qubits);

/// Applies u to the qubits on bits `hi` (first wire of the pair) and `lo`.
template <typename Scalar, typename Gate>
void apply_two_qubit_gate(typename math_types<Scalar>::VectorXc &amps,
                          const Gate &u, int hi, int lo, unsigned workers = 1) {
  using C = typename math_types<Scalar>::Complex;
  const std::size_t dim = static_cast<std::size_t>(amps.size());
  const std::size_t hi_mask = std::size_t{1} << hi;
  const std::size_t lo_mask = std::size_t{1} << lo;
  const int low_bit = std::min(hi, lo), high_bit = std::max(hi, lo);
  const std::size_t blocks = dim >> 2;
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      // Spread k over the bits that are neither `hi` nor `lo`.
      std::size_t base = k;
      base = ((base >> low_bit) << (low_bit + 1)) |
             (base & ((std::size_t{1} << low_bit) - 1));
      base = ((base >> high_bit) << (high_bit + 1)) |
             (base & ((std::size_t{1} << high_bit) - 1));
      const std::size_t idx[4] = {base, base | lo_mask, base | hi_mask,
                                  base | hi_mask | lo_mask};
      C in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
      for (int r = 0; r < 4; ++r)
        amps[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] +
                       u(r, 3) * in[3];
    }
  };
  if (workers <= 1 || blocks < (std::size_t{1} << 14)) {
    run(0, blocks);
    return;
  }
  const std::size_t chunks = workers * 4;
  parallel_for(chunks, workers, [&](std::size_t c) {
    run(blocks * c / chunks, blocks * (c + 1) / chunks);
  });
}

/// Runs the circuit on |0^n>. Wiring permutations are tracked as a map from
/// wire positions to amplitude bits; a single reorder at the end puts output
/// i on bit i.
template <typename Scalar = double>
BasicStateVector<Scalar> simulate(const Circuit &c,
                                  const SimulateOptions &opts = {}) {
  using T = math_types<Scalar>;
  const Skeleton &s = c.skeleton;
  const int n = s.n();
  require_statevector_fits(n, opts.max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  typename T::VectorXc amps = T::VectorXc::Zero(dim);
  amps[0] = typename T::Complex(1);

  std::vector<int> bit_of_wire(n);
  for (int i = 0; i < n; ++i)
    bit_of_wire[s.perm(0)[i]] = i;
  for (int t = 1; t <= s.depth(); ++t) {
    for (int j = 0; j < n / 2; ++j) {
      typename T::Matrix4c u = c.gate(t, j).template cast<typename T::Complex>();
      apply_two_qubit_gate<Scalar>(amps, u, bit_of_wire[2 * j],
                                   bit_of_wire[2 * j + 1], opts.workers);
    }
    if (opts.check_normalization &&
        std::abs(amps.squaredNorm() - Scalar(1)) > kNormalizationTolerance)
      throw std::logic_error("normalization lost after layer " +
                             std::to_string(t));
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w)
      next[s.perm(t)[w]] = bit_of_wire[w];
    bit_of_wire = std::move(next);
  }

  bool aligned = true;
  for (int o = 0; o < n; ++o)
    aligned = aligned && bit_of_wire[o] == o;
  if (aligned)
    return BasicStateVector<Scalar>(n, std::move(amps));
  typename T::VectorXc out(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int o = 0; o < n; ++o)
      y |= ((x >> bit_of_wire[o]) & 1U) << o;
    out[y] = amps[x];
  }
  return BasicStateVector<Scalar>(n, std::move(out));
}

/// |<x|psi>|^2. Throws std::invalid_argument if x has bits beyond n.
double output_probability(const StateVector &psi, Bits x);

/// Full output distribution q(x) = |<x|psi>|^2.
VectorXd probabilities(const StateVector &psi);

/// 2^n q(x) - 1 for a normalized pdf q over n-bit strings.
double xeb_instance(const VectorXd &q, Bits x);

/// 2^n sum_x q(x) p(x) - 1.
double linear_xeb(const VectorXd &q, const VectorXd &p);

/// sum_x q(x)^2.
double collision_probability(const StateVector &psi);
double collision_probability(const VectorXd &q);

/// (Pr[x_i = 0], Pr[x_i = 1]).
std::array<double, 2> marginal(const VectorXd &q, int qubit);

/// Pr[x_{outputs[k]} = bit k of `values` for all k].
double joint_marginal(const VectorXd &q, const std::vector<int> &outputs,
                      Bits values);

/// <psi| Z_i |psi>, by applying Z_i to a copy of the state.
double expectation_z(const StateVector &psi, int qubit);

} // namespace xeb
