#pragma once

#include <vector>

#include "xebspoof/cone.hpp"
#include "xebspoof/gates.hpp"
#include "xebspoof/skeleton.hpp"

namespace xeb {

/// Index of a Pauli pair on a gate's two wires: 4 * first + second.
constexpr int pauli_pair_index(Pauli first, Pauli second) {
  return 4 * static_cast<int>(first) + static_cast<int>(second);
}

/// Haar average of one two-qubit gate in the normalized Pauli basis: 1 on
/// (II, II), 1/15 between any two non-identity pairs, 0 elsewhere. Rows are
/// the incoming pair, columns the outgoing pair.
const Matrix16d &transition_matrix();

/// transition_matrix() entry as an exact rational.
Rational transition_entry(Pauli in_first, Pauli in_second, Pauli out_first,
                          Pauli out_second);

/// Weights over {I,X,Y,Z}^n. The label of wire w is base-4 digit w of the
/// index.
class PauliConfigVector {
public:
  PauliConfigVector(int n, VectorXd weights);

  int n() const { return n_; }
  const VectorXd &weights() const { return weights_; }
  double weight(const std::vector<Pauli> &labels) const;
  double mass() const { return weights_.sum(); }

  static std::size_t index_of(const std::vector<Pauli> &labels);

private:
  int n_;
  VectorXd weights_;
};

struct ChainOptions {
  int max_wires = 10; // vectors hold 4^wires doubles
};

/// Throws resource_error when 4^wires weights exceed the cap.
void require_chain_fits(int wires, int max_wires);

/// Weight prod_i tr(|0><0| sigma_i / sqrt 2)^2: 2^-n on {I,Z}^n, else 0.
PauliConfigVector input_boundary(int n, const ChainOptions &opts = {});

/// One gate layer: M on each pair (2j, 2j+1), then wire w relabelled to
/// wiring[w].
PauliConfigVector layer_transfer(const PauliConfigVector &v,
                                 const std::vector<int> &wiring);

/// Per-stage record of a chain contraction: stage 0 is the input boundary,
/// stage t the vector after gate layer t.
struct ChainTrace {
  std::vector<double> layer_mass;
  int width = 0;
  double value = 0.0;
};

/// E over Haar gates of <psi|Z_i|psi>^2 with psi = C|0^n>, contracted on the
/// light cone of output i only.
double expected_trace_squared(const Skeleton &s, int output,
                              const ChainOptions &opts = {});
ChainTrace expected_trace_squared_traced(const Skeleton &s, int output,
                                         const ChainOptions &opts = {});

/// Same quantity contracted over all n wires with input_boundary and
/// layer_transfer.
ChainTrace expected_trace_squared_full(const Skeleton &s, int output,
                                       const ChainOptions &opts = {});

/// E[q_{i,0}^2 + q_{i,1}^2] = (1 + expected_trace_squared) / 2.
double single_qubit_expected_sos(const Skeleton &s, int output,
                                 const ChainOptions &opts = {});

/// prod_j 2 E[q_{i_j,0}^2 + q_{i_j,1}^2] - 1. Throws std::invalid_argument
/// unless the outputs have pairwise-disjoint light cones.
double expected_fidelity_exact(const Skeleton &s,
                               const std::vector<int> &outputs,
                               const ChainOptions &opts = {});

/// Labels sigma^{(t)} for t = 1..d+1 (entry t-1): a single Z threaded
/// backwards from output i through the wiring, I everywhere else.
std::vector<std::vector<Pauli>> single_z_assignment(const Skeleton &s,
                                                    int output);

/// Exact weight of one assignment: input boundary, every gate layer, and the
/// Z_i (x) I output boundary.
Rational assignment_weight(const Skeleton &s, int output,
                           const std::vector<std::vector<Pauli>> &labels);

/// assignment_weight of single_z_assignment; equals 15^-d.
Rational lower_bound_assignment_weight(const Skeleton &s, int output);

} // namespace xeb
