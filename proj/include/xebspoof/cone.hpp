#pragma once

#include <array>
#include <vector>

#include "xebspoof/skeleton.hpp"

namespace xeb {

struct Circuit;

/// The part of a skeleton that can influence one output, relabelled onto
/// `width` local qubits. Local qubit q starts as input inputs[q]; a local
/// qubit stops being acted on once its wire leaves the cone.
struct ConeCircuit {
  struct Gate {
    int layer; // 1..d in the parent skeleton
    int node;  // gate node index in that layer
    int hi;    // local qubit of the node's first wire
    int lo;    // local qubit of the node's second wire
  };

  int output = 0;
  int width = 0;
  std::vector<int> inputs;
  std::vector<std::vector<Gate>> layers; // layers[t-1]
  int output_qubit = 0;                  // local qubit carrying the output
};

ConeCircuit cone_circuit(const Skeleton &s, int output);

/// (Pr[x_i = 0], Pr[x_i = 1]) of output i, from a 2^width pure-state
/// simulation of its light cone. Throws resource_error past `max_qubits`.
std::array<double, 2> cone_marginal(const Circuit &c, int output,
                                    int max_qubits = 24);

} // namespace xeb
