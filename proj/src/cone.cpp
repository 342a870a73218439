#include "xebspoof/cone.hpp"

#include "xebspoof/statevector.hpp"

namespace xeb {

ConeCircuit cone_circuit(const Skeleton &s, int output) {
  const int n = s.n(), d = s.depth();
  const auto closure = cone_wires(s, output);
  const auto cone = light_cone(s, output);

  ConeCircuit cc;
  cc.output = output;
  cc.inputs = cone.inputs;
  cc.width = static_cast<int>(cc.inputs.size());
  cc.layers.resize(d);

  // local_of_wire[w]: local qubit on wire w of the current layer, or -1.
  std::vector<int> local_of_wire(n, -1);
  for (int q = 0; q < cc.width; ++q)
    local_of_wire[s.perm(0)[cc.inputs[q]]] = q;

  for (int t = 1; t <= d; ++t) {
    const auto &in_cone = closure[t - 1];
    for (int j = 0; j < n / 2; ++j)
      if (in_cone[2 * j])
        cc.layers[t - 1].push_back(
            {t, j, local_of_wire[2 * j], local_of_wire[2 * j + 1]});
    std::vector<int> next(n, -1);
    for (int w = 0; w < n; ++w)
      if (in_cone[w])
        next[s.perm(t)[w]] = local_of_wire[w];
    local_of_wire = std::move(next);
  }
  cc.output_qubit = local_of_wire[output];
  return cc;
}

std::array<double, 2> cone_marginal(const Circuit &c, int output,
                                    int max_qubits) {
  const ConeCircuit cc = cone_circuit(c.skeleton, output);
  require_statevector_fits(cc.width, max_qubits);
  VectorXcd amps = VectorXcd::Zero(Eigen::Index{1} << cc.width);
  amps[0] = 1.0;
  for (const auto &layer : cc.layers)
    for (const auto &g : layer)
      apply_two_qubit_gate<double>(amps, c.gate(g.layer, g.node), g.hi, g.lo);
  std::array<double, 2> out{0.0, 0.0};
  for (Eigen::Index x = 0; x < amps.size(); ++x)
    out[(x >> cc.output_qubit) & 1] += std::norm(amps[x]);
  return out;
}

} // namespace xeb
