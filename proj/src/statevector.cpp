#include "xebspoof/statevector.hpp"

#include <sstream>

namespace xeb {

Circuit::Circuit(Skeleton s, std::vector<std::vector<Unitary2Q>> g)
    : skeleton(std::move(s)), gates(std::move(g)) {
  if (static_cast<int>(gates.size()) != skeleton.depth())
    throw std::invalid_argument("circuit needs one gate list per layer");
  for (const auto &layer : gates)
    if (static_cast<int>(layer.size()) != skeleton.gates_per_layer())
      throw std::invalid_argument("circuit needs one gate per gate node");
}

Circuit haar_circuit(const Skeleton &s, Rng &rng) {
  std::vector<std::vector<Unitary2Q>> gates(s.depth());
  for (auto &layer : gates) {
    layer.reserve(s.gates_per_layer());
    for (int j = 0; j < s.gates_per_layer(); ++j)
      layer.push_back(haar_unitary(rng));
  }
  return Circuit(s, std::move(gates));
}

Circuit uniform_circuit(const Skeleton &s, const Unitary2Q &u) {
  return Circuit(s, std::vector<std::vector<Unitary2Q>>(
                        s.depth(), std::vector<Unitary2Q>(s.gates_per_layer(), u)));
}

void require_statevector_fits(int n, int max_qubits) {
  if (n <= max_qubits)
    return;
  std::ostringstream msg;
  msg << "statevector of " << n << " qubits needs 2^" << n
      << " amplitudes (" << std::ldexp(16.0, n) / (1 << 20)
      << " MiB); the cap is " << max_qubits << " qubits";
  throw resource_error(msg.str());
}

namespace {
void check_bits(int n, Bits x) {
  if (n < 64 && (x >> n) != 0)
    throw std::invalid_argument("bitstring has bits beyond qubit " +
                                std::to_string(n - 1));
}
} // namespace

double output_probability(const StateVector &psi, Bits x) {
  check_bits(psi.n(), x);
  return std::norm(psi.amplitudes()[static_cast<Eigen::Index>(x)]);
}

VectorXd probabilities(const StateVector &psi) {
  return psi.amplitudes().cwiseAbs2();
}

double xeb_instance(const VectorXd &q, Bits x) {
  if (x >= static_cast<Bits>(q.size()))
    throw std::invalid_argument("bitstring outside distribution support");
  return static_cast<double>(q.size()) * q[static_cast<Eigen::Index>(x)] - 1.0;
}

double linear_xeb(const VectorXd &q, const VectorXd &p) {
  if (q.size() != p.size())
    throw std::invalid_argument("distributions differ in size");
  return static_cast<double>(q.size()) * q.dot(p) - 1.0;
}

double collision_probability(const VectorXd &q) { return q.squaredNorm(); }

double collision_probability(const StateVector &psi) {
  return collision_probability(probabilities(psi));
}

std::array<double, 2> marginal(const VectorXd &q, int qubit) {
  std::array<double, 2> out{0.0, 0.0};
  for (Eigen::Index x = 0; x < q.size(); ++x)
    out[(x >> qubit) & 1] += q[x];
  return out;
}

double joint_marginal(const VectorXd &q, const std::vector<int> &outputs,
                      Bits values) {
  double total = 0.0;
  for (Eigen::Index x = 0; x < q.size(); ++x) {
    bool match = true;
    for (std::size_t k = 0; k < outputs.size() && match; ++k)
      match = bit_of(static_cast<Bits>(x), outputs[k]) == bit_of(values, static_cast<int>(k));
    if (match)
      total += q[x];
  }
  return total;
}

double expectation_z(const StateVector &psi, int qubit) {
  VectorXcd flipped = psi.amplitudes();
  for (Eigen::Index x = 0; x < flipped.size(); ++x)
    if ((x >> qubit) & 1)
      flipped[x] = -flipped[x];
  return psi.amplitudes().dot(flipped).real();
}

} // namespace xeb
