#include "xebspoof/pauli_chain.hpp"

#include <sstream>

namespace xeb {

namespace {

std::size_t pow4(int k) { return std::size_t{1} << (2 * k); }

int digit(std::size_t index, int wire) {
  return static_cast<int>((index >> (2 * wire)) & 3U);
}

// M on the digits of wires `first` and `second`, in place.
void apply_transition(VectorXd &w, int first, int second) {
  const Matrix16d &m = transition_matrix();
  const std::size_t s1 = pow4(first), s2 = pow4(second);
  Eigen::Matrix<double, 16, 1> in, out;
  for (std::size_t base = 0; base < static_cast<std::size_t>(w.size()); ++base) {
    if (digit(base, first) != 0 || digit(base, second) != 0)
      continue;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        in[4 * a + b] = w[base + a * s1 + b * s2];
    out.noalias() = m.transpose() * in;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        w[base + a * s1 + b * s2] = out[4 * a + b];
  }
}

// tr(|0><0| sigma) and tr(sigma tau) are integers for Pauli labels.
int trace_on_zero(Pauli p) {
  return static_cast<int>(std::lround(pauli_matrix(p)(0, 0).real()));
}

int trace_product(Pauli a, Pauli b) {
  return static_cast<int>(
      std::lround((pauli_matrix(a) * pauli_matrix(b)).trace().real()));
}

// tr(|0><0| sigma / sqrt 2)^2
Rational input_factor(Pauli p) {
  const int t = trace_on_zero(p);
  return Rational(t * t, 2);
}

// tr(sigma / sqrt 2 * target)^2
Rational output_factor(Pauli p, Pauli target) {
  const int t = trace_product(p, target);
  return Rational(t * t, 2);
}

} // namespace

const Matrix16d &transition_matrix() {
  static const Matrix16d m = [] {
    Matrix16d out = Matrix16d::Constant(1.0 / 15.0);
    out.row(0).setZero();
    out.col(0).setZero();
    out(0, 0) = 1.0;
    return out;
  }();
  return m;
}

Rational transition_entry(Pauli in_first, Pauli in_second, Pauli out_first,
                          Pauli out_second) {
  const bool in_identity = in_first == Pauli::I && in_second == Pauli::I;
  const bool out_identity = out_first == Pauli::I && out_second == Pauli::I;
  if (in_identity && out_identity)
    return Rational(1);
  if (in_identity || out_identity)
    return Rational(0);
  return Rational(1, 15);
}

PauliConfigVector::PauliConfigVector(int n, VectorXd weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ < 1 || static_cast<std::size_t>(weights_.size()) != pow4(n_))
    throw std::invalid_argument("Pauli weight vector must have 4^n entries");
}

std::size_t PauliConfigVector::index_of(const std::vector<Pauli> &labels) {
  std::size_t index = 0;
  for (std::size_t w = 0; w < labels.size(); ++w)
    index |= static_cast<std::size_t>(labels[w]) << (2 * w);
  return index;
}

double PauliConfigVector::weight(const std::vector<Pauli> &labels) const {
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count differs from vector width");
  return weights_[static_cast<Eigen::Index>(index_of(labels))];
}

void require_chain_fits(int wires, int max_wires) {
  if (wires <= max_wires)
    return;
  std::ostringstream msg;
  msg << "Pauli chain on " << wires << " wires needs 4^" << wires
      << " weights (" << std::ldexp(8.0, 2 * wires) / (1 << 20)
      << " MiB); the cap is " << max_wires << " wires";
  throw resource_error(msg.str());
}

PauliConfigVector input_boundary(int n, const ChainOptions &opts) {
  if (n < 1)
    throw std::invalid_argument("input boundary needs n >= 1");
  require_chain_fits(n, opts.max_wires);
  VectorXd w = VectorXd::Zero(static_cast<Eigen::Index>(pow4(n)));
  const double value = std::ldexp(1.0, -n);
  // Every digit in {I=0, Z=3}: enumerate the 2^n subsets of Z positions.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::size_t index = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U)
        index |= std::size_t{3} << (2 * i);
    w[static_cast<Eigen::Index>(index)] = value;
  }
  return PauliConfigVector(n, std::move(w));
}

PauliConfigVector layer_transfer(const PauliConfigVector &v,
                                 const std::vector<int> &wiring) {
  const int n = v.n();
  if (static_cast<int>(wiring.size()) != n || n % 2 != 0)
    throw std::invalid_argument("layer wiring does not match vector width");
  VectorXd w = v.weights();
  for (int j = 0; j < n / 2; ++j)
    apply_transition(w, 2 * j, 2 * j + 1);
  VectorXd out(w.size());
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(w.size()); ++idx) {
    std::size_t moved = 0;
    for (int wire = 0; wire < n; ++wire)
      moved |= static_cast<std::size_t>(digit(idx, wire)) << (2 * wiring[wire]);
    out[static_cast<Eigen::Index>(moved)] = w[static_cast<Eigen::Index>(idx)];
  }
  return PauliConfigVector(n, std::move(out));
}

ChainTrace expected_trace_squared_traced(const Skeleton &s, int output,
                                         const ChainOptions &opts) {
  const ConeCircuit cc = cone_circuit(s, output);
  PauliConfigVector v = input_boundary(cc.width, opts);
  VectorXd w = v.weights();
  ChainTrace trace;
  trace.width = cc.width;
  trace.layer_mass.push_back(w.sum());
  for (const auto &layer : cc.layers) {
    for (const auto &g : layer)
      apply_transition(w, g.hi, g.lo);
    trace.layer_mass.push_back(w.sum());
  }
  // Output boundary: Z on the output wire, I on every wire that left the
  // cone; each contributes a factor 2.
  const std::size_t target = std::size_t{3} << (2 * cc.output_qubit);
  trace.value = std::ldexp(w[static_cast<Eigen::Index>(target)], cc.width);
  return trace;
}

double expected_trace_squared(const Skeleton &s, int output,
                              const ChainOptions &opts) {
  return expected_trace_squared_traced(s, output, opts).value;
}

ChainTrace expected_trace_squared_full(const Skeleton &s, int output,
                                       const ChainOptions &opts) {
  if (output < 0 || output >= s.n())
    throw std::out_of_range("output index out of range");
  PauliConfigVector v = input_boundary(s.n(), opts);
  ChainTrace trace;
  trace.width = s.n();
  // The input boundary is symmetric under relabelling, so perm(0) leaves it
  // unchanged; apply it anyway for a literal contraction.
  {
    VectorXd moved(v.weights().size());
    const auto &p0 = s.perm(0);
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(moved.size()); ++idx) {
      std::size_t to = 0;
      for (int wire = 0; wire < s.n(); ++wire)
        to |= static_cast<std::size_t>(digit(idx, wire)) << (2 * p0[wire]);
      moved[static_cast<Eigen::Index>(to)] = v.weights()[static_cast<Eigen::Index>(idx)];
    }
    v = PauliConfigVector(s.n(), std::move(moved));
  }
  trace.layer_mass.push_back(v.mass());
  for (int t = 1; t <= s.depth(); ++t) {
    v = layer_transfer(v, s.perm(t));
    trace.layer_mass.push_back(v.mass());
  }
  std::vector<Pauli> target(s.n(), Pauli::I);
  target[output] = Pauli::Z;
  trace.value = std::ldexp(v.weight(target), s.n());
  return trace;
}

double single_qubit_expected_sos(const Skeleton &s, int output,
                                 const ChainOptions &opts) {
  return 0.5 * (1.0 + expected_trace_squared(s, output, opts));
}

double expected_fidelity_exact(const Skeleton &s,
                               const std::vector<int> &outputs,
                               const ChainOptions &opts) {
  if (!cones_disjoint(s, outputs))
    throw std::invalid_argument(
        "outputs must have pairwise-disjoint light cones");
  double product = 1.0;
  for (int i : outputs)
    product *= 2.0 * single_qubit_expected_sos(s, i, opts);
  return product - 1.0;
}

std::vector<std::vector<Pauli>> single_z_assignment(const Skeleton &s,
                                                    int output) {
  const int n = s.n(), d = s.depth();
  if (output < 0 || output >= n)
    throw std::out_of_range("output index out of range");
  std::vector<std::vector<Pauli>> labels(d + 1, std::vector<Pauli>(n, Pauli::I));
  int z_wire = output;
  labels[d][z_wire] = Pauli::Z;
  for (int t = d; t >= 1; --t) {
    z_wire = s.inverse_perm(t)[z_wire];
    labels[t - 1][z_wire] = Pauli::Z;
  }
  return labels;
}

Rational assignment_weight(const Skeleton &s, int output,
                           const std::vector<std::vector<Pauli>> &labels) {
  const int n = s.n(), d = s.depth();
  if (static_cast<int>(labels.size()) != d + 1)
    throw std::invalid_argument("assignment needs d+1 label layers");
  Rational weight(1);
  for (int w = 0; w < n; ++w)
    weight *= input_factor(labels[0][w]);
  for (int t = 1; t <= d; ++t) {
    const auto &in = labels[t - 1];
    const auto &next = labels[t];
    const auto &p = s.perm(t);
    for (int j = 0; j < n / 2; ++j)
      weight *= transition_entry(in[2 * j], in[2 * j + 1], next[p[2 * j]],
                                 next[p[2 * j + 1]]);
  }
  for (int o = 0; o < n; ++o)
    weight *= output_factor(labels[d][o], o == output ? Pauli::Z : Pauli::I);
  return weight;
}

Rational lower_bound_assignment_weight(const Skeleton &s, int output) {
  return assignment_weight(s, output, single_z_assignment(s, output));
}

} // namespace xeb
