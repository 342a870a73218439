#pragma once

// Reference implementations used as oracles by the tests. They are written
// directly from the definitions and share no code paths with the library
// beyond the Skeleton container and the gate matrices.

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "xebspoof/statevector.hpp"

namespace xeb::testing {

/// 8-qubit depth-3 ring: identity input wiring, then cyclic shifts by -1,
/// +1, -1 between the gate layers (1-based cycles (1 8 7 ... 2) and
/// (8 1 2 ... 7)).
inline Skeleton ring_shift_skeleton() {
  const int n = 8;
  std::vector<int> id(n), down(n), up(n);
  for (int i = 0; i < n; ++i) {
    id[i] = i;
    down[i] = (i + n - 1) % n;
    up[i] = (i + 1) % n;
  }
  return Skeleton(n, {id, down, up, down});
}

/// Uniformly random wiring of every layer.
inline Skeleton random_skeleton(int n, int d, Rng &rng) {
  std::vector<std::vector<int>> perms(d + 1, std::vector<int>(n));
  for (auto &p : perms) {
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
  }
  return Skeleton(n, std::move(perms));
}

/// Light-cone inputs by breadth-first search on the explicit DAG
/// (input nodes, gate nodes, output nodes) read off the definition.
inline std::vector<int> bfs_cone_inputs(const Skeleton &s, int output) {
  const int n = s.n(), d = s.depth();
  // Node ids: inputs [0,n), gate (t,j) at n + (t-1)*(n/2) + j, outputs after.
  const int gates = d * (n / 2);
  const int total = n + gates + n;
  auto gate_id = [&](int t, int j) { return n + (t - 1) * (n / 2) + j; };
  std::vector<std::vector<int>> preds(total);
  for (int t = 0; t <= d; ++t) {
    for (int w = 0; w < n; ++w) {
      const int from = t == 0 ? w : gate_id(t, w / 2);
      const int dest = s.perm(t)[w];
      const int to = t == d ? n + gates + dest : gate_id(t + 1, dest / 2);
      preds[to].push_back(from);
    }
  }
  std::vector<bool> seen(total, false);
  std::queue<int> frontier;
  frontier.push(n + gates + output);
  seen[n + gates + output] = true;
  std::vector<int> inputs;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    if (v < n)
      inputs.push_back(v);
    for (int u : preds[v])
      if (!seen[u]) {
        seen[u] = true;
        frontier.push(u);
      }
  }
  std::sort(inputs.begin(), inputs.end());
  return inputs;
}

/// Statevector where amplitude bit w always means wire position w of the
/// current layer: gates act on bits (2j, 2j+1) and the wiring is applied by
/// physically permuting the amplitudes.
inline VectorXcd naive_simulate(const Circuit &c) {
  const Skeleton &s = c.skeleton;
  const int n = s.n();
  const std::size_t dim = std::size_t{1} << n;
  VectorXcd psi = VectorXcd::Zero(dim);
  psi[0] = 1.0;
  auto permute = [&](const VectorXcd &in, const std::vector<int> &perm) {
    VectorXcd out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t y = 0;
      for (int w = 0; w < n; ++w)
        if ((x >> w) & 1U)
          y |= std::size_t{1} << perm[w];
      out[y] = in[x];
    }
    return out;
  };
  psi = permute(psi, s.perm(0));
  for (int t = 1; t <= s.depth(); ++t) {
    for (int j = 0; j < n / 2; ++j) {
      const Unitary2Q &u = c.gate(t, j);
      const int hi = 2 * j, lo = 2 * j + 1;
      VectorXcd next = VectorXcd::Zero(dim);
      for (std::size_t x = 0; x < dim; ++x) {
        const int col = static_cast<int>(((x >> hi) & 1U) * 2 + ((x >> lo) & 1U));
        const std::size_t base = x & ~((std::size_t{1} << hi) | (std::size_t{1} << lo));
        for (int row = 0; row < 4; ++row) {
          const std::size_t y = base | (std::size_t(row >> 1) << hi) |
                                (std::size_t(row & 1) << lo);
          next[y] += u(row, col) * psi[x];
        }
      }
      psi = std::move(next);
    }
    psi = permute(psi, s.perm(t));
  }
  return psi;
}

inline VectorXd naive_probabilities(const Circuit &c) {
  return naive_simulate(c).cwiseAbs2();
}

inline std::array<double, 2> naive_marginal(const VectorXd &q, int i) {
  std::array<double, 2> out{0.0, 0.0};
  for (Eigen::Index x = 0; x < q.size(); ++x)
    out[(x >> i) & 1] += q[x];
  return out;
}

/// Running mean and standard error.
struct Moments {
  double sum = 0.0, sum_sq = 0.0;
  std::size_t count = 0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return sum / static_cast<double>(count); }
  double stderr_() const {
    const double m = mean();
    const double var =
        (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(count));
  }
};

} // namespace xeb::testing
