#include "xebspoof/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace xeb {

namespace {

bool is_permutation_of_range(const std::vector<int> &p, int n) {
  if (static_cast<int>(p.size()) != n)
    return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

void require_width(int n) {
  if (n < 2 || n % 2 != 0)
    throw invalid_architecture("qubit count must be even and >= 2, got " +
                               std::to_string(n));
}

// Brick pairs over an ordering of the lines: offset 0 pairs (o0,o1),(o2,o3),
// offset 1 pairs (o1,o2),...,(o_{n-1},o0).
std::vector<LinePair> brick_layer(const std::vector<int> &order, int offset) {
  const int n = static_cast<int>(order.size());
  std::vector<LinePair> pairs;
  pairs.reserve(n / 2);
  for (int j = 0; j < n / 2; ++j)
    pairs.emplace_back(order[(2 * j + offset) % n],
                       order[(2 * j + 1 + offset) % n]);
  return pairs;
}

} // namespace

Skeleton::Skeleton(int n, std::vector<std::vector<int>> perms)
    : n_(n), perms_(std::move(perms)) {
  require_width(n_);
  if (perms_.empty())
    throw invalid_architecture("a skeleton needs at least one permutation");
  for (std::size_t t = 0; t < perms_.size(); ++t)
    if (!is_permutation_of_range(perms_[t], n_))
      throw invalid_architecture("wiring " + std::to_string(t) +
                                 " is not a permutation of the " +
                                 std::to_string(n_) + " wires");
}

std::vector<int> Skeleton::inverse_perm(int t) const {
  const auto &p = perm(t);
  std::vector<int> inv(n_);
  for (int w = 0; w < n_; ++w)
    inv[p[w]] = w;
  return inv;
}

Skeleton skeleton_from_pairings(int n,
                                const std::vector<std::vector<LinePair>> &layers) {
  require_width(n);
  const int d = static_cast<int>(layers.size());
  // line_at[k][p]: line sitting at wire position p of gate layer k+1.
  std::vector<std::vector<int>> line_at(d, std::vector<int>(n));
  std::vector<std::vector<int>> position_of(d, std::vector<int>(n, -1));
  for (int k = 0; k < d; ++k) {
    if (static_cast<int>(layers[k].size()) != n / 2)
      throw invalid_architecture("gate layer " + std::to_string(k + 1) +
                                 " must have exactly n/2 gates");
    for (int j = 0; j < n / 2; ++j) {
      auto [a, b] = layers[k][j];
      line_at[k][2 * j] = a;
      line_at[k][2 * j + 1] = b;
    }
    if (!is_permutation_of_range(line_at[k], n))
      throw invalid_architecture("gate layer " + std::to_string(k + 1) +
                                 " is not a perfect matching of the lines");
    for (int p = 0; p < n; ++p)
      position_of[k][line_at[k][p]] = p;
  }

  std::vector<std::vector<int>> perms(d + 1, std::vector<int>(n));
  if (d == 0) {
    std::iota(perms[0].begin(), perms[0].end(), 0);
    return Skeleton(n, std::move(perms));
  }
  perms[0] = position_of[0];
  for (int t = 1; t < d; ++t)
    for (int p = 0; p < n; ++p)
      perms[t][p] = position_of[t][line_at[t - 1][p]];
  perms[d] = line_at[d - 1];
  return Skeleton(n, std::move(perms));
}

Skeleton build_1d_brickwork(int n, int d) {
  require_width(n);
  if (d < 0)
    throw std::invalid_argument("depth must be non-negative");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<LinePair>> layers;
  layers.reserve(d);
  for (int k = 0; k < d; ++k)
    layers.push_back(brick_layer(order, k % 2));
  return skeleton_from_pairings(n, layers);
}

Skeleton build_2d_grid(int rows, int cols, int d) {
  if (rows < 1 || cols < 1)
    throw invalid_architecture("grid dimensions must be positive");
  const int n = rows * cols;
  require_width(n);
  if (d < 0)
    throw std::invalid_argument("depth must be non-negative");
  std::vector<int> row_major(n), col_major(n);
  std::iota(row_major.begin(), row_major.end(), 0);
  for (int k = 0; k < n; ++k)
    col_major[k] = (k % rows) * cols + k / rows;
  std::vector<std::vector<LinePair>> layers;
  layers.reserve(d);
  for (int k = 0; k < d; ++k) {
    const int phase = k % 4;
    const auto &order = phase < 2 ? row_major : col_major;
    layers.push_back(brick_layer(order, phase % 2));
  }
  return skeleton_from_pairings(n, layers);
}

std::vector<std::vector<bool>> cone_wires(const Skeleton &s, int output) {
  const int n = s.n(), d = s.depth();
  if (output < 0 || output >= n)
    throw std::out_of_range("output index " + std::to_string(output) +
                            " outside [0, " + std::to_string(n) + ")");
  std::vector<std::vector<bool>> closure(d, std::vector<bool>(n, false));
  // Wires of layer t (t = d..1) that feed the cone of the next layer.
  std::vector<bool> frontier(n, false);
  if (d > 0) {
    frontier[s.inverse_perm(d)[output]] = true;
  }
  for (int t = d; t >= 1; --t) {
    auto &c = closure[t - 1];
    for (int w = 0; w < n; ++w)
      if (frontier[w]) {
        c[w] = true;
        c[w ^ 1] = true;
      }
    const auto inv = s.inverse_perm(t - 1);
    std::vector<bool> previous(n, false);
    for (int w = 0; w < n; ++w)
      if (c[w])
        previous[inv[w]] = true;
    frontier = std::move(previous);
  }
  return closure;
}

LightCone light_cone(const Skeleton &s, int output) {
  const int n = s.n(), d = s.depth();
  const auto closure = cone_wires(s, output);
  LightCone cone{output, {}, {}};
  const auto inv0 = s.inverse_perm(0);
  if (d == 0) {
    cone.inputs.push_back(inv0[output]);
    return cone;
  }
  for (int w = 0; w < n; ++w)
    if (closure[0][w])
      cone.inputs.push_back(inv0[w]);
  std::sort(cone.inputs.begin(), cone.inputs.end());
  for (int t = 1; t <= d; ++t)
    for (int j = 0; j < n / 2; ++j)
      if (closure[t - 1][2 * j])
        cone.gates.push_back({t, j});
  return cone;
}

int light_cone_size(const Skeleton &s) {
  std::size_t best = 0;
  for (int i = 0; i < s.n(); ++i)
    best = std::max(best, light_cone(s, i).inputs.size());
  return static_cast<int>(best);
}

std::vector<int> greedy_disjoint(const Skeleton &s, int m) {
  if (m < 1)
    throw std::invalid_argument("requested output count must be >= 1");
  std::vector<bool> used(s.n(), false);
  std::vector<int> selected;
  for (int i = 0; i < s.n() && static_cast<int>(selected.size()) < m; ++i) {
    const auto cone = light_cone(s, i);
    bool clash = std::any_of(cone.inputs.begin(), cone.inputs.end(),
                             [&](int x) { return used[x]; });
    if (clash)
      continue;
    for (int x : cone.inputs)
      used[x] = true;
    selected.push_back(i);
  }
  return selected;
}

bool cones_disjoint(const Skeleton &s, const std::vector<int> &outputs) {
  std::vector<bool> used(s.n(), false);
  for (int i : outputs)
    for (int x : light_cone(s, i).inputs) {
      if (used[x])
        return false;
      used[x] = true;
    }
  return true;
}

} // namespace xeb
