#pragma once

#include <utility>
#include <vector>

#include "xebspoof/common.hpp"

namespace xeb {

/// Layered architecture of an n-qubit depth-d circuit of two-qubit gates.
///
/// Layer 0 holds the n inputs, layers 1..d hold n/2 gate nodes each and
/// layer d+1 holds the n outputs. Gate node j of a gate layer acts on wire
/// positions 2j and 2j+1 of that layer (0-based). perm(t) wires layer t to
/// layer t+1: wire w of layer t feeds wire perm(t)[w] of layer t+1, so there
/// are d+1 permutations in total. Indices are 0-based throughout the library;
/// the JSON form and the CLI use 1-based indices.
class Skeleton {
public:
  /// Throws invalid_architecture unless n is even and positive and every
  /// entry of `perms` is a permutation of {0..n-1}. Depth is perms.size()-1.
  Skeleton(int n, std::vector<std::vector<int>> perms);

  int n() const { return n_; }
  int depth() const { return static_cast<int>(perms_.size()) - 1; }
  int gates_per_layer() const { return n_ / 2; }

  const std::vector<int> &perm(int t) const { return perms_.at(t); }
  const std::vector<std::vector<int>> &perms() const { return perms_; }
  std::vector<int> inverse_perm(int t) const;

  friend bool operator==(const Skeleton &, const Skeleton &) = default;

private:
  int n_;
  std::vector<std::vector<int>> perms_;
};

using LinePair = std::pair<int, int>;

/// Builds a skeleton from explicit gate pairings. `layers[k]` lists the n/2
/// pairs of qubit lines acted on by gate layer k+1; pair j becomes gate node
/// j with its first line on the high bit. Output i is line i.
Skeleton skeleton_from_pairings(int n,
                                const std::vector<std::vector<LinePair>> &layers);

/// Periodic brickwork: layers 1,3,5,... pair (0,1),(2,3),...; layers 2,4,...
/// pair (1,2),(3,4),...,(n-1,0).
Skeleton build_1d_brickwork(int n, int d);

/// Brick layers on a rows x cols grid, cycling horizontal-even,
/// horizontal-odd, vertical-even, vertical-odd. Horizontal layers are the 1D
/// brickwork over row-major order and vertical layers over column-major
/// order, which gives helical periodic boundaries. A single row reproduces
/// build_1d_brickwork exactly.
Skeleton build_2d_grid(int rows, int cols, int d);

struct GateNode {
  int layer; // 1..d
  int node;  // 0..n/2-1
  friend auto operator<=>(const GateNode &, const GateNode &) = default;
};

struct LightCone {
  int output;                  // 0-based output index
  std::vector<int> inputs;     // sorted input indices with a path to output
  std::vector<GateNode> gates; // gate nodes on such paths, sorted
};

/// cone_wires(s, i)[t-1][w] is true when wire w of gate layer t lies in the
/// backward closure of output i (both wires of every gate in the cone).
std::vector<std::vector<bool>> cone_wires(const Skeleton &s, int output);

LightCone light_cone(const Skeleton &s, int output);

/// Maximum over outputs of the light-cone input count.
int light_cone_size(const Skeleton &s);

/// Scans outputs in ascending order and keeps each one whose light-cone
/// inputs are disjoint from those already kept, stopping after m. Returns
/// fewer than m outputs when no more disjoint ones exist.
std::vector<int> greedy_disjoint(const Skeleton &s, int m);

/// True when the light-cone input sets of all listed outputs are pairwise
/// disjoint.
bool cones_disjoint(const Skeleton &s, const std::vector<int> &outputs);

} // namespace xeb
