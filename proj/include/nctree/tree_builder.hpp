#pragma once
/**
 * Spanning trees with prescribed degrees.
 *
 * A degree sequence with sum 2n - 2 is realized by writing vertex i into a
 * Pruefer sequence d_i - 1 times (ascending index) and decoding it. The result
 * is deterministic and every degree is met exactly.
 */

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nctree/geom_kernel.hpp"
#include "nctree/instance.hpp"

namespace nctree {

/// Tree over vertices 0..n-1 as an edge list plus adjacency lists kept in sync.
/// Edges are stored normalized (a < b).
class GeoTree {
 public:
  GeoTree() = default;
  explicit GeoTree(int n) : adjacency_(n) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::span<const Segment> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  std::vector<int> degrees() const {
    std::vector<int> d(adjacency_.size());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = static_cast<int>(adjacency_[v].size());
    return d;
  }

  bool has_edge(int a, int b) const {
    const auto& adj = adjacency_[a];
    return std::find(adj.begin(), adj.end(), b) != adj.end();
  }

  void add_edge(int a, int b) {
    assert(a != b && !has_edge(a, b));
    edges_.push_back(Segment{a, b}.normalized());
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }

  void remove_edge(int a, int b) {
    const Segment e = Segment{a, b}.normalized();
    auto it = std::find(edges_.begin(), edges_.end(), e);
    assert(it != edges_.end());
    *it = edges_.back();
    edges_.pop_back();
    erase_neighbor(a, b);
    erase_neighbor(b, a);
  }

  /// Edge list sorted lexicographically; handy for comparisons and output.
  std::vector<Segment> sorted_edges() const {
    std::vector<Segment> e(edges_.begin(), edges_.end());
    std::sort(e.begin(), e.end());
    return e;
  }

 private:
  void erase_neighbor(int v, int w) {
    auto& adj = adjacency_[v];
    auto it = std::find(adj.begin(), adj.end(), w);
    assert(it != adj.end());
    adj.erase(it);
  }

  std::vector<Segment> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Standard Pruefer decoding with a min-heap of current leaves.
inline GeoTree prufer_decode(std::span<const int> sequence, int n) {
  if (n < 2) throw std::invalid_argument("a tree needs at least 2 vertices");
  if (static_cast<int>(sequence.size()) != n - 2)
    throw std::invalid_argument("Pruefer sequence for " + std::to_string(n) + " vertices must have length " +
                                std::to_string(n - 2));
  std::vector<int> remaining(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw std::invalid_argument("Pruefer label out of range: " + std::to_string(v));
    ++remaining[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);

  GeoTree tree(n);
  for (int v : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    tree.add_edge(leaf, v);
    if (--remaining[v] == 1) leaves.push(v);
  }
  const int u = leaves.top();
  leaves.pop();
  const int w = leaves.top();
  tree.add_edge(u, w);
  return tree;
}

/// Inverse of prufer_decode.
inline std::vector<int> prufer_encode(const GeoTree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> degree = tree.degrees();
  std::vector<char> gone(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<int> sequence;
  sequence.reserve(n > 2 ? n - 2 : 0);
  while (static_cast<int>(sequence.size()) < n - 2) {
    const int leaf = leaves.top();
    leaves.pop();
    gone[leaf] = 1;
    for (int w : tree.neighbors(leaf)) {
      if (gone[w]) continue;
      sequence.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
      break;
    }
  }
  return sequence;
}

/// Tree with deg(v) == degrees[v] for every v. Requires n >= 2, every
/// degree >= 1 and a degree sum of 2n - 2.
inline GeoTree tree_from_degrees(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 2) throw std::invalid_argument("a tree needs at least 2 vertices");
  long long sum = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degree sequence contains a value below 1");
    sum += d;
  }
  if (sum != 2LL * n - 2)
    throw std::invalid_argument("degree sum " + std::to_string(sum) + " != 2n - 2 = " + std::to_string(2 * n - 2));

  std::vector<int> sequence;
  sequence.reserve(n - 2);
  for (int v = 0; v < n; ++v) sequence.insert(sequence.end(), degrees[v] - 1, v);
  return prufer_decode(sequence, n);
}

/// Tree on all instance vertices with red degrees taken from reduced_budget
/// and every blue vertex a leaf. Crossings are expected; the uncrosser removes them.
inline GeoTree initial_geo_tree(const Instance& inst, std::span<const int> reduced_budget) {
  if (static_cast<int>(reduced_budget.size()) != inst.red_count())
    throw std::invalid_argument("reduced budget size does not match red count");
  if (leaf_bound(reduced_budget) != inst.blue_count())
    throw std::invalid_argument("reduced budget is not in the equality case");
  std::vector<int> degrees(inst.size(), 1);
  std::copy(reduced_budget.begin(), reduced_budget.end(), degrees.begin());
  return tree_from_degrees(degrees);
}

}  // namespace nctree
