#pragma once
/**
 * Solver-independent checks.
 *
 * verify() works from a raw edge list with nothing but the kernel predicates.
 * The oracle enumerates every labelled tree of a small instance through its
 * own Pruefer decoder and keeps the ones whose leaves are exactly the blue
 * points and whose red degrees fit the budgets.
 */

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nctree/errors.hpp"
#include "nctree/geom_kernel.hpp"
#include "nctree/instance.hpp"
#include "nctree/tree_builder.hpp"

namespace nctree {

struct DegreeViolation {
  int vertex = 0;
  int degree = 0;
  int bound = 0;

  friend bool operator==(const DegreeViolation&, const DegreeViolation&) = default;
};

struct VerifyReport {
  bool is_spanning_tree = false;
  std::vector<std::pair<Segment, Segment>> crossing_pairs;
  bool leaf_set_equals_B = false;
  std::vector<DegreeViolation> degree_violations;
  /// Only meaningful in the equality case; true otherwise.
  bool equality_degrees_ok = true;

  bool passed() const {
    return is_spanning_tree && crossing_pairs.empty() && leaf_set_equals_B && degree_violations.empty() &&
           equality_degrees_ok;
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

inline VerifyReport verify(const Instance& inst, std::span<const Segment> edges) {
  VerifyReport r;
  const int n = inst.size();
  const auto pts = inst.points();

  bool indices_ok = true;
  for (const auto& e : edges)
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.a == e.b) indices_ok = false;

  // (a) n - 1 edges, no cycle, hence connected.
  if (indices_ok && n >= 1 && static_cast<int>(edges.size()) == n - 1) {
    detail::DisjointSets dsu(n);
    bool acyclic = true;
    for (const auto& e : edges) acyclic = dsu.unite(e.a, e.b) && acyclic;
    r.is_spanning_tree = acyclic;
  }
  if (!indices_ok) return r;

  // (b) all-pairs crossing scan.
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (properly_cross(edges[i], edges[j], pts)) r.crossing_pairs.emplace_back(edges[i], edges[j]);

  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
  }

  // (c) leaves are exactly the blue points.
  r.leaf_set_equals_B = true;
  for (int v = 0; v < n; ++v)
    if ((degree[v] == 1) != inst.is_blue(v)) r.leaf_set_equals_B = false;

  // (d) 2 <= deg <= f on red points; (e) deg == f in the equality case.
  const bool equality = check_feasibility(inst).status == Feasibility::Equality;
  for (int v = 0; v < inst.red_count(); ++v) {
    const int f = inst.budget(v);
    if (degree[v] < 2 || degree[v] > f) r.degree_violations.push_back({v, degree[v], f});
    if (equality && degree[v] != f) r.equality_degrees_ok = false;
  }
  return r;
}

inline VerifyReport verify(const Instance& inst, const GeoTree& t) { return verify(inst, t.edges()); }

/// Sorted, normalized edge list; the canonical form for set comparisons.
using EdgeSet = std::vector<Segment>;

inline EdgeSet canonical_edges(std::span<const Segment> edges) {
  EdgeSet out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.normalized());
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleResult {
  std::vector<EdgeSet> crossing;
  std::vector<EdgeSet> non_crossing;

  std::size_t feasible_count() const { return crossing.size() + non_crossing.size(); }

  bool contains_non_crossing(std::span<const Segment> edges) const {
    const auto key = canonical_edges(edges);
    return std::find(non_crossing.begin(), non_crossing.end(), key) != non_crossing.end();
  }
};

inline constexpr int kOracleMaxVertices = 9;

namespace detail {

/// Quadratic Pruefer decoding, kept separate from the tree builder.
inline EdgeSet naive_prufer_decode(std::span<const int> seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  EdgeSet edges;
  for (int v : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(Segment{leaf, v}.normalized());
    --degree[leaf];
    --degree[v];
  }
  int u = -1;
  for (int w = 0; w < n; ++w) {
    if (degree[w] != 1) continue;
    if (u < 0) {
      u = w;
    } else {
      edges.push_back(Segment{u, w});
      break;
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/**
 * All labelled spanning trees whose leaf set is the blue set and whose red
 * degrees lie in [2, f], split by whether they cross.
 *
 * A vertex occurs deg - 1 times in a Pruefer sequence, so a blue label in the
 * sequence would make a blue vertex internal. The enumeration therefore walks
 * sequences over red labels only and keeps those in which every red label
 * occurs between 1 and f - 1 times; this is the same set as filtering all
 * n^(n-2) sequences. Such a tree always meets the equality identity for the
 * reduced budget f' = deg, so it is admissible for some valid f' <= f.
 */
inline OracleResult enumerate_feasible_trees(const Instance& inst) {
  const int n = inst.size();
  if (n > kOracleMaxVertices)
    throw OracleSizeExceeded("oracle supports at most " + std::to_string(kOracleMaxVertices) + " points, got " +
                             std::to_string(n));
  OracleResult result;
  if (n < 2) return result;

  const int red = inst.red_count();
  const auto pts = inst.points();
  auto classify = [&](EdgeSet edges) {
    bool crosses = false;
    for (std::size_t i = 0; i < edges.size() && !crosses; ++i)
      for (std::size_t j = i + 1; j < edges.size() && !crosses; ++j)
        crosses = properly_cross(edges[i], edges[j], pts);
    (crosses ? result.crossing : result.non_crossing).push_back(std::move(edges));
  };

  const int len = n - 2;
  if (len == 0) {
    // Two vertices: the single edge, admissible only if both are blue.
    if (red == 0) classify(detail::naive_prufer_decode({}, n));
    return result;
  }
  if (red == 0) return result;

  std::vector<int> seq(len, 0);
  std::vector<int> count(red, 0);
  count[0] = len;
  while (true) {
    bool ok = true;
    for (int v = 0; v < red && ok; ++v) ok = count[v] >= 1 && count[v] <= inst.budget(v) - 1;
    if (ok) classify(detail::naive_prufer_decode(seq, n));

    // Odometer increment over red labels.
    int pos = len - 1;
    while (pos >= 0 && seq[pos] == red - 1) {
      --count[seq[pos]];
      seq[pos] = 0;
      ++count[0];
      --pos;
    }
    if (pos < 0) break;
    --count[seq[pos]];
    ++seq[pos];
    ++count[seq[pos]];
  }
  return result;
}

/// True iff some admissible tree is non-crossing. Throws InfeasibleInstance
/// for infeasible input and OracleSizeExceeded above the size cap.
inline bool oracle_check(const Instance& inst) {
  const auto report = check_feasibility(inst);
  if (!report.feasible())
    throw InfeasibleInstance(std::string("oracle requires a feasible instance, got ") + to_string(report.status));
  return !enumerate_feasible_trees(inst).non_crossing.empty();
}

}  // namespace nctree
