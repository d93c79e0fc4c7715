#pragma once
/**
 * Crossing removal by degree-preserving edge swaps.
 *
 * Blue vertices are leaves throughout, so a crossing pair has zero, one or two
 * blue endpoints (never both blue endpoints on one edge). Each kind has a
 * reconnection of the same four vertices that keeps the graph a spanning tree,
 * keeps every degree and is strictly shorter, by the triangle inequality at the
 * crossing point. Total length therefore drops with every swap and the loop
 * terminates. No length is ever compared to pick a move.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nctree/errors.hpp"
#include "nctree/geom_kernel.hpp"
#include "nctree/instance.hpp"
#include "nctree/tree_builder.hpp"

namespace nctree {

/// Blue endpoint pattern of a crossing pair.
enum class CrossingCase {
  RRRR,  ///< four red endpoints
  RRRB,  ///< exactly one blue endpoint
  RBRB,  ///< one blue endpoint on each edge
};

inline const char* to_string(CrossingCase c) {
  switch (c) {
    case CrossingCase::RRRR: return "RRRR";
    case CrossingCase::RRRB: return "RRRB";
    case CrossingCase::RBRB: return "RBRB";
  }
  return "?";
}

struct CrossingEvent {
  Segment e1;
  Segment e2;
  CrossingCase case_class = CrossingCase::RRRR;
};

struct SwapRecord {
  std::array<Segment, 2> removed;
  std::array<Segment, 2> added;
  CrossingCase case_class = CrossingCase::RRRR;
  double length_delta = 0.0;
};

struct UncrossTrace {
  std::vector<SwapRecord> swaps;
  double initial_length = 0.0;
  double final_length = 0.0;
};

/// Swap cap used when none is given: 10 n^3.
inline std::int64_t default_max_iters(int n) {
  const std::int64_t m = n;
  return 10 * m * m * m;
}

/// Throws std::logic_error for two blue endpoints on one edge, which cannot
/// occur while blue vertices are leaves of a tree with a red vertex.
inline CrossingCase classify_crossing(const Segment& e1, const Segment& e2, std::span<const Color> colors) {
  auto blue = [&](int v) { return colors[v] == Color::Blue ? 1 : 0; };
  const int b1 = blue(e1.a) + blue(e1.b);
  const int b2 = blue(e2.a) + blue(e2.b);
  if (b1 == 0 && b2 == 0) return CrossingCase::RRRR;
  if (b1 + b2 == 1) return CrossingCase::RRRB;
  if (b1 == 1 && b2 == 1) return CrossingCase::RBRB;
  throw std::logic_error("crossing edge with two blue endpoints");
}

/// First properly crossing pair in lexicographic order of (sorted edge, sorted
/// edge) pairs, or nullopt when the tree is non-crossing.
inline std::optional<CrossingEvent> find_crossing(const GeoTree& t, std::span<const ExactPoint> pts,
                                                  std::span<const Color> colors) {
  const auto edges = t.sorted_edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (properly_cross(edges[i], edges[j], pts))
        return CrossingEvent{edges[i], edges[j], classify_crossing(edges[i], edges[j], colors)};
  return std::nullopt;
}

/// Component label (0, 1 or 2) of every vertex of t minus edges e1 and e2.
inline std::vector<int> component_split(const GeoTree& t, const Segment& e1, const Segment& e2) {
  const Segment r1 = e1.normalized();
  const Segment r2 = e2.normalized();
  const int n = t.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbors(v)) {
        if (label[w] != -1) continue;
        const Segment e = Segment{v, w}.normalized();
        if (e == r1 || e == r2) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  if (next != 3) throw std::logic_error("removing two tree edges left " + std::to_string(next) + " components");
  return label;
}

namespace detail {

/// True iff adding edges (a1,b1) and (a2,b2) joins the three labelled
/// components into one tree.
inline bool reconnects(std::span<const int> label, int a1, int b1, int a2, int b2) {
  const int x1 = label[a1], y1 = label[b1];
  const int x2 = label[a2], y2 = label[b2];
  if (x1 == y1 || x2 == y2) return false;
  return std::minmax(x1, y1) != std::minmax(x2, y2);
}

}  // namespace detail

/// Replaces the crossing pair of ev by its shorter reconnection. Degrees and
/// the spanning-tree property are preserved.
inline SwapRecord apply_swap(GeoTree& t, const CrossingEvent& ev, std::span<const ExactPoint> pts,
                             std::span<const Color> colors) {
  auto blue = [&](int v) { return colors[v] == Color::Blue; };
  const auto label = component_split(t, ev.e1, ev.e2);

  std::array<Segment, 2> added;
  switch (ev.case_class) {
    case CrossingCase::RRRR: {
      const int s = ev.e1.a, tt = ev.e1.b, u = ev.e2.a, v = ev.e2.b;
      if (detail::reconnects(label, s, u, v, tt))
        added = {Segment{s, u}, Segment{v, tt}};
      else if (detail::reconnects(label, s, v, u, tt))
        added = {Segment{s, v}, Segment{u, tt}};
      else
        throw std::logic_error("no reconnection of a red crossing pair yields a tree");
      break;
    }
    case CrossingCase::RRRB: {
      // Name the edge with the blue leaf (u, x) and the all-red edge (s, t).
      const bool first_has_blue = blue(ev.e1.a) || blue(ev.e1.b);
      const Segment red_edge = first_has_blue ? ev.e2 : ev.e1;
      const Segment leaf_edge = first_has_blue ? ev.e1 : ev.e2;
      const int x = blue(leaf_edge.a) ? leaf_edge.a : leaf_edge.b;
      const int u = leaf_edge.a == x ? leaf_edge.b : leaf_edge.a;
      const int s = red_edge.a, tt = red_edge.b;
      if (label[u] == label[tt])
        added = {Segment{s, u}, Segment{tt, x}};
      else
        added = {Segment{u, tt}, Segment{s, x}};
      if (!detail::reconnects(label, added[0].a, added[0].b, added[1].a, added[1].b))
        throw std::logic_error("leaf reconnection does not yield a tree");
      break;
    }
    case CrossingCase::RBRB: {
      const int y = blue(ev.e1.a) ? ev.e1.a : ev.e1.b;
      const int s = ev.e1.a == y ? ev.e1.b : ev.e1.a;
      const int x = blue(ev.e2.a) ? ev.e2.a : ev.e2.b;
      const int u = ev.e2.a == x ? ev.e2.b : ev.e2.a;
      added = {Segment{s, x}, Segment{u, y}};
      if (!detail::reconnects(label, s, x, u, y))
        throw std::logic_error("two-leaf reconnection does not yield a tree");
      break;
    }
  }

  SwapRecord rec;
  rec.removed = {ev.e1.normalized(), ev.e2.normalized()};
  rec.added = {added[0].normalized(), added[1].normalized()};
  rec.case_class = ev.case_class;
  rec.length_delta = euclid_length(rec.added[0], pts) + euclid_length(rec.added[1], pts) -
                     euclid_length(rec.removed[0], pts) - euclid_length(rec.removed[1], pts);

  t.remove_edge(rec.removed[0].a, rec.removed[0].b);
  t.remove_edge(rec.removed[1].a, rec.removed[1].b);
  t.add_edge(rec.added[0].a, rec.added[0].b);
  t.add_edge(rec.added[1].a, rec.added[1].b);
  return rec;
}

namespace detail {

/// Set of properly crossing edge pairs, updated per swap in O(m) instead of
/// rescanning all pairs. Its minimum is exactly what find_crossing returns.
class CrossingIndex {
 public:
  CrossingIndex(const GeoTree& t, std::span<const ExactPoint> pts) : pts_(pts) {
    const auto edges = t.sorted_edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (properly_cross(edges[i], edges[j], pts_)) insert(edges[i], edges[j]);
  }

  bool empty() const { return pairs_.empty(); }
  const std::pair<Segment, Segment>& first() const { return *pairs_.begin(); }

  void erase_edge(const Segment& e) {
    auto it = partners_.find(e);
    if (it == partners_.end()) return;
    for (const auto& p : it->second) {
      pairs_.erase(std::minmax(e, p));
      partners_[p].erase(e);
    }
    partners_.erase(e);
  }

  /// Call after e is already part of t.
  void insert_edge(const GeoTree& t, const Segment& e) {
    for (const auto& other : t.edges())
      if (other != e && properly_cross(e, other, pts_)) insert(e, other);
  }

 private:
  void insert(const Segment& a, const Segment& b) {
    pairs_.insert(std::minmax(a, b));
    partners_[a].insert(b);
    partners_[b].insert(a);
  }

  std::span<const ExactPoint> pts_;
  std::set<std::pair<Segment, Segment>> pairs_;
  std::map<Segment, std::set<Segment>> partners_;
};

}  // namespace detail

/// Swaps the first crossing pair until none remain. Throws
/// IterationCapExceeded when crossings persist after max_iters swaps.
inline UncrossTrace uncross(GeoTree& t, std::span<const ExactPoint> pts, std::span<const Color> colors,
                            std::int64_t max_iters) {
  UncrossTrace trace;
  trace.initial_length = total_length(t.edges(), pts);
  detail::CrossingIndex index(t, pts);
  while (!index.empty()) {
    if (static_cast<std::int64_t>(trace.swaps.size()) >= max_iters)
      throw IterationCapExceeded("crossings remain after " + std::to_string(max_iters) + " swaps");
    const auto [e1, e2] = index.first();
    const CrossingEvent ev{e1, e2, classify_crossing(e1, e2, colors)};
    const SwapRecord rec = apply_swap(t, ev, pts, colors);
    for (const auto& r : rec.removed) index.erase_edge(r);
    for (const auto& a : rec.added) index.insert_edge(t, a);
    trace.swaps.push_back(rec);
  }
  trace.final_length = total_length(t.edges(), pts);
  return trace;
}

struct SolveResult {
  GeoTree tree;
  UncrossTrace trace;
  /// Reduced red budgets; red vertex i ends with degree reduced_budget[i].
  std::vector<int> reduced_budget;
  FeasibilityReport feasibility;
};

/// Reduce budgets, build the degree-exact tree, then uncross it. The result is
/// non-crossing, its leaves are exactly the blue points and every red degree
/// lies in [2, f]; in the equality case every red degree equals f.
inline SolveResult solve(const Instance& inst, std::optional<std::int64_t> max_iters = std::nullopt) {
  SolveResult result;
  result.feasibility = check_feasibility(inst);
  if (!result.feasibility.feasible())
    throw InfeasibleInstance(std::string(to_string(result.feasibility.status)) + ": " +
                             std::to_string(result.feasibility.blue_count) +
                             " blue points, admissible range is [2, " + std::to_string(result.feasibility.bound) +
                             "]");
  result.reduced_budget = reduce_budget(inst);
  result.tree = initial_geo_tree(inst, result.reduced_budget);
  const auto colors = inst.colors();
  result.trace = uncross(result.tree, inst.points(), colors, max_iters.value_or(default_max_iters(inst.size())));
  return result;
}

}  // namespace nctree
