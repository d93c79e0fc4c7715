#pragma once
/**
 * Bicolored instance with per-red-point degree budgets.
 *
 * Vertex numbering is fixed: red points occupy indices [0, red_count()) in
 * the order given, blue points follow in the order given.
 */

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nctree/errors.hpp"
#include "nctree/geom_kernel.hpp"

namespace nctree {

enum class Color : std::uint8_t { Red, Blue };

class Instance {
 public:
  /// Throws InvalidInstance for a budget below 2, a size mismatch or an
  /// out-of-range coordinate, and GeneralPositionError when the combined point
  /// set is not in general position. Fewer than two blue points is accepted
  /// here and reported by check_feasibility.
  Instance(std::vector<ExactPoint> red, std::vector<int> budgets, std::vector<ExactPoint> blue)
      : red_count_(static_cast<int>(red.size())), budgets_(std::move(budgets)) {
    if (budgets_.size() != red.size())
      throw InvalidInstance("budget count " + std::to_string(budgets_.size()) +
                            " does not match red point count " + std::to_string(red.size()));
    for (std::size_t i = 0; i < budgets_.size(); ++i)
      if (budgets_[i] < 2)
        throw InvalidInstance("red point " + std::to_string(i) + " has budget " +
                              std::to_string(budgets_[i]) + " < 2");
    points_ = std::move(red);
    points_.insert(points_.end(), blue.begin(), blue.end());
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (!in_coord_range(points_[i]))
        throw InvalidInstance("point " + std::to_string(i) + " exceeds coordinate bound 2^30");
    if (auto v = validate_general_position(points_))
      throw GeneralPositionError("point set not in general position: " + describe(*v), *v);
  }

  int size() const { return static_cast<int>(points_.size()); }
  int red_count() const { return red_count_; }
  int blue_count() const { return size() - red_count_; }

  bool is_red(int v) const { return v < red_count_; }
  bool is_blue(int v) const { return v >= red_count_; }
  Color color(int v) const { return is_red(v) ? Color::Red : Color::Blue; }

  std::span<const ExactPoint> points() const { return points_; }
  const ExactPoint& point(int v) const { return points_[v]; }

  /// Budget of a red vertex. Blue vertices have none.
  int budget(int v) const {
    assert(is_red(v));
    return budgets_[v];
  }
  std::span<const int> budgets() const { return budgets_; }

  std::vector<Color> colors() const {
    std::vector<Color> c(points_.size(), Color::Blue);
    std::fill_n(c.begin(), red_count_, Color::Red);
    return c;
  }

 private:
  std::vector<ExactPoint> points_;
  int red_count_ = 0;
  std::vector<int> budgets_;
};

enum class Feasibility { InfeasibleLow, Equality, StrictlyFeasible, InfeasibleHigh };

inline const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::InfeasibleLow: return "InfeasibleLow";
    case Feasibility::Equality: return "Equality";
    case Feasibility::StrictlyFeasible: return "StrictlyFeasible";
    case Feasibility::InfeasibleHigh: return "InfeasibleHigh";
  }
  return "?";
}

struct FeasibilityReport {
  int blue_count = 0;
  /// sum over red of (f - 2), plus 2: the largest admissible blue count.
  std::int64_t bound = 2;
  /// bound - blue_count.
  std::int64_t slack = 0;
  Feasibility status = Feasibility::Equality;

  bool feasible() const {
    return status == Feasibility::Equality || status == Feasibility::StrictlyFeasible;
  }
};

inline std::int64_t leaf_bound(std::span<const int> budgets) {
  std::int64_t bound = 2;
  for (int f : budgets) bound += f - 2;
  return bound;
}

inline FeasibilityReport check_feasibility(const Instance& inst) {
  FeasibilityReport r;
  r.blue_count = inst.blue_count();
  r.bound = leaf_bound(inst.budgets());
  r.slack = r.bound - r.blue_count;
  if (r.blue_count < 2)
    r.status = Feasibility::InfeasibleLow;
  else if (r.slack < 0)
    r.status = Feasibility::InfeasibleHigh;
  else if (r.slack == 0)
    r.status = Feasibility::Equality;
  else
    r.status = Feasibility::StrictlyFeasible;
  return r;
}

/**
 * Lowers budgets until the blue count meets the bound exactly.
 *
 * The result equals repeatedly decrementing the currently largest budget
 * (lowest index on ties) one unit at a time. That process sweeps a water level
 * down from the top, so it is computed directly: every budget is clipped at a
 * level L, then the lowest-indexed points sitting at L take the remaining
 * decrements.
 */
inline std::vector<int> reduce_budget(const Instance& inst) {
  const auto report = check_feasibility(inst);
  if (!report.feasible())
    throw InfeasibleInstance(std::string("cannot reduce budgets of a ") + to_string(report.status) +
                             " instance");

  std::vector<int> f(inst.budgets().begin(), inst.budgets().end());
  std::int64_t excess = report.slack;
  if (excess == 0 || f.empty()) return f;

  auto removed_at = [&](std::int64_t level) {
    std::int64_t s = 0;
    for (int b : f) s += std::max<std::int64_t>(0, b - level);
    return s;
  };
  // Smallest level whose clipping removes no more than the excess.
  std::int64_t lo = 2, hi = *std::max_element(f.begin(), f.end());
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (removed_at(mid) <= excess)
      hi = mid;
    else
      lo = mid + 1;
  }
  const std::int64_t level = lo;
  excess -= removed_at(level);
  for (int& b : f) b = static_cast<int>(std::min<std::int64_t>(b, level));
  for (int& b : f) {
    if (excess == 0) break;
    if (b == level) {
      --b;
      --excess;
    }
  }
  assert(excess == 0);
  return f;
}

/// Instance with every red budget equal to k.
inline Instance uniform_instance(std::vector<ExactPoint> red, std::vector<ExactPoint> blue, int k) {
  if (k < 2) throw InvalidInstance("uniform degree k = " + std::to_string(k) + " must be at least 2");
  std::vector<int> budgets(red.size(), k);
  return Instance(std::move(red), std::move(budgets), std::move(blue));
}

/// Same points as inst, every red budget replaced by k.
inline Instance uniform_instance(const Instance& inst, int k) {
  const auto pts = inst.points();
  return uniform_instance({pts.begin(), pts.begin() + inst.red_count()},
                          {pts.begin() + inst.red_count(), pts.end()}, k);
}

}  // namespace nctree
