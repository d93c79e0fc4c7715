#pragma once
// Helpers shared by the unit tests.

#include <cstdint>
#include <filesystem>
#include <random>
#include <unistd.h>
#include <string>
#include <vector>

#include "nctree/io.hpp"
#include "nctree/nctree.hpp"

namespace nctree::test {

/// Points (i, i^2) lie on a parabola, so no three are collinear.
inline std::vector<ExactPoint> parabola(int count, int offset = 0) {
  std::vector<ExactPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back({i + offset, (i + offset) * (i + offset)});
  return pts;
}

inline ParsedInstance random_instance(int n_red, int n_blue, const BudgetMode& mode, std::uint64_t seed,
                                      std::int64_t bbox = 100000) {
  GenParams p;
  p.n_red = n_red;
  p.n_blue = n_blue;
  p.mode = mode;
  p.bbox = bbox;
  p.seed = seed;
  return parse_instance(generate_instance(p));
}

/// Random feasible instance with n_red in [0, max_red]; budgets chosen so the
/// blue count fits.
inline ParsedInstance random_feasible(std::mt19937_64& rng, int max_red, int max_blue) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n_red = pick(1, max_red);
  const int k = pick(2, 5);
  const int bound = (k - 2) * n_red + 2;
  const int n_blue = pick(2, std::max(2, std::min(bound, max_blue)));
  BudgetMode mode;
  if (n_blue > bound) {
    mode.kind = BudgetMode::Kind::Equality;
  } else {
    mode.kind = BudgetMode::Kind::Uniform;
    mode.lo = mode.hi = k;
  }
  return random_instance(n_red, n_blue, mode, rng());
}

/// Random labelled tree on n vertices from a uniform Pruefer sequence.
inline GeoTree random_tree(int n, std::mt19937_64& rng) {
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
  return prufer_decode(seq, n);
}

/// True iff the edge list spans 0..n-1 as a tree (edge count plus BFS).
inline bool is_spanning_tree(std::span<const Segment> edges, int n) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("nctree_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace nctree::test
