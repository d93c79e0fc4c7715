#pragma once
/**
 * File formats: instance and solution JSON, swap traces, SVG drawings and the
 * random instance generator.
 *
 * Coordinates in an instance file are integers, JSON numbers or decimal
 * strings with at most 6 fractional digits. All coordinates of one file are
 * scaled by 10^D, D being the largest number of fractional digits present, so
 * an integer-only file is taken as is. The scaled values must stay within
 * +-2^30. Files may list colors in any order; internally red points come first
 * and file_index maps back.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nctree/errors.hpp"
#include "nctree/geom_kernel.hpp"
#include "nctree/instance.hpp"
#include "nctree/uncrosser.hpp"

namespace nctree {

using json = nlohmann::json;

class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxFractionDigits = 6;

/// Decimal value as mantissa * 10^-digits.
struct Decimal {
  std::int64_t mantissa = 0;
  int digits = 0;
};

inline Decimal parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac) || (dot != std::string_view::npos && frac.empty()))
    throw ParseError("not a decimal number: \"" + original + "\"");
  if (static_cast<int>(frac.size()) > kMaxFractionDigits)
    throw ParseError("more than 6 fractional digits: \"" + original + "\"");
  // 18 significant digits fit an int64; anything that long is far out of range anyway.
  if (whole.size() + frac.size() > 18) throw ParseError("coordinate too large: \"" + original + "\"");

  Decimal d;
  for (char c : whole) d.mantissa = d.mantissa * 10 + (c - '0');
  for (char c : frac) d.mantissa = d.mantissa * 10 + (c - '0');
  d.digits = static_cast<int>(frac.size());
  if (negative) d.mantissa = -d.mantissa;
  return d;
}

inline Decimal json_to_decimal(const json& v) {
  if (v.is_number_integer()) return Decimal{v.get<std::int64_t>(), 0};
  if (v.is_number_float()) {
    // Shortest round-trip form recovers the literal as written for any value
    // with few enough digits to be accepted.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v.get<double>());
    return parse_decimal(std::string_view(buf, res.ptr - buf));
  }
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  throw ParseError("coordinate must be a number or decimal string, got " + v.dump());
}

struct ParsedInstance {
  Instance instance;
  /// file_index[v] is the position in the file of internal vertex v.
  std::vector<int> file_index;
  /// Internal coordinates are file coordinates times scale.
  std::int64_t scale = 1;

  std::vector<int> internal_index() const {
    std::vector<int> inv(file_index.size());
    for (std::size_t v = 0; v < file_index.size(); ++v) inv[file_index[v]] = static_cast<int>(v);
    return inv;
  }
};

inline std::int64_t pow10(int e) {
  std::int64_t p = 1;
  while (e-- > 0) p *= 10;
  return p;
}

/// Throws ParseError for malformed content and the Instance errors for
/// well-formed content that is not a valid instance.
inline ParsedInstance parse_instance(const json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw ParseError("instance must be an object with a \"points\" array");
  const auto& arr = doc["points"];

  struct Raw {
    Decimal x, y;
    bool red = false;
    int f = 0;
  };
  std::vector<Raw> raw;
  int max_digits = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    const std::string where = "point " + std::to_string(i) + ": ";
    if (!p.is_object() || !p.contains("x") || !p.contains("y") || !p.contains("color"))
      throw ParseError(where + "needs x, y and color");
    Raw r;
    try {
      r.x = json_to_decimal(p["x"]);
      r.y = json_to_decimal(p["y"]);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    const auto& c = p["color"];
    if (!c.is_string() || (c != "R" && c != "B")) throw ParseError(where + "color must be \"R\" or \"B\"");
    r.red = c == "R";
    if (r.red) {
      if (!p.contains("f") || !p["f"].is_number_integer()) throw ParseError(where + "red point needs integer f");
      const auto f = p["f"].get<std::int64_t>();
      if (f < 2) throw ParseError(where + "f = " + std::to_string(f) + " must be at least 2");
      if (f > 1'000'000'000) throw ParseError(where + "f too large");
      r.f = static_cast<int>(f);
    } else if (p.contains("f")) {
      throw ParseError(where + "blue point must not carry f");
    }
    max_digits = std::max({max_digits, r.x.digits, r.y.digits});
    raw.push_back(r);
  }

  const std::int64_t scale = pow10(max_digits);
  auto scaled = [&](const Decimal& d, std::size_t i) {
    const std::int64_t factor = pow10(max_digits - d.digits);
    if (d.mantissa != 0 && std::abs(d.mantissa) > kMaxCoord / factor)
      throw ParseError("point " + std::to_string(i) + ": coordinate exceeds 2^30 after scaling by " +
                       std::to_string(scale));
    return d.mantissa * factor;
  };

  std::vector<ExactPoint> red, blue;
  std::vector<int> budgets, red_idx, blue_idx;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const ExactPoint pt{scaled(raw[i].x, i), scaled(raw[i].y, i)};
    if (raw[i].red) {
      red.push_back(pt);
      budgets.push_back(raw[i].f);
      red_idx.push_back(static_cast<int>(i));
    } else {
      blue.push_back(pt);
      blue_idx.push_back(static_cast<int>(i));
    }
  }
  std::vector<int> file_index = red_idx;
  file_index.insert(file_index.end(), blue_idx.begin(), blue_idx.end());

  try {
    Instance inst(std::move(red), std::move(budgets), std::move(blue));
    return ParsedInstance{std::move(inst), std::move(file_index), scale};
  } catch (const GeneralPositionError& e) {
    // Report the witness in file positions.
    PositionViolation v = e.violation();
    const int used = v.kind == PositionViolation::Kind::Duplicate ? 2 : 3;
    for (int k = 0; k < used; ++k) v.indices[k] = file_index[v.indices[k]];
    std::sort(v.indices.begin(), v.indices.begin() + used);
    throw GeneralPositionError("point set not in general position: " + describe(v), v);
  }
}

inline ParsedInstance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

inline json edges_to_json(std::span<const Segment> edges, std::span<const int> file_index) {
  std::vector<std::array<int, 2>> out;
  for (const auto& e : edges) {
    int a = file_index[e.a], b = file_index[e.b];
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Solution document; edges and f_prime use file positions, lengths file units.
inline json solution_to_json(const ParsedInstance& parsed, const SolveResult& result) {
  json doc;
  doc["edges"] = edges_to_json(result.tree.edges(), parsed.file_index);
  doc["total_length"] = result.trace.final_length / static_cast<double>(parsed.scale);
  doc["swap_count"] = result.trace.swaps.size();
  json fp = json::array();
  for (int v = 0; v < parsed.instance.red_count(); ++v) fp.push_back({parsed.file_index[v], result.reduced_budget[v]});
  doc["f_prime"] = fp;
  return doc;
}

/// Reads the edge list of a solution document into internal indices.
inline std::vector<Segment> parse_solution_edges(const json& doc, const ParsedInstance& parsed) {
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("solution must be an object with an \"edges\" array");
  const auto internal = parsed.internal_index();
  const int n = static_cast<int>(internal.size());
  std::vector<Segment> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of integers, got " + e.dump());
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw ParseError("invalid edge " + e.dump());
    edges.push_back(Segment{internal[a], internal[b]});
  }
  return edges;
}

inline json trace_to_json(const ParsedInstance& parsed, std::span<const Segment> initial_edges,
                          const UncrossTrace& trace) {
  const double s = static_cast<double>(parsed.scale);
  json doc;
  doc["initial_edges"] = edges_to_json(initial_edges, parsed.file_index);
  doc["initial_length"] = trace.initial_length / s;
  doc["final_length"] = trace.final_length / s;
  json swaps = json::array();
  for (const auto& rec : trace.swaps) {
    swaps.push_back({{"case", to_string(rec.case_class)},
                     {"removed", edges_to_json(rec.removed, parsed.file_index)},
                     {"added", edges_to_json(rec.added, parsed.file_index)},
                     {"length_delta", rec.length_delta / s}});
  }
  doc["swaps"] = swaps;
  return doc;
}

/// Red points as filled disks, blue points as open circles, edges as lines.
inline std::string render_svg(const Instance& inst, std::span<const Segment> edges) {
  const auto pts = inst.points();
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == 0 || pts[i].x < min_x) min_x = pts[i].x;
    if (i == 0 || pts[i].x > max_x) max_x = pts[i].x;
    if (i == 0 || pts[i].y < min_y) min_y = pts[i].y;
    if (i == 0 || pts[i].y > max_y) max_y = pts[i].y;
  }
  const double w = static_cast<double>(max_x - min_x);
  const double h = static_cast<double>(max_y - min_y);
  const double margin = std::max(0.05 * std::max(w, h), 1.0);
  const double vb_w = w + 2 * margin, vb_h = h + 2 * margin;
  constexpr double kPixels = 800.0;
  const double unit = std::max(vb_w, vb_h) / kPixels;  // viewBox units per pixel

  // y is flipped so the drawing has the usual mathematical orientation.
  auto fx = [&](const ExactPoint& p) { return static_cast<double>(p.x); };
  auto fy = [&](const ExactPoint& p) { return -static_cast<double>(p.y); };

  std::ostringstream os;
  os.precision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - margin) << ' ' << (-max_y - margin)
     << ' ' << vb_w << ' ' << vb_h << "\" width=\"" << kPixels * vb_w / std::max(vb_w, vb_h) << "\" height=\""
     << kPixels * vb_h / std::max(vb_w, vb_h) << "\">\n";
  os << "<g stroke=\"#333333\" stroke-width=\"" << 1.5 * unit << "\">\n";
  for (const auto& e : edges)
    os << "<line x1=\"" << fx(pts[e.a]) << "\" y1=\"" << fy(pts[e.a]) << "\" x2=\"" << fx(pts[e.b]) << "\" y2=\""
       << fy(pts[e.b]) << "\"/>\n";
  os << "</g>\n";
  for (int v = 0; v < inst.size(); ++v) {
    os << "<circle cx=\"" << fx(pts[v]) << "\" cy=\"" << fy(pts[v]) << "\" r=\"" << 4 * unit << "\" ";
    if (inst.is_red(v))
      os << "fill=\"#d62728\"/>\n";
    else
      os << "fill=\"white\" stroke=\"#1f77b4\" stroke-width=\"" << 1.5 * unit << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Generator

struct BudgetMode {
  enum class Kind { Uniform, Random, Equality };
  Kind kind = Kind::Equality;
  int lo = 2;  ///< uniform k, or random lower bound
  int hi = 2;  ///< random upper bound
};

/// Parses "uniform:K", "random:A..B" or "equality".
inline BudgetMode parse_budget_mode(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw ParseError("bad number in f-mode: \"" + std::string(s) + "\"");
    return v;
  };
  BudgetMode m;
  if (text == "equality") {
    m.kind = BudgetMode::Kind::Equality;
  } else if (text.starts_with("uniform:")) {
    m.kind = BudgetMode::Kind::Uniform;
    m.lo = m.hi = to_int(text.substr(8));
  } else if (text.starts_with("random:")) {
    const auto body = text.substr(7);
    const auto sep = body.find("..");
    if (sep == std::string_view::npos) throw ParseError("random f-mode needs the form random:A..B");
    m.kind = BudgetMode::Kind::Random;
    m.lo = to_int(body.substr(0, sep));
    m.hi = to_int(body.substr(sep + 2));
  } else {
    throw ParseError("unknown f-mode \"" + std::string(text) + "\"");
  }
  if (m.lo < 2 || m.hi < m.lo) throw ParseError("f-mode budgets must satisfy 2 <= A <= B");
  return m;
}

struct GenParams {
  int n_red = 0;
  int n_blue = 2;
  BudgetMode mode;
  std::int64_t bbox = 1000;
  std::uint64_t seed = 0;
};

namespace detail {

/// Uniform integer in [lo, hi] by rejection; stable across standard libraries.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

}  // namespace detail

inline constexpr int kMaxRejections = 1000;

/// Instance document with integer coordinates in [0, bbox]^2, red points first.
/// Each point is resampled until it is distinct from and not collinear with
/// the earlier ones; throws Error after kMaxRejections tries for one point.
inline json generate_instance(const GenParams& p) {
  if (p.n_red < 0) throw ParseError("n-red must be non-negative");
  if (p.n_blue < 2) throw ParseError("n-blue must be at least 2");
  if (p.bbox < 1 || p.bbox > kMaxCoord) throw ParseError("bbox must lie in [1, 2^30]");
  if (p.mode.kind == BudgetMode::Kind::Equality && p.n_red == 0 && p.n_blue != 2)
    throw ParseError("equality mode without red points needs exactly 2 blue points");

  std::mt19937_64 rng(p.seed);
  const int n = p.n_red + p.n_blue;
  std::vector<ExactPoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRejections && !placed; ++attempt) {
      const ExactPoint c{detail::draw(rng, 0, p.bbox), detail::draw(rng, 0, p.bbox)};
      bool ok = true;
      for (std::size_t a = 0; a < pts.size() && ok; ++a) {
        if (pts[a] == c) ok = false;
        for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
          if (orientation(pts[a], pts[b], c) == 0) ok = false;
      }
      if (ok) {
        pts.push_back(c);
        placed = true;
      }
    }
    if (!placed)
      throw Error("gave up placing point " + std::to_string(i) + " after " + std::to_string(kMaxRejections) +
                  " rejection rounds; bbox too small");
  }

  std::vector<int> f(p.n_red, p.mode.lo);
  switch (p.mode.kind) {
    case BudgetMode::Kind::Uniform: break;
    case BudgetMode::Kind::Random:
      for (int& v : f) v = static_cast<int>(detail::draw(rng, p.mode.lo, p.mode.hi));
      break;
    case BudgetMode::Kind::Equality:
      std::fill(f.begin(), f.end(), 2);
      for (int unit = 0; unit < p.n_blue - 2; ++unit) ++f[detail::draw(rng, 0, p.n_red - 1)];
      break;
  }

  json points = json::array();
  for (int i = 0; i < n; ++i) {
    json pt = {{"x", pts[i].x}, {"y", pts[i].y}, {"color", i < p.n_red ? "R" : "B"}};
    if (i < p.n_red) pt["f"] = f[i];
    points.push_back(pt);
  }
  return json{{"points", points}};
}

}  // namespace nctree
