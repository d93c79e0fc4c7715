#pragma once
/**
 * Command implementations behind the nctree executable. Each returns the
 * process exit code; the codes are stable:
 *
 *   0  success
 *   1  usage error or generator gave up
 *   2  parse error (malformed file, bad values, coordinate out of range)
 *   3  infeasible instance
 *   4  point set not in general position
 *   5  swap cap exceeded
 *   6  verification failed
 *   7  oracle size cap exceeded
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nctree/io.hpp"
#include "nctree/uncrosser.hpp"
#include "nctree/verify_oracle.hpp"

namespace nctree::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInfeasible = 3,
  kGeneralPosition = 4,
  kIterationCap = 5,
  kVerifyFailed = 6,
  kOracleSize = 7,
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

namespace detail {

/// Parses an instance file, mapping failures to exit codes.
inline std::optional<ParsedInstance> load_instance(const std::string& path, std::ostream& err, int& code) {
  try {
    return parse_instance_text(read_file(path));
  } catch (const GeneralPositionError& e) {
    err << "error: " << e.what() << "\n";
    code = kGeneralPosition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kParse;
  }
  return std::nullopt;
}

inline bool report_feasibility(const FeasibilityReport& r, std::ostream& err) {
  if (r.feasible()) return true;
  err << "error: infeasible instance (" << to_string(r.status) << "): " << r.blue_count
      << " blue points, but the blue count must lie in [2, " << r.bound << "] where " << r.bound
      << " = sum over red of (f - 2) + 2\n";
  return false;
}

inline void print_report(const VerifyReport& r, std::ostream& out) {
  out << "spanning tree: " << (r.is_spanning_tree ? "yes" : "no") << "\n";
  out << "crossing pairs: " << r.crossing_pairs.size() << "\n";
  out << "leaf set equals blue set: " << (r.leaf_set_equals_B ? "yes" : "no") << "\n";
  out << "degree violations: " << r.degree_violations.size() << "\n";
  for (const auto& v : r.degree_violations)
    out << "  vertex " << v.vertex << ": degree " << v.degree << ", budget " << v.bound << "\n";
  out << "equality degrees: " << (r.equality_degrees_ok ? "ok" : "violated") << "\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace detail

struct SolveOptions {
  std::string input;
  std::string output;
  std::optional<std::string> svg;
  std::optional<std::string> trace;
  std::optional<std::int64_t> max_iters;
  std::optional<int> uniform_degree;
};

inline int cmd_solve(const SolveOptions& opt, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  int code = kOk;
  auto parsed = detail::load_instance(opt.input, err, code);
  if (!parsed) return code;

  try {
    if (opt.uniform_degree) parsed->instance = uniform_instance(parsed->instance, *opt.uniform_degree);
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  const Instance& inst = parsed->instance;
  if (!detail::report_feasibility(check_feasibility(inst), err)) return kInfeasible;

  SolveResult result;
  std::vector<Segment> initial_edges;
  try {
    // Built separately only so the trace can carry the starting tree.
    if (opt.trace) {
      const auto start = initial_geo_tree(inst, reduce_budget(inst));
      initial_edges.assign(start.edges().begin(), start.edges().end());
    }
    result = solve(inst, opt.max_iters);
  } catch (const IterationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kIterationCap;
  }

  const auto report = verify(inst, result.tree);
  if (!report.passed()) {
    err << "error: internal verification failed\n";
    detail::print_report(report, err);
    return kVerifyFailed;
  }

  try {
    write_file(opt.output, solution_to_json(*parsed, result).dump(2) + "\n");
    if (opt.svg) write_file(*opt.svg, render_svg(inst, result.tree.edges()));
    if (opt.trace) write_file(*opt.trace, trace_to_json(*parsed, initial_edges, result.trace).dump(1) + "\n");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << "solved: " << inst.size() << " points, " << result.trace.swaps.size() << " swaps, total length "
      << result.trace.final_length / static_cast<double>(parsed->scale) << "\n";
  return kOk;
}

inline int cmd_gen(const GenParams& params, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    out << generate_instance(params).dump(2) << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

inline int cmd_verify(const std::string& input, const std::string& tree_path, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
  int code = kOk;
  auto parsed = detail::load_instance(input, err, code);
  if (!parsed) return code;
  std::vector<Segment> edges;
  try {
    json doc;
    try {
      doc = json::parse(read_file(tree_path));
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    edges = parse_solution_edges(doc, *parsed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  const auto report = verify(parsed->instance, edges);
  detail::print_report(report, out);
  return report.passed() ? kOk : kVerifyFailed;
}

inline int cmd_oracle(const std::string& input, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  int code = kOk;
  auto parsed = detail::load_instance(input, err, code);
  if (!parsed) return code;
  const Instance& inst = parsed->instance;
  if (inst.size() > kOracleMaxVertices) {
    err << "error: oracle supports at most " << kOracleMaxVertices << " points, instance has " << inst.size() << "\n";
    return kOracleSize;
  }
  if (!detail::report_feasibility(check_feasibility(inst), err)) return kInfeasible;

  const auto trees = enumerate_feasible_trees(inst);
  bool member = false;
  try {
    const auto result = solve(inst);
    member = trees.contains_non_crossing(result.tree.edges());
  } catch (const IterationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kIterationCap;
  }
  out << trees.feasible_count() << " feasible / " << trees.non_crossing.size()
      << " non-crossing / solver output member: " << (member ? "yes" : "no") << "\n";
  return !trees.non_crossing.empty() && member ? kOk : kVerifyFailed;
}

}  // namespace nctree::cli
