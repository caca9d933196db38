#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trimetric/error.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/report.hpp"
#include "trimetric/scan.hpp"
#include "trimetric/theorems.hpp"

namespace trimetric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct GraphSource {
  std::string input;
  std::string graph6;
  std::string family;
};

/// "A-B" or "A" into the inclusive list A..B.
inline std::vector<std::size_t> parse_range(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*(?:-\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("bad range \"" + text + "\" (expected A-B)");
  const std::size_t a = std::stoul(m[1].str());
  const std::size_t b = m[2].matched ? std::stoul(m[2].str()) : a;
  if (a > b) throw InputError("bad range \"" + text + "\": start exceeds end");
  std::vector<std::size_t> out;
  for (std::size_t i = a; i <= b; ++i) out.push_back(i);
  return out;
}

/// Reads a graph6 file (one graph per line) or an edge-list file ("n m"
/// header); the format is detected from the first non-empty line.
inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
  }
  static const std::regex header(R"(\s*\d+\s+\d+\s*\r?)");
  if (std::regex_match(first, header)) return {parse_edge_list(text)};
  std::istringstream in2(text);
  return read_graph6_stream(in2);
}

inline std::vector<Graph> load_graphs(const GraphSource& src) {
  const int given = !src.input.empty() + !src.graph6.empty() + !src.family.empty();
  if (given != 1) throw InputError("exactly one of --input, --graph6, --family is required");
  if (!src.input.empty()) return read_graph_file(src.input);
  if (!src.graph6.empty()) return {parse_graph6(src.graph6)};
  return {generate_family(src.family)};
}

inline std::size_t default_workers() {
  if (const char* env = std::getenv("TRIMETRIC_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw InputError("cannot write output file \"" + output + "\"");
  file << text;
}

/// Entry point shared by the executable and the tests. Exit codes: 0 on
/// success, 2 when a theorem check is violated, 1 on usage or input errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triameter and graph-distance invariants, with exhaustive theorem verification", "trimetric"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  std::size_t workers = default_workers();
  GraphSource src;
  std::string orders = "4-6";
  std::string ids;
  bool trees_only = false;
  bool no_timing = false;
  std::size_t ng_order = 6;
  std::string verify_kind;
  std::string range = "3-20";
  std::size_t max_witnesses = 20;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "Write the report to FILE instead of standard output");
  };
  auto add_source = [&](CLI::App* sub) {
    auto* i = sub->add_option("--input", src.input, "graph6 file (one graph per line) or edge-list file");
    auto* g = sub->add_option("--graph6", src.graph6, "Single graph6 word");
    auto* f = sub->add_option("--family", src.family, "Family spec kind:p1[,p2[,p3]], e.g. grid:4,7");
    i->excludes(g)->excludes(f);
    g->excludes(f);
  };

  auto* compute = app.add_subcommand("compute", "Triameter and invariants of one or more graphs");
  add_source(compute);
  add_common(compute);

  auto* check_cmd = app.add_subcommand("check", "Evaluate theorem checks on one or more graphs");
  add_source(check_cmd);
  add_common(check_cmd);
  check_cmd->add_option("--ids", ids, "Comma-separated theorem ids (T05 or T05_ORDER_EQUALITY); default all");

  auto* scan = app.add_subcommand("scan", "Exhaustive theorem sweep over labeled graphs");
  add_common(scan);
  scan->add_option("--orders", orders, "Order range A-B");
  scan->add_option("--ids", ids, "Comma-separated theorem ids; default all");
  scan->add_option("--workers", workers, "Worker threads (default $TRIMETRIC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--trees", trees_only, "Run every selected check on the labeled-tree stream");
  scan->add_flag("--no-timing", no_timing, "Omit elapsed time so reports are byte-stable");
  scan->add_option("--max-witnesses", max_witnesses, "Violations kept per theorem");

  auto* ng = app.add_subcommand("ng-scan", "Complement-pair scan and exception-family members");
  add_common(ng);
  ng->add_option("--n", ng_order, "Order (5, 6 or 7)");
  ng->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Generate a family member or verify a closed-form triameter");
  add_common(family);
  family->add_option("--family", src.family, "Family spec to generate, e.g. bistar:3,4");
  family->add_option("--verify", verify_kind, "Family kind whose formula to verify over --range");
  family->add_option("--range", range, "Parameter range A-B for --verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    const ReportFormat fmt = parse_report_format(format);
    if (*compute) {
      std::string text;
      for (const auto& g : load_graphs(src)) {
        if (g.order() < 3 || !is_connected(g)) {
          throw UndefinedParameterError("triameter needs a connected graph on at least 3 vertices");
        }
        text += render(compute_report(g), fmt);
      }
      emit(text, output, out);
      return kExitOk;
    }
    if (*check_cmd) {
      const auto selected = parse_theorem_ids(ids);
      std::vector<TheoremReport> all;
      for (const auto& g : load_graphs(src)) {
        auto reports = check_all(g, selected);
        all.insert(all.end(), reports.begin(), reports.end());
      }
      emit(render(all, fmt), output, out);
      const bool violated =
          std::any_of(all.begin(), all.end(), [](const auto& r) { return r.status == CheckStatus::violated; });
      return violated ? kExitViolation : kExitOk;
    }
    if (*scan) {
      ScanOptions opts;
      opts.orders = parse_range(orders);
      opts.ids = parse_theorem_ids(ids);
      opts.workers = workers;
      opts.policy = trees_only ? TreeStreamPolicy::trees_only : TreeStreamPolicy::split;
      opts.max_witnesses = max_witnesses;
      const auto summary = exhaustive_scan(opts);
      emit(render(summary, fmt, !no_timing), output, out);
      return summary.violations() ? kExitViolation : kExitOk;
    }
    if (*ng) {
      const auto result = ng_scan(ng_order, workers);
      emit(render(result, fmt), output, out);
      return result.additive_violations || result.multiplicative_violations ? kExitViolation : kExitOk;
    }
    if (*family) {
      if (verify_kind.empty() == src.family.empty()) {
        throw InputError("family needs exactly one of --family SPEC or --verify KIND");
      }
      if (!src.family.empty()) {
        emit(render_graph(generate_family(src.family), fmt), output, out);
        return kExitOk;
      }
      const auto params = parse_range(range);
      const auto table = verify_family_formula(family_kind(verify_kind), params.front(), params.back());
      emit(render(table, fmt), output, out);
      return table.mismatches().empty() ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace trimetric::cli
