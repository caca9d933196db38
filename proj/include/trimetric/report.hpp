#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trimetric/graph.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/metrics.hpp"
#include "trimetric/scan.hpp"
#include "trimetric/theorems.hpp"
#include "trimetric/triameter.hpp"

namespace trimetric {

enum class ReportFormat { text, json, csv };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw InputError("unknown format \"" + std::string(s) + "\" (expected json, csv or text)");
}

// All renderers are deterministic: nlohmann::json objects keep keys sorted
// and every list is emitted in a fixed order.

inline std::string render(const TriameterResult& r) {
  return "tr=" + std::to_string(r.value) + " witness=" + std::to_string(r.witness[0]) + "," +
         std::to_string(r.witness[1]) + "," + std::to_string(r.witness[2]);
}

namespace detail {

inline std::string join_values(const CheckValues& values, char sep) {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += sep;
    out += k + "=" + std::to_string(v);
  }
  return out;
}

inline nlohmann::json report_json(const TheoremReport& r) {
  return {{"id", r.id}, {"status", to_string(r.status)}, {"graph6", r.graph6}, {"values", r.values}};
}

inline std::string graph6_or_dash(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? to_graph6(g) : std::string("-");
}

template <typename T>
std::string join(const std::vector<T>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

struct GraphReport {
  Graph graph;
  MetricsSummary metrics;
  TriameterResult tr;
};

inline GraphReport compute_report(const Graph& g) {
  return {g, metrics_summary(g), triameter(g)};
}

inline std::string render(const GraphReport& r, ReportFormat format) {
  const auto& m = r.metrics;
  const std::string g6 = detail::graph6_or_dash(r.graph);
  auto opt = [](const std::optional<std::size_t>& v, const char* none) {
    return v ? std::to_string(*v) : std::string(none);
  };
  const std::string srg = m.srg ? std::to_string(m.srg->n) + "," + std::to_string(m.srg->k) + "," +
                                      std::to_string(m.srg->lambda) + "," + std::to_string(m.srg->mu)
                                : std::string("none");
  switch (format) {
    case ReportFormat::text: {
      std::ostringstream out;
      out << "graph6=" << g6 << "\n"
          << "n=" << m.order << " m=" << m.size << "\n"
          << render(r.tr) << "\n"
          << "diam=" << m.diameter << " rad=" << m.radius << " center=" << detail::join(m.center, ',') << "\n"
          << "girth=" << opt(m.girth, "acyclic") << " wiener=" << m.wiener << "\n"
          << "min_degree=" << m.min_degree << " max_degree=" << m.max_degree << " leaves=" << m.leaf_count << "\n"
          << "chromatic=" << opt(m.chromatic, "capped") << " kappa=" << opt(m.kappa, "capped") << "\n"
          << "tree=" << (m.tree ? "yes" : "no") << " bipartite=" << (m.bipartite ? "yes" : "no")
          << " triangle=" << (m.triangle ? "yes" : "no") << " bistar=" << (m.bistar ? "yes" : "no") << "\n"
          << "hamiltonian=" << to_string(m.hamiltonian) << " vertex_transitive=" << to_string(m.vertex_transitive)
          << " srg=" << srg << "\n";
      return out.str();
    }
    case ReportFormat::json: {
      nlohmann::json j = {
          {"graph6", g6},
          {"n", m.order},
          {"m", m.size},
          {"tr", r.tr.value},
          {"witness", r.tr.witness},
          {"ecc", m.ecc},
          {"diam", m.diameter},
          {"rad", m.radius},
          {"center", m.center},
          {"girth", m.girth ? nlohmann::json(*m.girth) : nlohmann::json(nullptr)},
          {"wiener", m.wiener},
          {"min_degree", m.min_degree},
          {"max_degree", m.max_degree},
          {"leaves", m.leaf_count},
          {"chromatic", m.chromatic ? nlohmann::json(*m.chromatic) : nlohmann::json(nullptr)},
          {"kappa", m.kappa ? nlohmann::json(*m.kappa) : nlohmann::json(nullptr)},
          {"tree", m.tree},
          {"bipartite", m.bipartite},
          {"triangle", m.triangle},
          {"bistar", m.bistar},
          {"hamiltonian", to_string(m.hamiltonian)},
          {"vertex_transitive", to_string(m.vertex_transitive)},
          {"srg", m.srg ? nlohmann::json{m.srg->n, m.srg->k, m.srg->lambda, m.srg->mu} : nlohmann::json(nullptr)},
      };
      return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "graph6,n,m,tr,witness,diam,rad,girth,wiener,min_degree,max_degree,leaves,chromatic,kappa\n"
          << g6 << ',' << m.order << ',' << m.size << ',' << r.tr.value << ',' << r.tr.witness[0] << ' '
          << r.tr.witness[1] << ' ' << r.tr.witness[2] << ',' << m.diameter << ',' << m.radius << ','
          << opt(m.girth, "acyclic") << ',' << m.wiener << ',' << m.min_degree << ',' << m.max_degree << ','
          << m.leaf_count << ',' << opt(m.chromatic, "capped") << ',' << opt(m.kappa, "capped") << "\n";
      return out.str();
    }
  }
  return {};
}

inline std::string render(const std::vector<TheoremReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      std::string out;
      std::string current;
      for (const auto& r : reports) {
        if (r.graph6 != current) {
          current = r.graph6;
          out += "graph6=" + current + "\n";
        }
        out += "  " + r.id + " " + to_string(r.status);
        const auto vals = detail::join_values(r.values, ' ');
        if (!vals.empty()) out += " " + vals;
        out += "\n";
      }
      return out;
    }
    case ReportFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(detail::report_json(r));
      return nlohmann::json{{"reports", arr}}.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = "graph6,theorem,status,values\n";
      for (const auto& r : reports) {
        out += r.graph6 + "," + r.id + "," + to_string(r.status) + "," + detail::join_values(r.values, ';') + "\n";
      }
      return out;
    }
  }
  return {};
}

inline std::string render(const ScanSummary& s, ReportFormat format, bool include_timing = true) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& r : s.results) {
        nlohmann::json witnesses = nlohmann::json::array();
        for (const auto& w : r.witnesses) witnesses.push_back({{"graph6", w.graph6}, {"values", w.values}});
        results.push_back({{"id", r.id},
                           {"stream", r.tree_stream ? "trees" : "connected"},
                           {"graphs", r.graphs},
                           {"holds", r.holds},
                           {"violated", r.violated},
                           {"inapplicable", r.inapplicable},
                           {"inapplicable_cap", r.inapplicable_cap},
                           {"witnesses", witnesses}});
      }
      nlohmann::json j = {{"scan",
                           {{"orders", s.orders},
                            {"ids", s.ids},
                            {"graphs_scanned", s.graphs_scanned()},
                            {"connected_graphs", s.connected_graphs},
                            {"trees", s.trees}}},
                          {"results", results}};
      if (include_timing) j["elapsed_ms"] = s.elapsed_ms;
      return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = "theorem,holds,violated,inapplicable\n";
      for (const auto& r : s.results) {
        out += r.id + "," + std::to_string(r.holds) + "," + std::to_string(r.violated) + "," +
               std::to_string(r.inapplicable + r.inapplicable_cap) + "\n";
      }
      if (s.violations()) {
        out += "\ntheorem,graph6,values\n";
        for (const auto& r : s.results)
          for (const auto& w : r.witnesses) out += r.id + "," + w.graph6 + "," + detail::join_values(w.values, ';') + "\n";
      }
      return out;
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "orders=" << detail::join(s.orders, ',') << " connected_graphs=" << s.connected_graphs
          << " trees=" << s.trees << "\n";
      for (const auto& r : s.results) {
        out << r.id << " graphs=" << r.graphs << " holds=" << r.holds << " violated=" << r.violated
            << " inapplicable=" << r.inapplicable << " inapplicable_cap=" << r.inapplicable_cap << "\n";
      }
      for (const auto& r : s.results) {
        for (const auto& w : r.witnesses) {
          out << "VIOLATION " << r.id << " graph6=" << w.graph6 << " " << detail::join_values(w.values, ' ') << "\n";
        }
      }
      out << "violations=" << s.violations() << "\n";
      if (include_timing) out << "elapsed_ms=" << s.elapsed_ms << "\n";
      return out.str();
    }
  }
  return {};
}

inline std::string render(const NgScanResult& r, ReportFormat format) {
  const std::vector<std::pair<std::string, std::uint64_t>> stats = {
      {"n", r.n},
      {"pairs", r.pairs},
      {"min_sum", r.min_sum},
      {"max_sum", r.max_sum},
      {"additive_upper", r.additive_upper()},
      {"min_product", r.min_product},
      {"max_product", r.max_product},
      {"max_product_outside_family", r.max_product_outside_family},
      {"multiplicative_upper", r.multiplicative_upper()},
      {"members", r.members.size()},
      {"additive_violations", r.additive_violations},
      {"multiplicative_exceptions", r.multiplicative_exceptions},
      {"multiplicative_violations", r.multiplicative_violations},
  };
  switch (format) {
    case ReportFormat::json: {
      nlohmann::json members = nlohmann::json::array();
      for (const auto& m : r.members) {
        members.push_back({{"graph6", m.pair.graph6},
                           {"tr", m.pair.tr},
                           {"tr_complement", m.pair.tr_complement},
                           {"diam", m.pair.diam},
                           {"diam_complement", m.pair.diam_complement},
                           {"sum", m.pair.sum()},
                           {"product", m.pair.product()},
                           {"exceeds_multiplicative", m.exceeds_multiplicative}});
      }
      nlohmann::json extremal = nlohmann::json::object();
      for (const auto& [k, v] : stats) extremal[k] = v;
      return nlohmann::json{{"extremal", extremal}, {"members", members}}.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "graph6,tr,tr_complement,diam,diam_complement,sum,product,exceeds_multiplicative\n";
      for (const auto& m : r.members) {
        out << m.pair.graph6 << ',' << m.pair.tr << ',' << m.pair.tr_complement << ',' << m.pair.diam << ','
            << m.pair.diam_complement << ',' << m.pair.sum() << ',' << m.pair.product() << ','
            << (m.exceeds_multiplicative ? 1 : 0) << "\n";
      }
      out << "\nstatistic,value\n";
      for (const auto& [k, v] : stats) out << k << ',' << v << "\n";
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      for (const auto& [k, v] : stats) out << k << '=' << v << "\n";
      for (const auto& m : r.members) {
        out << "member graph6=" << m.pair.graph6 << " tr=" << m.pair.tr << " tr_complement=" << m.pair.tr_complement
            << " product=" << m.pair.product() << (m.exceeds_multiplicative ? " EXCEEDS" : "") << "\n";
      }
      return out.str();
    }
  }
  return {};
}

inline std::string render(const FamilyTable& t, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : t.rows) {
        rows.push_back({{"spec", r.spec}, {"expected", r.expected}, {"computed", r.computed}, {"match", r.matches()}});
      }
      return nlohmann::json{{"family", family_name(t.kind)}, {"rows", rows}, {"mismatches", t.mismatches().size()}}
                 .dump(2) +
             "\n";
    }
    case ReportFormat::csv: {
      std::string out = "spec,expected,computed,match\n";
      for (const auto& r : t.rows) {
        out += r.spec + "," + std::to_string(r.expected) + "," + std::to_string(r.computed) + "," +
               (r.matches() ? "1" : "0") + "\n";
      }
      return out;
    }
    case ReportFormat::text: {
      std::string out;
      for (const auto& r : t.rows) {
        out += r.spec + " expected=" + std::to_string(r.expected) + " computed=" + std::to_string(r.computed) +
               (r.matches() ? "" : " MISMATCH") + "\n";
      }
      out += "mismatches=" + std::to_string(t.mismatches().size()) + "\n";
      return out;
    }
  }
  return {};
}

/// Generated graph: graph6 line (text), edge rows (csv) or both (json).
inline std::string render_graph(const Graph& g, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return detail::graph6_or_dash(g) + "\n";
    case ReportFormat::csv: {
      std::string out = "u,v\n";
      for (const auto& [u, v] : g.edges()) out += std::to_string(u) + "," + std::to_string(v) + "\n";
      return out;
    }
    case ReportFormat::json: {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
      return nlohmann::json{{"graph6", detail::graph6_or_dash(g)}, {"n", g.order()}, {"edges", edges}}.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace trimetric
