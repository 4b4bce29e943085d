#include "nilgraph/analyze.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "nilgraph/group.hpp"

namespace nilgraph {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join_labels(const FiniteGroup& G, const ElementSet& S) {
  std::string out = "{";
  bool first = true;
  S.for_each([&](int x) {
    if (!first) out += ", ";
    out += G.label(x);
    first = false;
  });
  out += "}";
  return out;
}

std::vector<int> term_sizes(const SeriesRecord& rec) {
  std::vector<int> sizes;
  sizes.reserve(rec.terms.size());
  for (const auto& t : rec.terms) sizes.push_back(t.count());
  return sizes;
}

std::string size_list(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " > ";
    out += std::to_string(v[i]);
  }
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

nlohmann::ordered_json set_json(const FiniteGroup& G, const ElementSet& S) {
  nlohmann::ordered_json j;
  j["size"] = S.count();
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  S.for_each([&](int x) { labels.push_back(G.label(x)); });
  j["elements"] = std::move(labels);
  return j;
}

}  // namespace

GroupAnalysis analyze_group(const FiniteGroup& G, const AnalyzeOptions& opt) {
  GroupAnalysis a(G);
  auto stage = [&](const char* name, auto&& fn) {
    auto t0 = Clock::now();
    fn();
    if (opt.timings) a.stage_ms.emplace_back(name, ms_since(t0));
  };

  PairContext ctx(a.group);
  stage("series", [&] {
    a.lower = lower_central_series(a.group, a.group.full_set());
    a.upper = upper_central_series(a.group);
    a.nilpotency = is_nilpotent(a.group);
    a.hypercenter = a.upper.terms.back();
  });
  stage("nilpotentizers", [&] {
    a.nil = nil_table(ctx, opt.threads);
    a.nil_is_subgroup = is_subgroup(a.group, a.nil.nil_of_group);
  });
  stage("subnormalizers", [&] {
    a.subnormalizer_of = subnormalizer_table(ctx, opt.threads);
  });
  stage("engel", [&] {
    a.engel_of = engel_table(a.group, opt.threads);
    a.right_engel = right_engel_set(a.group);
  });
  stage("classify", [&] {
    a.profile = classify(ctx, a.nil, a.subnormalizer_of, a.engel_of);
  });
  stage("graphs", [&] {
    a.full_graph = build_full_graph(a.group, a.nil);
    a.reduced_graph = build_reduced_graph(a.group, a.nil);
    a.full_metrics = compute_metrics(a.full_graph, opt.clique_budget);
    a.reduced_metrics = compute_metrics(a.reduced_graph, opt.clique_budget);
  });
  return a;
}

nlohmann::ordered_json metrics_json(const GraphMetrics& m) {
  nlohmann::ordered_json j;
  j["vertices"] = m.vertex_count;
  j["edges"] = m.edge_count;
  j["degree_set"] = m.degree_set;
  j["degree_kinds"] = m.degree_kinds;
  j["component_sizes"] = m.component_sizes;
  j["component_count"] = m.component_count;
  j["diameter"] = m.diameter;
  if (m.girth)
    j["girth"] = *m.girth;
  else
    j["girth"] = nullptr;
  if (m.clique_budget_exceeded)
    j["clique_number"] = nullptr;
  else
    j["clique_number"] = m.clique_number;
  j["clique_budget_exceeded"] = m.clique_budget_exceeded;
  j["planar"] = m.planar;
  return j;
}

nlohmann::ordered_json report_json(const GroupAnalysis& a, bool with_timings) {
  const FiniteGroup& G = a.group;
  nlohmann::ordered_json j;
  j["group"] = {{"name", G.name()}, {"order", G.order()}, {"source", G.source()}};

  nlohmann::ordered_json series;
  series["lower_central"] = {
      {"term_sizes", term_sizes(a.lower)},
      {"stabilized_at", a.lower.stabilized_at},
  };
  series["upper_central"] = {
      {"term_sizes", term_sizes(a.upper)},
      {"stabilized_at", a.upper.stabilized_at},
  };
  j["series"] = std::move(series);

  nlohmann::ordered_json sets;
  sets["nil_of_group"] = set_json(G, a.nil.nil_of_group);
  sets["nil_of_group"]["is_subgroup"] = a.nil_is_subgroup;
  sets["hypercenter"] = set_json(G, a.hypercenter);
  sets["right_engel"] = set_json(G, a.right_engel);
  j["sets"] = std::move(sets);

  nlohmann::ordered_json cls;
  cls["nilpotent"] = a.nilpotency.nilpotent;
  if (a.nilpotency.nilpotent)
    cls["nilpotency_class"] = a.nilpotency.nilpotency_class;
  else
    cls["nilpotency_class"] = nullptr;
  cls["weakly_nilpotent"] = a.profile.weakly_nilpotent;
  cls["solvable"] = a.profile.solvable;
  cls["n_group"] = a.profile.n_group;
  cls["sn_group"] = a.profile.sn_group;
  cls["e_group"] = a.profile.e_group;
  cls["ac_group"] = a.profile.ac_group;
  cls["centerless"] = a.profile.centerless;
  cls["has_normal_abelian"] = a.profile.has_normal_abelian;
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  for (const PrimeProfile& pp : a.profile.per_prime) {
    primes.push_back({{"p", pp.p},
                      {"n_p", pp.n_p},
                      {"sn_p", pp.sn_p},
                      {"e_p", pp.e_p},
                      {"sylow_abelian", pp.sylow_abelian}});
  }
  cls["per_prime"] = std::move(primes);
  j["classification"] = std::move(cls);

  j["full_graph"] = metrics_json(a.full_metrics);
  j["reduced_graph"] = metrics_json(a.reduced_metrics);

  if (with_timings) {
    nlohmann::ordered_json t;
    for (const auto& [name, msv] : a.stage_ms) t[name] = msv;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

namespace {

void append_metrics_text(std::ostringstream& os, const char* title,
                         const GraphMetrics& m) {
  os << title << ":\n";
  os << "  vertices " << m.vertex_count << ", edges " << m.edge_count << "\n";
  os << "  degree set {";
  for (size_t i = 0; i < m.degree_set.size(); ++i) {
    if (i) os << ", ";
    os << m.degree_set[i];
  }
  os << "} (" << m.degree_kinds << " kinds)\n";
  os << "  components " << m.component_count << " [";
  for (size_t i = 0; i < m.component_sizes.size(); ++i) {
    if (i) os << ", ";
    os << m.component_sizes[i];
  }
  os << "]\n";
  os << "  diameter " << m.diameter << ", girth ";
  if (m.girth)
    os << *m.girth;
  else
    os << "none";
  os << "\n";
  os << "  clique number ";
  if (m.clique_budget_exceeded)
    os << "unknown (budget exceeded)";
  else
    os << m.clique_number;
  os << ", planar " << yn(m.planar) << "\n";
}

}  // namespace

std::string report_text(const GroupAnalysis& a, bool with_timings) {
  const FiniteGroup& G = a.group;
  std::ostringstream os;
  os << "group " << G.name() << "  order " << G.order() << "  source "
     << G.source() << "\n";

  os << "lower central series: sizes " << size_list(term_sizes(a.lower))
     << " (stabilized at " << a.lower.stabilized_at << ")\n";
  os << "upper central series: sizes " << size_list(term_sizes(a.upper))
     << " (stabilized at " << a.upper.stabilized_at << ")\n";
  os << "nilpotent: " << yn(a.nilpotency.nilpotent);
  if (a.nilpotency.nilpotent) os << " (class " << a.nilpotency.nilpotency_class << ")";
  os << "\n";

  auto set_line = [&](const char* title, const ElementSet& S) {
    os << title << ": size " << S.count();
    if (S.count() <= 24) os << " " << join_labels(G, S);
    os << "\n";
  };
  set_line("nil(G)", a.nil.nil_of_group);
  os << "nil(G) is a subgroup: " << yn(a.nil_is_subgroup) << "\n";
  set_line("hypercenter", a.hypercenter);
  set_line("right Engel set", a.right_engel);

  os << "classification: solvable " << yn(a.profile.solvable)
     << ", weakly nilpotent " << yn(a.profile.weakly_nilpotent) << ", n-group "
     << yn(a.profile.n_group) << ", sn-group " << yn(a.profile.sn_group)
     << ", E-group " << yn(a.profile.e_group) << ", AC-group "
     << yn(a.profile.ac_group) << ", centerless " << yn(a.profile.centerless)
     << ", normal abelian subgroup " << yn(a.profile.has_normal_abelian)
     << "\n";
  for (const PrimeProfile& pp : a.profile.per_prime) {
    os << "  p=" << pp.p << ": n_p " << yn(pp.n_p) << ", sn_p " << yn(pp.sn_p)
       << ", E_p " << yn(pp.e_p) << ", abelian Sylow "
       << yn(pp.sylow_abelian) << "\n";
  }

  append_metrics_text(os, "full graph", a.full_metrics);
  append_metrics_text(os, "reduced graph", a.reduced_metrics);

  if (with_timings) {
    os << "timings (ms):\n";
    char buf[64];
    for (const auto& [name, msv] : a.stage_ms) {
      std::snprintf(buf, sizeof buf, "  %-16s %.3f\n", name.c_str(), msv);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace nilgraph
