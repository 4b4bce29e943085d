#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nilgraph/classify.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/nilpotentizer.hpp"
#include "nilgraph/series.hpp"

namespace nilgraph {

struct AnalyzeOptions {
  int threads = 1;
  long long clique_budget = kDefaultCliqueBudget;
  bool timings = false;  // stage timings are opt-in: they are the one
                         // nondeterministic part of a report
};

// Everything the reports and the claim harness consume, computed once.
struct GroupAnalysis {
  explicit GroupAnalysis(FiniteGroup g) : group(std::move(g)) {}

  FiniteGroup group;
  SeriesRecord lower;
  SeriesRecord upper;
  NilpotencyResult nilpotency;
  ElementSet hypercenter;
  NilTable nil;
  bool nil_is_subgroup = false;
  std::vector<ElementSet> subnormalizer_of;
  std::vector<ElementSet> engel_of;
  ElementSet right_engel;
  ClassProfile profile;
  NnGraph full_graph;
  NnGraph reduced_graph;
  GraphMetrics full_metrics;
  GraphMetrics reduced_metrics;
  std::vector<std::pair<std::string, double>> stage_ms;
};

GroupAnalysis analyze_group(const FiniteGroup& G, const AnalyzeOptions& opt = {});

// Fixed section order: group header, series, sets, class flags, full-graph
// metrics, reduced-graph metrics. Byte-stable for fixed inputs and budgets.
std::string report_text(const GroupAnalysis& a, bool with_timings = false);
nlohmann::ordered_json report_json(const GroupAnalysis& a, bool with_timings = false);

nlohmann::ordered_json metrics_json(const GraphMetrics& m);

}  // namespace nilgraph
