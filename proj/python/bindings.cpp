#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "nilgraph/analyze.hpp"
#include "nilgraph/builtins.hpp"
#include "nilgraph/errors.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/group_io.hpp"
#include "nilgraph/harness.hpp"
#include "nilgraph/nilpotentizer.hpp"

namespace py = pybind11;
using namespace nilgraph;

namespace {

AnalyzeOptions make_options(int threads, long long clique_budget, bool timings) {
  AnalyzeOptions opt;
  opt.threads = threads;
  opt.clique_budget = clique_budget;
  opt.timings = timings;
  return opt;
}

std::vector<CorpusEntry> make_corpus(const std::vector<std::string>& builtins,
                                     const std::string& config) {
  std::vector<CorpusEntry> corpus;
  if (builtins.empty() && config.empty()) return default_corpus();
  for (const std::string& name : builtins)
    corpus.push_back({CorpusEntry::Kind::builtin, name});
  if (!config.empty())
    for (CorpusEntry& e : load_corpus_config(config)) corpus.push_back(std::move(e));
  return corpus;
}

SuiteResult run_suite_py(const std::vector<std::string>& builtins,
                         const std::string& config,
                         const std::vector<std::string>& only, int threads,
                         long long clique_budget, bool timings) {
  SuiteOptions opt;
  opt.threads = threads;
  opt.clique_budget = clique_budget;
  opt.timings = timings;
  opt.only_ids = only;
  return run_suite(make_corpus(builtins, config), opt);
}

std::string dot_of(const FiniteGroup& G, const std::string& graph, int threads) {
  bool reduced = graph == "reduced";
  if (!reduced && graph != "full")
    throw ParseError("graph must be 'full' or 'reduced', got '" + graph + "'");
  PairContext ctx(G);
  NilTable nil = nil_table(ctx, threads);
  NnGraph g = reduced ? build_reduced_graph(G, nil) : build_full_graph(G, nil);
  return to_dot(g, G.name() + (reduced ? " reduced" : " full"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-group engine: nilpotentizers, classification and the "
            "non-nilpotent graph";

  py::register_exception<Error>(m, "NilgraphError");

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name",
                             [](const FiniteGroup& g) { return g.name(); })
      .def_property_readonly("source",
                             [](const FiniteGroup& g) { return g.source(); })
      .def("label", &FiniteGroup::label, py::arg("x"),
           py::return_value_policy::copy)
      .def("labels", [](const FiniteGroup& g) { return g.labels(); })
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("identity", &FiniteGroup::identity)
      .def("element_order", &FiniteGroup::element_order, py::arg("x"))
      .def("conjugate", &FiniteGroup::conjugate, py::arg("x"), py::arg("t"))
      .def("commutator", &FiniteGroup::commutator, py::arg("a"), py::arg("b"))
      .def("prime_divisors", &FiniteGroup::prime_divisors)
      .def("validate", &FiniteGroup::validate)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("builtin", &builtin, py::arg("name"),
        "Construct a named builtin group (S3, D12, PSL(2,7), S3xC2, ...).");
  m.def("list_builtins", &list_builtins);
  m.def("load_cayley", &read_cayley_file, py::arg("path"),
        "Read a Cayley-table file.");
  m.def(
      "load_perms",
      [](const std::string& path, int cap) { return read_perms_file(path, cap); },
      py::arg("path"), py::arg("cap") = kDefaultEnumCap,
      "Read a permutation-generator file and enumerate the group.");

  m.def(
      "analyze_json",
      [](const FiniteGroup& G, int threads, long long clique_budget,
         bool timings) {
        GroupAnalysis a =
            analyze_group(G, make_options(threads, clique_budget, timings));
        return report_json(a, timings).dump();
      },
      py::arg("group"), py::arg("threads") = 1,
      py::arg("clique_budget") = kDefaultCliqueBudget,
      py::arg("timings") = false,
      "Full analysis as a JSON string (parsed by nilgraph.analyze).");
  m.def(
      "analyze_text",
      [](const FiniteGroup& G, int threads, long long clique_budget,
         bool timings) {
        GroupAnalysis a =
            analyze_group(G, make_options(threads, clique_budget, timings));
        return report_text(a, timings);
      },
      py::arg("group"), py::arg("threads") = 1,
      py::arg("clique_budget") = kDefaultCliqueBudget,
      py::arg("timings") = false, "Full analysis as the fixed text report.");

  m.def(
      "run_suite_json",
      [](const std::vector<std::string>& builtins, const std::string& config,
         const std::vector<std::string>& only, int threads,
         long long clique_budget, bool timings) {
        SuiteResult r = run_suite_py(builtins, config, only, threads,
                                     clique_budget, timings);
        return suite_json(r, timings).dump();
      },
      py::arg("corpus") = std::vector<std::string>{}, py::arg("config") = "",
      py::arg("only") = std::vector<std::string>{}, py::arg("threads") = 1,
      py::arg("clique_budget") = kDefaultCliqueBudget,
      py::arg("timings") = false,
      "Run the claim suite; empty corpus and config mean the default corpus.");
  m.def(
      "run_suite_text",
      [](const std::vector<std::string>& builtins, const std::string& config,
         const std::vector<std::string>& only, int threads,
         long long clique_budget, bool timings) {
        SuiteResult r = run_suite_py(builtins, config, only, threads,
                                     clique_budget, timings);
        return suite_text(r);
      },
      py::arg("corpus") = std::vector<std::string>{}, py::arg("config") = "",
      py::arg("only") = std::vector<std::string>{}, py::arg("threads") = 1,
      py::arg("clique_budget") = kDefaultCliqueBudget,
      py::arg("timings") = false);

  m.def("claim_ids", &suite_claim_ids, "Claim ids in suite order.");
  m.def(
      "default_corpus",
      [] {
        std::vector<std::string> names;
        for (const CorpusEntry& e : default_corpus()) names.push_back(e.value);
        return names;
      },
      "Names of the stock corpus members.");

  m.def("export_dot", &dot_of, py::arg("group"), py::arg("graph") = "full",
        py::arg("threads") = 1,
        "DOT text of the full or reduced graph of the group.");
}
