#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nilgraph/analyze.hpp"
#include "nilgraph/builtins.hpp"
#include "nilgraph/errors.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/group_io.hpp"
#include "nilgraph/harness.hpp"
#include "nilgraph/nilpotentizer.hpp"
#include "nilgraph/series.hpp"

namespace {

using namespace nilgraph;

struct SourceOpts {
  std::string builtin_name;
  std::string cayley_path;
  std::string perms_path;
  int cap = kDefaultEnumCap;
};

void add_source_flags(CLI::App* sub, SourceOpts& src) {
  auto* grp = sub->add_option_group("source", "exactly one group source");
  grp->add_option("--builtin", src.builtin_name, "builtin group name (see `list`)");
  grp->add_option("--cayley", src.cayley_path, "Cayley-table file");
  grp->add_option("--perms", src.perms_path, "permutation-generator file");
  grp->require_option(1);
  sub->add_option("--cap", src.cap, "permutation enumeration cap")
      ->capture_default_str();
}

FiniteGroup load_group(const SourceOpts& src) {
  if (!src.builtin_name.empty()) return builtin(src.builtin_name);
  if (!src.cayley_path.empty()) return read_cayley_file(src.cayley_path);
  return read_perms_file(src.perms_path, src.cap);
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
  if (!out) throw IoError("write failed for " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-nilpotent graph engine for finite groups"};
  app.require_subcommand(1);

  SourceOpts an_src;
  std::string an_format = "text", an_out;
  int an_threads = 1;
  long long an_budget = kDefaultCliqueBudget;
  bool an_timings = false;
  CLI::App* an = app.add_subcommand("analyze", "full report for one group");
  add_source_flags(an, an_src);
  an->add_option("--format", an_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  an->add_option("--threads", an_threads, "worker threads")->capture_default_str();
  an->add_option("--clique-budget", an_budget, "clique search node budget")
      ->capture_default_str();
  an->add_flag("--timings", an_timings, "include wall-clock stage timings");
  an->add_option("--out", an_out, "output file (default: stdout)");

  std::string vf_suite = "paper", vf_corpus, vf_format = "text", vf_out;
  int vf_threads = 1;
  long long vf_budget = kDefaultCliqueBudget;
  bool vf_timings = false;
  CLI::App* vf = app.add_subcommand("verify", "run the claim suite over the corpus");
  vf->add_option("--suite", vf_suite,
                 "\"paper\" for every claim, or a comma-separated claim-id list")
      ->capture_default_str();
  vf->add_option("--corpus", vf_corpus,
                 "JSON config whose groups are appended to the default corpus");
  vf->add_option("--format", vf_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  vf->add_option("--threads", vf_threads, "worker threads")->capture_default_str();
  vf->add_option("--clique-budget", vf_budget, "clique search node budget")
      ->capture_default_str();
  vf->add_flag("--timings", vf_timings, "include wall-clock timings");
  vf->add_option("--out", vf_out, "output file (default: stdout)");

  SourceOpts ex_src;
  std::string ex_graph = "full", ex_out;
  int ex_threads = 1;
  CLI::App* ex = app.add_subcommand("export", "write a graph in DOT format");
  add_source_flags(ex, ex_src);
  ex->add_option("--graph", ex_graph, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}))
      ->capture_default_str();
  ex->add_option("--threads", ex_threads, "worker threads")->capture_default_str();
  ex->add_option("--out", ex_out, "output file (default: stdout)");

  bool ls_claims = false;
  CLI::App* ls = app.add_subcommand("list", "list builtin groups");
  ls->add_flag("--claims", ls_claims, "list suite claim ids instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help/--version
  }

  try {
    if (an->parsed()) {
      AnalyzeOptions opt;
      opt.threads = an_threads;
      opt.clique_budget = an_budget;
      opt.timings = an_timings;
      GroupAnalysis a = analyze_group(load_group(an_src), opt);
      if (an_format == "json")
        write_out(an_out, report_json(a, an_timings).dump(2) + "\n");
      else
        write_out(an_out, report_text(a, an_timings));
      return 0;
    }

    if (vf->parsed()) {
      std::vector<CorpusEntry> corpus = default_corpus();
      if (!vf_corpus.empty())
        for (CorpusEntry& ce : load_corpus_config(vf_corpus))
          corpus.push_back(std::move(ce));
      SuiteOptions opt;
      opt.threads = vf_threads;
      opt.clique_budget = vf_budget;
      opt.timings = vf_timings;
      if (vf_suite != "paper") {
        std::string cur;
        for (char c : vf_suite + ",") {
          if (c == ',') {
            if (!cur.empty()) opt.only_ids.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        if (opt.only_ids.empty()) throw ParseError("--suite got an empty id list");
      }
      SuiteResult res = run_suite(corpus, opt);
      if (vf_format == "json")
        write_out(vf_out, suite_json(res, vf_timings).dump(2) + "\n");
      else
        write_out(vf_out, suite_text(res));
      return res.all_passed() ? 0 : 1;
    }

    if (ex->parsed()) {
      FiniteGroup G = load_group(ex_src);
      PairContext ctx(G);
      NilTable nil = nil_table(ctx, ex_threads);
      NnGraph g = ex_graph == "reduced" ? build_reduced_graph(G, nil)
                                        : build_full_graph(G, nil);
      std::string name = G.name() + (ex_graph == "reduced" ? " reduced" : " full");
      write_out(ex_out, to_dot(g, name));
      return 0;
    }

    if (ls->parsed()) {
      if (ls_claims)
        for (const std::string& id : suite_claim_ids()) std::cout << id << "\n";
      else
        for (const std::string& n : list_builtins()) std::cout << n << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
