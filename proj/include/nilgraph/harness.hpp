#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nilgraph/analyze.hpp"

namespace nilgraph {

// One corpus member: a builtin name or a path to a Cayley-table /
// permutation-generator file.
struct CorpusEntry {
  enum class Kind { builtin, cayley, perms };
  Kind kind;
  std::string value;
};

// The stock corpus the full ("paper") suite runs over.
std::vector<CorpusEntry> default_corpus();

// Config file: {"groups": [{"builtin": "S3"}, {"cayley": "path"},
// {"perms": "path"}, ...]}. Paths are taken as written.
std::vector<CorpusEntry> load_corpus_config(const std::string& path);

// Outcome of one claim. `tested` lists the members the claim was checked
// on, with a "(skipped: ...)" suffix for members its hypothesis excludes;
// `witnesses` carries measured values and, on failure, the mismatches.
// Verdict is "pass", "fail", or "reported" for empirical observations
// that have no asserted expected value.
struct ClaimResult {
  std::string id;
  std::string anchor;
  std::vector<std::string> tested;
  std::string verdict = "pass";
  std::vector<std::string> witnesses;
};

struct SuiteResult {
  std::vector<ClaimResult> claims;
  std::vector<std::string> corpus;
  std::vector<std::pair<std::string, double>> timings;
  bool all_passed() const;
};

struct SuiteOptions {
  int threads = 1;
  long long clique_budget = kDefaultCliqueBudget;
  bool timings = false;                // collect per-stage wall times
  std::vector<std::string> only_ids;   // empty means the full suite
};

// Ids in suite order, for `list` and for validating --suite arguments.
std::vector<std::string> suite_claim_ids();

// Analyzes every corpus member once, then evaluates the claims (all of
// them, or the requested subset). Throws ParseError on an unknown id.
SuiteResult run_suite(const std::vector<CorpusEntry>& corpus,
                      const SuiteOptions& opt = {});

nlohmann::ordered_json suite_json(const SuiteResult& r, bool with_timings = false);
std::string suite_text(const SuiteResult& r);

}  // namespace nilgraph
