#include "nilgraph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nilgraph/errors.hpp"

namespace nilgraph {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_order(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

static std::vector<std::vector<int>> parse_cycle_lists(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (text[i] == ',') {  // tolerate comma separators
          ++i;
          skip_ws();
          continue;
        }
        throw ParseError("unexpected character in cycle: " + text);
      }
      // A run of digits is one point if followed by a separator, otherwise
      // ambiguous compact notation; compact form treats each digit as a
      // point only when the whole cycle has no separators and all points
      // are single digits. We parse greedily: read the full number, and if
      // the cycle turns out separator-free with a multi-digit number we
      // re-split per digit below.
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      cyc.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

// Decides whether compact digit-splitting applies: no separators anywhere
// inside parens ("(123)" style) and at least one multi-digit run. With any
// space or comma present, multi-digit tokens are real points ("(1 12)").
static bool needs_digit_split(const std::string& text) {
  bool inside = false;
  bool has_multi_digit_run = false;
  char prev = 0;
  for (char c : text) {
    if (c == '(') { inside = true; prev = 0; continue; }
    if (c == ')') { inside = false; prev = 0; continue; }
    if (!inside) continue;
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') return false;
    if (std::isdigit(static_cast<unsigned char>(c)) &&
        std::isdigit(static_cast<unsigned char>(prev)))
      has_multi_digit_run = true;
    prev = c;
  }
  return has_multi_digit_run;
}

Perm parse_cycles(const std::string& text, int min_degree) {
  auto cycles = parse_cycle_lists(text);
  if (needs_digit_split(text)) {
    std::vector<std::vector<int>> split;
    for (auto& cyc : cycles) {
      std::vector<int> out;
      for (int v : cyc) {
        if (v < 10) {
          out.push_back(v);
        } else {
          std::string s = std::to_string(v);
          for (char c : s) out.push_back(c - '0');
        }
      }
      split.push_back(std::move(out));
    }
    cycles = std::move(split);
  }
  int degree = min_degree;
  for (auto& cyc : cycles)
    for (int v : cyc) {
      if (v < 1) throw ParseError("cycle points are 1-based: " + text);
      degree = std::max(degree, v);
    }
  Perm p = perm_identity(degree);
  std::vector<char> used(degree + 1, 0);
  for (auto& cyc : cycles) {
    for (int v : cyc) {
      if (used[v]) throw ParseError("repeated point " + std::to_string(v) + " in " + text);
      used[v] = 1;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  }
  return p;
}

static std::vector<std::vector<int>> cycle_decomposition(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      cyc.push_back(j + 1);  // 1-based for display
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string format_cycles(const Perm& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  bool compact = true;
  for (auto& cyc : cycles)
    for (int v : cyc)
      if (v > 9) compact = false;
  std::ostringstream os;
  for (auto& cyc : cycles) {
    os << '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k && !compact) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

std::string canonical_cycle_label(const Perm& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  for (auto& cyc : cycles) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  bool compact = true;
  for (auto& cyc : cycles)
    for (int v : cyc)
      if (v > 9) compact = false;
  std::ostringstream os;
  for (auto& cyc : cycles) {
    os << '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k && !compact) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace nilgraph
