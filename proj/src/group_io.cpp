#include "nilgraph/group_io.hpp"

#include <fstream>
#include <sstream>

#include "nilgraph/errors.hpp"

namespace nilgraph {

FiniteGroup read_cayley_stream(std::istream& in, const std::string& origin) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw ParseError(origin + ": expected positive order on line 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(in >> rows[a][b]))
        throw ParseError(origin + ": table ends early at row " + std::to_string(a));
  std::vector<std::string> labels;
  std::string word;
  while (in >> word) {
    if (word != "label") throw ParseError(origin + ": unexpected token '" + word + "'");
    int i = -1;
    if (!(in >> i) || i < 0 || i >= n)
      throw ParseError(origin + ": bad label index");
    std::string text;
    std::getline(in, text);
    size_t start = text.find_first_not_of(" \t");
    if (start == std::string::npos) throw ParseError(origin + ": empty label text");
    if (labels.empty()) {
      labels.resize(n);
      for (int k = 0; k < n; ++k) labels[k] = "g" + std::to_string(k);
    }
    size_t end = text.find_last_not_of(" \t\r");
    labels[i] = text.substr(start, end - start + 1);
  }
  return FiniteGroup::from_cayley_table(rows, std::move(labels), "cayley-file");
}

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_cayley_stream(in, path);
}

void write_cayley_file(const FiniteGroup& G, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  const int n = G.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << G.mul(a, b);
    out << "\n";
  }
  for (int i = 0; i < n; ++i) out << "label " << i << " " << G.label(i) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

FiniteGroup read_perms_stream(std::istream& in, const std::string& origin, int cap) {
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    size_t end = line.find_last_not_of(" \t\r");
    gens.push_back(parse_cycles(line.substr(start, end - start + 1)));
  }
  FiniteGroup G = FiniteGroup::from_permutation_generators(gens, "permutation", cap);
  G.set_name(origin);
  return G;
}

FiniteGroup read_perms_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_perms_stream(in, path, cap);
}

}  // namespace nilgraph
