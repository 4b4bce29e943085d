#pragma once

#include <iosfwd>
#include <string>

#include "nilgraph/group.hpp"

namespace nilgraph {

// Cayley-table file: first line n, then n whitespace-separated rows of n
// zero-based indices, then optional lines "label <i> <string>".
FiniteGroup read_cayley_file(const std::string& path);
FiniteGroup read_cayley_stream(std::istream& in, const std::string& origin);
void write_cayley_file(const FiniteGroup& G, const std::string& path);

// Permutation-generator file: one generator per line in cycle notation,
// e.g. "(1 2)(3 4)". Blank lines and lines starting with '#' are skipped.
FiniteGroup read_perms_file(const std::string& path, int cap = kDefaultEnumCap);
FiniteGroup read_perms_stream(std::istream& in, const std::string& origin,
                              int cap = kDefaultEnumCap);

}  // namespace nilgraph
