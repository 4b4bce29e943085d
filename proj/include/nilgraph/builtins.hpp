#pragma once

#include <string>
#include <vector>

#include "nilgraph/group.hpp"

namespace nilgraph {

// Builds a named builtin group. Accepted names (case-insensitive, optional
// underscores): Cn, D2n (dihedral of order 2n, n >= 3), Sn / An (n <= 6),
// Q8, T (the order-12 dicyclic group <x,y | x^6 = x^3 y^-2 = x^y x = 1>),
// PSL(2,q) for q in {4,5,7,8,9,11,13}, and direct products joined with 'x',
// e.g. "S3xC2". Throws UnknownFamily / CapExceeded.
FiniteGroup builtin(const std::string& name);

// Canonical names of the concretely enumerable families, for `list`.
std::vector<std::string> list_builtins();

}  // namespace nilgraph
