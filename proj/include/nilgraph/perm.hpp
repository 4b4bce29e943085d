#pragma once

#include <string>
#include <vector>

namespace nilgraph {

// A permutation of {0, ..., n-1} stored as its image list: p[i] is the image
// of i. Text I/O uses 1-based cycle notation, e.g. "(1 2 3)(4 5)" or the
// compact form "(123)(45)" when every moved point is a single digit.
using Perm = std::vector<int>;

Perm perm_identity(int n);

// Composition in left-to-right order: (a*b)(i) = b(a(i)).
Perm perm_compose(const Perm& a, const Perm& b);

Perm perm_inverse(const Perm& p);

int perm_order(const Perm& p);

// Parses one permutation in cycle notation. Accepts "(1 2 3)(4 5)",
// "(123)(45)", "()" and "" (both identity). Points are 1-based in the text;
// degree is max(moved point, min_degree). Throws ParseError on bad syntax
// or repeated points.
Perm parse_cycles(const std::string& text, int min_degree = 0);

// Formats in cycle notation with points separated by spaces only when some
// point needs more than one digit. Identity renders as "()".
std::string format_cycles(const Perm& p);

// Canonical label used for set-comparison of permutations regardless of
// degree padding: cycles rotated to start at their minimum, sorted, fixed
// points dropped. Identity -> "()".
std::string canonical_cycle_label(const Perm& p);

}  // namespace nilgraph
