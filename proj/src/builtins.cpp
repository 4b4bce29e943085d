#include "nilgraph/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "nilgraph/errors.hpp"

namespace nilgraph {
namespace {

FiniteGroup cyclic(int n) {
  if (n < 1 || n > kOrderCap) throw CapExceeded("C" + std::to_string(n) + " out of range");
  std::vector<Perm> gens;
  if (n > 1) {
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
    gens.push_back(std::move(r));
  }
  return FiniteGroup::from_permutation_generators(gens, "builtin:C" + std::to_string(n));
}

FiniteGroup dihedral(int order) {
  if (order < 6 || order % 2 != 0 || order > kOrderCap)
    throw UnknownFamily("D" + std::to_string(order) +
                        ": dihedral groups here are D2n with n >= 3");
  const int n = order / 2;
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = n - 1 - i;
  }
  return FiniteGroup::from_permutation_generators({r, s}, "builtin:D" + std::to_string(order));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 6) throw UnknownFamily("S" + std::to_string(n) + ": supported range is S1..S6");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(parse_cycles("(1 2)", n));
  if (n >= 3) {
    Perm cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(std::move(cyc));
  }
  return FiniteGroup::from_permutation_generators(gens, "builtin:S" + std::to_string(n));
}

FiniteGroup alternating(int n) {
  if (n < 1 || n > 6) throw UnknownFamily("A" + std::to_string(n) + ": supported range is A1..A6");
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(parse_cycles("(1 2 3)", n));
  if (n >= 4) {
    Perm cyc = perm_identity(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;  // n-cycle, even permutation
    } else {
      for (int i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 1;  // (2 3 ... n)
    }
    gens.push_back(std::move(cyc));
  }
  return FiniteGroup::from_permutation_generators(gens, "builtin:A" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // Elements (s, u): sign s in {+,-}, unit u in {1,i,j,k}; index = s*4 + u.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s1 = a / 4, u1 = a % 4, s2 = b / 4, u2 = b % 4;
      rows[a][b] = ((s1 ^ s2 ^ unit_sign[u1][u2]) << 2) | unit_mul[u1][u2];
    }
  std::vector<std::string> labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  FiniteGroup G = FiniteGroup::from_cayley_table(rows, labels, "builtin:Q8");
  return G;
}

// T = <x,y | x^6 = 1, y^2 = x^3, x^y = x^-1>, the dicyclic group of order 12.
FiniteGroup dicyclic12() {
  auto idx = [](int a, int b) { return b * 6 + a; };
  std::vector<std::vector<int>> rows(12, std::vector<int>(12));
  for (int a1 = 0; a1 < 6; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 6; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          int a, b;
          if (b1 == 0) {
            a = (a1 + a2) % 6;
            b = b2;
          } else if (b2 == 0) {
            a = ((a1 - a2) % 6 + 6) % 6;  // x^a1 y x^a2 = x^(a1-a2) y
            b = 1;
          } else {
            a = ((a1 - a2 + 3) % 6 + 6) % 6;  // ... y^2 = x^3
            b = 0;
          }
          rows[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
        }
  std::vector<std::string> labels(12);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 2; ++b) {
      std::string l;
      if (a == 0 && b == 0) l = "1";
      if (a == 1) l = "x";
      if (a >= 2) l = "x^" + std::to_string(a);
      if (b == 1) l += l.empty() ? "y" : "*y";
      labels[idx(a, b)] = l;
    }
  FiniteGroup G = FiniteGroup::from_cayley_table(rows, labels, "builtin:T");
  return G;
}

struct SmallField {
  int q = 0;
  std::vector<int> addt, mult, invt;
  int add(int a, int b) const { return addt[a * q + b]; }
  int mul(int a, int b) const { return mult[a * q + b]; }
  int sub(int a, int b) const;
  int inv(int a) const { return invt[a]; }
  std::vector<int> negt;
};

int SmallField::sub(int a, int b) const { return addt[a * q + negt[b]]; }

SmallField make_field(int q) {
  int p = prime_factors(q)[0];
  int e = 0;
  for (int v = q; v > 1; v /= p) ++e;
  std::vector<int> red;  // coefficients of x^e in the quotient ring
  if (q == 4) red = {1, 1};        // x^2 = x + 1
  else if (q == 8) red = {1, 1, 0};  // x^3 = x + 1
  else if (q == 9) red = {2, 0};     // x^2 = -1
  else if (e != 1) throw UnknownFamily("no field table for q=" + std::to_string(q));
  SmallField F;
  F.q = q;
  F.addt.resize(q * q);
  F.mult.resize(q * q);
  auto digits = [&](int v) {
    std::vector<int> d(e);
    for (int j = 0; j < e; ++j) {
      d[j] = v % p;
      v /= p;
    }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int v = 0;
    for (int j = e - 1; j >= 0; --j) v = v * p + d[j];
    return v;
  };
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> sum(e);
      for (int j = 0; j < e; ++j) sum[j] = (da[j] + db[j]) % p;
      F.addt[a * q + b] = undigits(sum);
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int deg = 2 * e - 2; deg >= e; --deg) {
        int c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (int j = 0; j < e; ++j)
          prod[deg - e + j] = (prod[deg - e + j] + c * red[j]) % p;
      }
      prod.resize(e);
      F.mult[a * q + b] = undigits(prod);
    }
  }
  F.negt.resize(q);
  F.invt.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (F.add(a, b) == 0) F.negt[a] = b;
      if (a != 0 && F.mul(a, b) == 1) F.invt[a] = b;
    }
    if (a != 0 && F.invt[a] == 0)
      throw UnknownFamily("field table for q=" + std::to_string(q) + " is not a field");
  }
  return F;
}

// PSL(2,q) as the permutation action of SL(2,q) on the projective line:
// points 0..q-1 are [i:1], point q is [1:0]. Matrices with the same action
// (i.e. differing by the center {+-I}) collapse to one permutation.
FiniteGroup psl2(int q) {
  static const std::set<int> supported = {4, 5, 7, 8, 9, 11, 13};
  if (!supported.count(q))
    throw UnknownFamily("PSL(2," + std::to_string(q) + "): supported q are 4,5,7,8,9,11,13");
  SmallField F = make_field(q);
  auto point_of = [&](int x, int y) {
    if (y != 0) return F.mul(x, F.inv(y));
    return q;  // [1:0]
  };
  std::set<Perm> actions;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) != 1) continue;
          Perm perm(q + 1);
          for (int i = 0; i <= q; ++i) {
            int x = (i < q) ? i : 1;
            int y = (i < q) ? 1 : 0;
            perm[i] = point_of(F.add(F.mul(a, x), F.mul(b, y)),
                               F.add(F.mul(c, x), F.mul(d, y)));
          }
          actions.insert(std::move(perm));
        }
  std::vector<Perm> elems(actions.begin(), actions.end());
  return FiniteGroup::from_permutation_elements(std::move(elems),
                                                "builtin:PSL(2," + std::to_string(q) + ")");
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const long long n = static_cast<long long>(A.order()) * B.order();
  if (n > kOrderCap)
    throw CapExceeded("direct product order " + std::to_string(n) + " exceeds table cap");
  const int nb = B.order();
  auto idx = [nb](int a, int b) { return a * nb + b; };
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a1 = 0; a1 < A.order(); ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      labels[idx(a1, b1)] = "(" + A.label(a1) + "," + B.label(b1) + ")";
      for (int a2 = 0; a2 < A.order(); ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          rows[idx(a1, b1)][idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
    }
  return FiniteGroup::from_cayley_table(rows, std::move(labels), "builtin:product");
}

// Splits "S3xC2xC2" on 'x'/'X' at paren depth 0.
std::vector<std::string> split_product(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : name) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == 'x' || ch == 'X') && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string canon_part(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (ch == ' ' || ch == '\t' || ch == '_') continue;
    s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return s;
}

int parse_int_suffix(const std::string& s, size_t from) {
  if (from >= s.size()) return -1;
  for (size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
  return std::stoi(s.substr(from));
}

FiniteGroup builtin_part(const std::string& raw) {
  const std::string s = canon_part(raw);
  if (s.empty()) throw UnknownFamily("empty group name");
  FiniteGroup G = [&]() -> FiniteGroup {
    if (s == "Q8") return quaternion8();
    if (s == "T") return dicyclic12();
    if (s.rfind("PSL(2,", 0) == 0 && s.back() == ')') {
      int q = parse_int_suffix(s.substr(0, s.size() - 1), 6);
      if (q > 0) return psl2(q);
    }
    if (s[0] == 'C') {
      int n = parse_int_suffix(s, 1);
      if (n > 0) return cyclic(n);
    }
    if (s[0] == 'D') {
      int n = parse_int_suffix(s, 1);
      if (n > 0) return dihedral(n);
    }
    if (s[0] == 'S') {
      int n = parse_int_suffix(s, 1);
      if (n > 0) return symmetric(n);
    }
    if (s[0] == 'A') {
      int n = parse_int_suffix(s, 1);
      if (n > 0) return alternating(n);
    }
    throw UnknownFamily("unknown builtin group '" + raw + "'");
  }();
  G.set_name(s);
  return G;
}

}  // namespace

FiniteGroup builtin(const std::string& name) {
  std::vector<std::string> parts = split_product(name);
  FiniteGroup G = builtin_part(parts[0]);
  std::string full = G.name();
  for (size_t i = 1; i < parts.size(); ++i) {
    FiniteGroup H = builtin_part(parts[i]);
    full += "x" + H.name();
    G = direct_product(G, H);
    G.set_name(full);
  }
  return G;
}

std::vector<std::string> list_builtins() {
  return {"C6",        "C12",       "S3",        "S4",        "S5",       "A4",
          "A5",        "D8",        "D10",       "D12",       "Q8",       "T",
          "S3xC2",     "A4xC2",     "PSL(2,4)",  "PSL(2,5)",  "PSL(2,7)", "PSL(2,8)",
          "PSL(2,9)",  "PSL(2,11)", "PSL(2,13)"};
}

}  // namespace nilgraph
