#pragma once

#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/nilpotentizer.hpp"
#include "nilgraph/series.hpp"

namespace nilgraph {

struct PrimeProfile {
  int p = 0;
  bool n_p = false;             // nil_G(x) a subgroup for every p-element x
  bool sn_p = false;            // S_G(x) a subgroup for every p-element x
  bool e_p = false;             // E_G(x) a subgroup for every p-element x
  bool sylow_abelian = false;
};

struct ClassProfile {
  bool n_group = false;
  bool sn_group = false;
  bool e_group = false;
  bool ac_group = false;
  bool centerless = false;
  bool has_normal_abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  bool weakly_nilpotent = false;
  std::vector<PrimeProfile> per_prime;  // one entry per prime dividing |G|
};

// Per-element S_G(x) / E_G(x) tables. The subnormalizer table is computed
// once per conjugacy-class representative and translated (S_G(x^t) =
// S_G(x)^t); Engel sets are computed element by element.
std::vector<ElementSet> subnormalizer_table(PairContext& ctx, int threads = 1);
std::vector<ElementSet> engel_table(const FiniteGroup& G, int threads = 1);

bool is_p_element(const FiniteGroup& G, int x, int p);
// Indices of the p-elements; throws PrimeNotDividing if p doesn't divide |G|.
std::vector<int> p_elements(const FiniteGroup& G, int p);

// Full profile from precomputed tables.
ClassProfile classify(PairContext& ctx, const NilTable& nil,
                      const std::vector<ElementSet>& sn_of,
                      const std::vector<ElementSet>& engel_of);

// Standalone predicates (each builds what it needs).
bool is_n_group(const FiniteGroup& G);
bool is_np_group(const FiniteGroup& G, int p);
bool is_sn_group(const FiniteGroup& G);
bool is_snp_group(const FiniteGroup& G, int p);
bool is_e_group(const FiniteGroup& G);
bool is_ep_group(const FiniteGroup& G, int p);
bool is_ac_group(const FiniteGroup& G);
bool is_centerless(const FiniteGroup& G);

// One Sylow p-subgroup by greedy normalizer growth (all Sylow p-subgroups
// are conjugate, so conjugation-invariant questions may use any one).
ElementSet sylow_subgroup(const FiniteGroup& G, int p);
bool sylow_abelian(const FiniteGroup& G, int p);

// Minimal normal subgroups, exactly: every minimal normal subgroup is the
// normal closure of any of its nontrivial elements.
std::vector<ElementSet> minimal_normal_subgroups(const FiniteGroup& G);
bool has_nontrivial_normal_abelian_subgroup(const FiniteGroup& G);
bool is_simple(const FiniteGroup& G);

// Coset group G/N with coset labels; throws NotNormal / NotASubgroup.
FiniteGroup quotient(const FiniteGroup& G, const ElementSet& N);

bool is_solvable(const FiniteGroup& G);
bool is_weakly_nilpotent(PairContext& ctx);

}  // namespace nilgraph
