#ifndef SRK_GROUP_HPP
#define SRK_GROUP_HPP

#include <functional>
#include <vector>

#include "srk/common.hpp"

namespace srk {

// Finite abelian group presented as a direct product of cyclic groups.
// Elements are indexed 0..order-1 by little-endian mixed-radix encoding over
// the factor list; index 0 is the identity. Written additively throughout.
struct AbelianGroup {
  std::vector<int> factors;
  int order = 1;
  int exponent = 1;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem scalar(long long m, Elem a) const;
  int elem_order(Elem a) const;
  std::vector<int> decode(Elem a) const;
  Elem encode(const std::vector<int>& residues) const;
  Elem unit_vector(int i) const;  // generator of the i-th cyclic factor
  Subset all_elements() const;
  // Multiset of prime-power orders of the cyclic factors, sorted. Equal
  // canonical forms == isomorphic groups.
  std::vector<int> canonical_form() const;

  bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }
};

AbelianGroup make_group(std::vector<int> factors);

Subset generated_subgroup(const AbelianGroup& G, const Subset& X);
Subset subset_radical(const AbelianGroup& G, const Subset& X);
bool is_subgroup(const AbelianGroup& G, const Subset& S);
std::vector<Subset> all_subgroups(const AbelianGroup& G, const Caps& caps = {});
Subset sylow_subgroup(const AbelianGroup& G, int p);

// Endomorphisms as full image tables over element indices.
using Endo = std::vector<int>;

Endo endo_identity(int n);
Endo compose(const Endo& f, const Endo& g);  // x -> f[g[x]]
Endo inverse_table(const Endo& f);
int table_order(const Endo& t);  // order of a bijective table
bool is_endomorphism(const AbelianGroup& G, const Endo& t);
bool is_automorphism(const AbelianGroup& G, const Endo& t);
Endo scalar_endo(const AbelianGroup& G, long long m);
Subset apply_to_set(const Endo& t, const Subset& X);

// Closure of a set of bijective tables under composition. Throws
// cap_exceeded past `cap` elements. Result is sorted and includes the
// identity.
std::vector<Endo> close_tables(const std::vector<Endo>& gens, int degree, long cap);

// A group of automorphisms stored explicitly: `elems` is the full sorted
// element list, closed under composition (hence under inverses too).
struct AutGroup {
  std::vector<Endo> elems;
  std::vector<Endo> gens;

  int order() const { return (int)elems.size(); }
  int degree() const { return elems.empty() ? 0 : (int)elems[0].size(); }
  bool contains(const Endo& t) const;
  bool is_abelian() const;

  static AutGroup trivial(int n);
  static AutGroup from_generators(const AbelianGroup& G, std::vector<Endo> generators,
                                  long cap = 1000000);
  static AutGroup from_elements(std::vector<Endo> elements);

  bool operator==(const AutGroup& o) const { return elems == o.elems; }
};

AutGroup automorphism_group(const AbelianGroup& G, const Caps& caps = {});
AutGroup multiplier_group(const AbelianGroup& G);

// Visits every group isomorphism G1 -> G2 as a full image table; stops early
// when the visitor returns false.
void for_each_isomorphism(const AbelianGroup& G1, const AbelianGroup& G2,
                          const std::function<bool(const Endo&)>& visit);
std::vector<Subset> orbits(const AutGroup& K, const AbelianGroup& G);
Subset orbit_of(const AutGroup& K, Elem x);

AutGroup conjugate(const AutGroup& K, const Endo& sigma);
bool conjugate_in(const AutGroup& ambient, const AutGroup& K1, const AutGroup& K2);
std::vector<AutGroup> subgroups_of(const AutGroup& K);

// Relabels a subgroup as a standalone group: `group` carries the subgroup's
// own cyclic factors and embed[i] is the parent element with index i.
struct SubgroupDecomposition {
  AbelianGroup group;
  std::vector<Elem> embed;
};
SubgroupDecomposition decompose_subgroup(const AbelianGroup& G, const Subset& S);

}  // namespace srk

#endif
