#ifndef SRK_RING_HPP
#define SRK_RING_HPP

#include <optional>

#include "srk/group.hpp"

namespace srk {

// Finite commutative ring with identity. Multiplication is a full table
// over the additive group's element indices; every axiom is checked by
// exhaustion at construction.
struct CommRing {
  AbelianGroup add;
  std::vector<int> mul;  // row-major |R| x |R|
  int one = 0;

  int order() const { return add.order; }
  Elem mul_at(Elem a, Elem b) const { return mul[(size_t)a * add.order + b]; }
};

CommRing ring_from_tables(AbelianGroup add, std::vector<int> mul, int one);
CommRing make_zn(int n);
CommRing make_gf(int p, int k);
CommRing make_dual_numbers(int p);  // Z_p[t]/(t^2)
CommRing make_product(const CommRing& a, const CommRing& b);

struct UnitGroup {
  Subset units;
  std::vector<int> inv;  // indexed by element; -1 for non-units
};

UnitGroup units(const CommRing& R);
bool is_field(const CommRing& R);
AutGroup k_r(const CommRing& R);  // multiplications by units
Subset ring_radical(const CommRing& R);
bool is_local(const CommRing& R);
std::vector<CommRing> primary_components(const CommRing& R);
bool generated_by_units(const CommRing& R);
bool ring_identical(const CommRing& a, const CommRing& b);
bool ring_isomorphic(const CommRing& a, const CommRing& b, const Caps& caps = {});

// An abelian automorphism group with a base point whose orbit has a
// subgroup as complement. K acts regularly and faithfully on the orbit.
struct LocalPair {
  AbelianGroup P;
  AutGroup K;
  Elem e = 0;
  Subset orbit;
  Subset complement;
};

std::optional<LocalPair> is_local_pair(const AbelianGroup& P, const AutGroup& K, Elem e);
CommRing ring_from_local_pair(const LocalPair& pair);
LocalPair local_pair_from_ring(const CommRing& R);

// All local pairs, grouped into conjugacy classes of K under the full
// automorphism group of P.
std::vector<std::vector<LocalPair>> enumerate_local_pairs(const AbelianGroup& P,
                                                          const Caps& caps = {});

}  // namespace srk

#endif
