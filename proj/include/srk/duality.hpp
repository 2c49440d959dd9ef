#ifndef SRK_DUALITY_HPP
#define SRK_DUALITY_HPP

#include "srk/cyclotomic.hpp"
#include "srk/sring.hpp"

namespace srk {

// The character group of G is identified with G itself through the pairing
// <a, x> = sum_i (m/d_i) a_i x_i (mod m), m the exponent. The character with
// label a sends x to zeta_m^<a,x>.
int char_pairing(const AbelianGroup& G, Elem a, Elem x);

CycRing::Val char_sum(const AbelianGroup& G, const CycRing& F, Elem a, const Subset& X);

// Labels of the characters that are trivial on H.
Subset annihilator(const AbelianGroup& G, const Subset& H);

// Partition of the character labels by equality of the character-sum vector
// over the basic sets. Rank is preserved; the result is validated.
SRing dual_sring(const SRing& A);

// The automorphism of the label group with chi_{a'} = chi_a o sigma^{-1}.
Endo dual_automorphism(const AbelianGroup& G, const Endo& sigma);
AutGroup dual_aut_group(const AbelianGroup& G, const AutGroup& K);

struct DualityReport {
  bool pass = true;
  bool vacuous = false;
  long checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

// For an S-ring A and K <= Aut(G), checks: the double dual is A again, rank
// is preserved, A is K-invariant iff the dual is, and H is a K-invariant
// A-subgroup iff its annihilator is a K-invariant subgroup of the dual.
DualityReport verify_duality_theorem(const SRing& A, const AutGroup& K, const Caps& caps = {});

}  // namespace srk

#endif
