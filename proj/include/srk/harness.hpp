#ifndef SRK_HARNESS_HPP
#define SRK_HARNESS_HPP

#include "srk/duality.hpp"
#include "srk/enumerate.hpp"
#include "srk/separating.hpp"

namespace srk {

struct VerificationReport {
  std::string statement_id;
  long instances_checked = 0;
  std::vector<std::string> violations;
  bool vacuous = false;
  std::vector<std::string> notes;
  double elapsed_sec = 0;

  bool pass() const { return violations.empty(); }
};

// Every S-ring over G is invariant under the coprime-power maps; the two
// enumeration engines must also agree.
VerificationReport verify_schur_multiplier(const AbelianGroup& G, const Caps& caps = {});

// Quasiprimitive S-rings over R are of rank 2 or cyclotomic over a field,
// under the locality hypothesis on the primary components (thm1: all
// components local, thm3: at least one).
VerificationReport verify_theorem1(const CommRing& R, const Caps& caps = {});
VerificationReport verify_theorem3(const CommRing& R, const Caps& caps = {});

// K-primitive K-invariant S-rings over G are of rank 2 or realized by unit
// multiplications of a field built from a local pair on the Sylow
// p-subgroup.
VerificationReport verify_theorem2(const AbelianGroup& G, const AutGroup& K, int p,
                                   const Caps& caps = {});

// The correspondence between local rings on P and local pairs on P, with
// isomorphism matching conjugacy.
VerificationReport verify_theorem4(const AbelianGroup& P, const Caps& caps = {});

// Composite-order groups with a cyclic Sylow subgroup admit only rank-2
// primitive S-rings.
VerificationReport verify_wielandt(const AbelianGroup& G, const Caps& caps = {});

// The power map lands in the span for every S-ring; under primitivity with
// the full stabilizer of the partition it collapses to the identity.
VerificationReport verify_lemma_power(const AbelianGroup& G, const Caps& caps = {});

// Orbits of the Sylow part of a local pair group are the complement cosets;
// dual orbits are differences of nested invariant subgroups.
VerificationReport verify_corollary_42(const AbelianGroup& P, const Caps& caps = {});

// Separation scan over every S-ring on G.
VerificationReport verify_separating(const AbelianGroup& G, const Caps& caps = {});

// Duality checks over every S-ring on G with the coprime-power group.
VerificationReport verify_duality(const AbelianGroup& G, const Caps& caps = {});

// The rank-3 quasiprimitive non-cyclotomic S-ring over Z_p x Z_p, p odd.
std::pair<CommRing, SRing> build_counterexample(int p);
VerificationReport verify_counterexample(int p, const Caps& caps = {});

// The canonical local pair on a p-group of composite order; every
// K-primitive K-invariant S-ring for its K has rank 2.
LocalPair prop23_pair(const AbelianGroup& P, const Caps& caps = {});
VerificationReport verify_prop13(const AbelianGroup& P, const Caps& caps = {});

}  // namespace srk

#endif
