#ifndef SRK_SEPARATING_HPP
#define SRK_SEPARATING_HPP

#include "srk/sring.hpp"

namespace srk {

struct SeparationWitness {
  Subset H;
  Subset X;        // the separated basic set
  Subset span;     // <X>
  Subset radical;  // rad(X)
};

// H separates the basic set X when X meets both H and its complement and
// <X cap H> lies inside rad(X \ H).
bool separates(const SRing& A, const Subset& H, const Subset& X);

// All subgroups separating some basic set. Disjoint from the A-subgroups.
std::vector<Subset> separating_subgroups(const SRing& A, const Caps& caps = {});

struct SeparationReport {
  long checked = 0;
  std::vector<SeparationWitness> witnesses;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// For every separating (H, X): X = <X> \ rad(X) with rad(X) < H < <X>
// strictly, and X is the only basic set H separates.
SeparationReport check_separating_theorem(const SRing& A, const Caps& caps = {});
// Same scan against a precomputed subgroup list (for bulk runs).
SeparationReport check_separating_theorem(const SRing& A, const std::vector<Subset>& subgroups);

struct CheckReport {
  bool pass = true;
  bool vacuous = false;
  long checked = 0;
  std::vector<std::string> violations;
};

// If A is K-invariant and K-primitive and some separating subgroup is
// K-invariant, the rank must be 2.
CheckReport check_corollary_32(const SRing& A, const AutGroup& K, const Caps& caps = {});

// For a proper nontrivial K-invariant subgroup H of a K-invariant,
// K-primitive ring: A-subgroups inside H are trivial, those containing H are
// the whole group.
CheckReport check_lemma_33(const SRing& A, const AutGroup& K, const Subset& H,
                           const Caps& caps = {});

}  // namespace srk

#endif
