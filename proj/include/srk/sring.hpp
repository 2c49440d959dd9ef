#ifndef SRK_SRING_HPP
#define SRK_SRING_HPP

#include <optional>

#include "srk/ring.hpp"

namespace srk {

// Element of the integral group ring Z[G], as an exact coefficient vector.
struct GroupRingElem {
  std::vector<long long> c;
  bool operator==(const GroupRingElem& o) const { return c == o.c; }
};

GroupRingElem xi(const AbelianGroup& G, const Subset& X);  // indicator sum
GroupRingElem gr_add(const GroupRingElem& u, const GroupRingElem& v);
GroupRingElem gr_mul(const AbelianGroup& G, const GroupRingElem& u, const GroupRingElem& v);
GroupRingElem gr_hadamard(const GroupRingElem& u, const GroupRingElem& v);
GroupRingElem gr_scale(long long k, const GroupRingElem& u);

// (xi(A) * xi(B)) restricted pointwise to the support of xi(C).
GroupRingElem triple_product(const AbelianGroup& G, const Subset& A, const Subset& B,
                             const Subset& C);

struct sring_invalid : invalid_input {
  std::string kind;           // not-a-partition | identity-class-not-singleton |
                              // not-inverse-closed | product-not-in-span
  std::vector<int> witness;   // offending class indices / elements
  sring_invalid(std::string kind_, std::vector<int> witness_, const std::string& msg);
};

// A validated Schur ring over an abelian group: a partition of the group
// whose indicator sums span a subring of Z[G].
//
// Axioms checked at construction: the classes partition G, the class of 0 is
// the singleton {0}, negation maps classes onto classes, and every product
// xi(X) xi(Y) has constant coefficients on every class. Structure constants
// are cached.
struct SRing {
  AbelianGroup group;
  std::vector<Subset> basic_sets;  // ordered by least element
  std::vector<int> class_of;
  std::vector<int> sc;  // structure constants, rank^3

  int rank() const { return (int)basic_sets.size(); }
  int c(int i, int j, int k) const {
    int r = rank();
    return sc[(size_t)(i * r + j) * r + k];
  }
  bool operator==(const SRing& o) const {
    return group == o.group && basic_sets == o.basic_sets;
  }
};

SRing validate_sring(const AbelianGroup& G, std::vector<Subset> partition);
Subset basic_set_of(const SRing& A, Elem x);
bool in_star(const SRing& A, const Subset& X);  // union of basic sets?
std::vector<Subset> a_subgroups(const SRing& A, const Caps& caps = {});

// Every element of K maps every basic set onto a basic set (the partition is
// permuted, not necessarily fixed classwise).
bool is_k_invariant(const SRing& A, const AutGroup& K);
// The stricter predicate: t maps every basic set onto itself.
bool fixes_all_classes(const SRing& A, const Endo& t);

std::vector<Subset> h_k(const SRing& A, const AutGroup& K, const Caps& caps = {});
bool is_k_primitive(const SRing& A, const AutGroup& K, const Caps& caps = {});
bool is_primitive(const SRing& A, const Caps& caps = {});

// X^[p] = { p*x : x in X, |(x+E) cap X| != 0 mod p }, E the p-torsion
// subgroup. X must be a basic set. May be empty.
Subset power_map(const SRing& A, const Subset& X, int p);

SRing cyclotomic_sring(const CommRing& R, const AutGroup& K);
std::optional<AutGroup> is_cyclotomic(const SRing& A, const CommRing& R);
bool is_quasiprimitive(const SRing& A, const CommRing& R, const Caps& caps = {});

std::optional<Endo> cayley_isomorphic(const SRing& A, const SRing& B, const Caps& caps = {});

struct PermutationSet {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

// Transitivity module of a permutation group containing the regular
// representation of G: basic sets are the orbits of the stabilizer of 0.
SRing schurian_sring(const AbelianGroup& G, const PermutationSet& gamma, const Caps& caps = {});

}  // namespace srk

#endif
