#include "srk/separating.hpp"

#include <algorithm>

namespace srk {

namespace {

std::string show(const Subset& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// every h in H translates Z onto itself, i.e. H <= rad(Z)
bool translates_onto(const AbelianGroup& G, const Subset& H, const Subset& Z) {
  for (Elem h : H)
    for (Elem z : Z)
      if (!set_contains(Z, G.add(h, z))) return false;
  return true;
}

}  // namespace

bool separates(const SRing& A, const Subset& H, const Subset& X) {
  Subset sorted = X;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || A.basic_sets[A.class_of[sorted[0]]] != sorted)
    throw invalid_input("separation is defined for basic sets");
  Subset inter = set_intersect(sorted, H);
  Subset outer = set_difference(sorted, H);
  if (inter.empty() || outer.empty()) return false;
  // the whole of H must translate X \ H to itself; requiring only the
  // subgroup generated by X cap H admits counterexamples to the conclusion
  return translates_onto(A.group, H, outer);
}

std::vector<Subset> separating_subgroups(const SRing& A, const Caps& caps) {
  std::vector<Subset> out;
  for (const Subset& H : all_subgroups(A.group, caps)) {
    for (const Subset& X : A.basic_sets)
      if (separates(A, H, X)) {
        out.push_back(H);
        break;
      }
  }
  // a separating subgroup is never an A-subgroup
  for (const Subset& H : out)
    if (in_star(A, H)) throw internal_error("separating subgroup lies in the span");
  return out;
}

SeparationReport check_separating_theorem(const SRing& A, const Caps& caps) {
  return check_separating_theorem(A, all_subgroups(A.group, caps));
}

SeparationReport check_separating_theorem(const SRing& A, const std::vector<Subset>& subgroups) {
  SeparationReport rep;
  const AbelianGroup& G = A.group;

  // cross-check of the cached structure constants: the triple product
  // xi(X) xi(-X) . xi(X) must be a multiple of xi(X)
  for (int i = 0; i < A.rank(); ++i) {
    const Subset& X = A.basic_sets[i];
    Subset negX = apply_to_set([&] {
      Endo t(G.order);
      for (Elem x = 0; x < G.order; ++x) t[x] = G.neg(x);
      return t;
    }(), X);
    int inv = A.class_of[negX[0]];
    GroupRingElem tp = triple_product(G, X, negX, X);
    long long a_x = A.c(i, inv, i);
    if (tp == gr_scale(a_x, xi(G, X))) continue;
    rep.violations.push_back("triple product of class " + std::to_string(i) +
                             " is not a multiple of the class");
  }

  for (const Subset& H : subgroups) {
    int hits = 0;
    for (const Subset& X : A.basic_sets) {
      ++rep.checked;
      // inline fast path of separates() for bulk scans
      Subset inter = set_intersect(X, H);
      if (inter.empty() || inter.size() == X.size()) continue;
      Subset outer = set_difference(X, H);
      if (!translates_onto(G, H, outer)) continue;
      ++hits;
      SeparationWitness w;
      w.H = H;
      w.X = X;
      w.span = generated_subgroup(G, X);
      w.radical = subset_radical(G, X);
      if (set_difference(w.span, w.radical) != X)
        rep.violations.push_back("conclusion X = <X> \\ rad(X) fails for H=" + show(H) +
                                 " X=" + show(X));
      if (!is_subset_of(w.radical, H) || !is_subset_of(H, w.span))
        rep.violations.push_back("rad(X) <= H <= <X> fails for H=" + show(H) +
                                 " X=" + show(X));
      if (H == w.radical || H == w.span)
        rep.violations.push_back("separating subgroup equals rad(X) or <X> for H=" + show(H));
      rep.witnesses.push_back(std::move(w));
    }
    if (hits > 1)
      rep.violations.push_back("subgroup " + show(H) + " separates more than one basic set");
  }
  return rep;
}

CheckReport check_corollary_32(const SRing& A, const AutGroup& K, const Caps& caps) {
  if (!is_k_invariant(A, K)) throw invalid_input("ring is not K-invariant");
  if (!is_k_primitive(A, K, caps)) throw invalid_input("ring is not K-primitive");
  CheckReport rep;
  bool any = false;
  for (const Subset& H : separating_subgroups(A, caps)) {
    bool inv = true;
    for (const Endo& t : K.elems)
      if (apply_to_set(t, H) != H) {
        inv = false;
        break;
      }
    if (!inv) continue;
    any = true;
    ++rep.checked;
    if (A.rank() != 2) {
      rep.pass = false;
      rep.violations.push_back("K-invariant separating subgroup " + show(H) +
                               " but rank is " + std::to_string(A.rank()));
    }
  }
  rep.vacuous = !any;
  return rep;
}

CheckReport check_lemma_33(const SRing& A, const AutGroup& K, const Subset& H,
                           const Caps& caps) {
  if (!is_k_invariant(A, K)) throw invalid_input("ring is not K-invariant");
  if (!is_k_primitive(A, K, caps)) throw invalid_input("ring is not K-primitive");
  if ((int)H.size() >= A.group.order || H.size() <= 1 || !is_subgroup(A.group, H))
    throw invalid_input("H must be a proper nontrivial subgroup");
  for (const Endo& t : K.elems)
    if (apply_to_set(t, H) != H) throw invalid_input("H must be K-invariant");
  CheckReport rep;
  for (const Subset& Hp : a_subgroups(A, caps)) {
    ++rep.checked;
    if (is_subset_of(Hp, H) && Hp.size() != 1) {
      rep.pass = false;
      rep.violations.push_back("nontrivial A-subgroup " + show(Hp) + " inside " + show(H));
    }
    if (is_subset_of(H, Hp) && (int)Hp.size() != A.group.order) {
      rep.pass = false;
      rep.violations.push_back("proper A-subgroup " + show(Hp) + " contains " + show(H));
    }
  }
  return rep;
}

}  // namespace srk
