#include "srk/sring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace srk {

GroupRingElem xi(const AbelianGroup& G, const Subset& X) {
  GroupRingElem u;
  u.c.assign(G.order, 0);
  for (Elem x : X) u.c[x] += 1;
  return u;
}

GroupRingElem gr_add(const GroupRingElem& u, const GroupRingElem& v) {
  GroupRingElem w = u;
  for (size_t i = 0; i < w.c.size(); ++i) w.c[i] += v.c[i];
  return w;
}

GroupRingElem gr_mul(const AbelianGroup& G, const GroupRingElem& u, const GroupRingElem& v) {
  GroupRingElem w;
  w.c.assign(G.order, 0);
  for (Elem a = 0; a < G.order; ++a) {
    if (u.c[a] == 0) continue;
    for (Elem b = 0; b < G.order; ++b) {
      if (v.c[b] == 0) continue;
      w.c[G.add(a, b)] += u.c[a] * v.c[b];
    }
  }
  return w;
}

GroupRingElem gr_hadamard(const GroupRingElem& u, const GroupRingElem& v) {
  GroupRingElem w = u;
  for (size_t i = 0; i < w.c.size(); ++i) w.c[i] *= v.c[i];
  return w;
}

GroupRingElem gr_scale(long long k, const GroupRingElem& u) {
  GroupRingElem w = u;
  for (auto& x : w.c) x *= k;
  return w;
}

GroupRingElem triple_product(const AbelianGroup& G, const Subset& A, const Subset& B,
                             const Subset& C) {
  return gr_hadamard(gr_mul(G, xi(G, A), xi(G, B)), xi(G, C));
}

sring_invalid::sring_invalid(std::string kind_, std::vector<int> witness_, const std::string& msg)
    : invalid_input(msg), kind(std::move(kind_)), witness(std::move(witness_)) {}

SRing validate_sring(const AbelianGroup& G, std::vector<Subset> partition) {
  for (auto& s : partition) std::sort(s.begin(), s.end());
  std::sort(partition.begin(), partition.end(),
            [](const Subset& a, const Subset& b) { return a < b; });

  SRing A;
  A.group = G;
  A.class_of.assign(G.order, -1);
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty())
      throw sring_invalid("not-a-partition", {}, "empty class in partition");
    for (Elem x : partition[i]) {
      if (x < 0 || x >= G.order)
        throw sring_invalid("not-a-partition", {x}, "element out of range");
      if (A.class_of[x] != -1)
        throw sring_invalid("not-a-partition", {x},
                            "element " + std::to_string(x) + " covered twice");
      A.class_of[x] = (int)i;
    }
  }
  for (Elem x = 0; x < G.order; ++x)
    if (A.class_of[x] == -1)
      throw sring_invalid("not-a-partition", {x},
                          "element " + std::to_string(x) + " not covered");
  // classes are sorted by least element because each class is sorted and the
  // list is sorted lexicographically
  A.basic_sets = std::move(partition);

  if (A.basic_sets[A.class_of[0]].size() != 1)
    throw sring_invalid("identity-class-not-singleton", {0},
                        "the class of the identity must be {0}");

  int r = A.rank();
  for (int i = 0; i < r; ++i) {
    Subset negated = A.basic_sets[i];
    for (auto& x : negated) x = G.neg(x);
    std::sort(negated.begin(), negated.end());
    int j = A.class_of[negated[0]];
    if (A.basic_sets[j] != negated)
      throw sring_invalid("not-inverse-closed", {i},
                          "negation of class " + std::to_string(i) + " is not a class");
  }

  A.sc.assign((size_t)r * r * r, 0);
  std::vector<long long> conv(G.order);
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      std::fill(conv.begin(), conv.end(), 0);
      for (Elem a : A.basic_sets[i])
        for (Elem b : A.basic_sets[j]) conv[G.add(a, b)] += 1;
      for (int k = 0; k < r; ++k) {
        const Subset& Z = A.basic_sets[k];
        long long val = conv[Z[0]];
        for (Elem z : Z) {
          if (conv[z] != val)
            throw sring_invalid(
                "product-not-in-span", {i, j, Z[0], z},
                "product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                    " has coefficient " + std::to_string(val) + " at " + std::to_string(Z[0]) +
                    " but " + std::to_string(conv[z]) + " at " + std::to_string(z));
        }
        A.sc[(size_t)(i * r + j) * r + k] = (int)val;
        A.sc[(size_t)(j * r + i) * r + k] = (int)val;
      }
    }
  }
  return A;
}

Subset basic_set_of(const SRing& A, Elem x) {
  if (x < 0 || x >= A.group.order) throw invalid_input("element out of range");
  return A.basic_sets[A.class_of[x]];
}

bool in_star(const SRing& A, const Subset& X) {
  std::set<int> classes;
  size_t total = 0;
  for (Elem x : X) {
    if (x < 0 || x >= A.group.order) throw invalid_input("element out of range");
    classes.insert(A.class_of[x]);
  }
  for (int c : classes) total += A.basic_sets[c].size();
  return total == X.size();
}

std::vector<Subset> a_subgroups(const SRing& A, const Caps& caps) {
  std::vector<Subset> out;
  for (const Subset& H : all_subgroups(A.group, caps))
    if (in_star(A, H)) out.push_back(H);
  return out;
}

bool is_k_invariant(const SRing& A, const AutGroup& K) {
  if (K.degree() != A.group.order) throw invalid_input("automorphism group degree mismatch");
  for (const Endo& t : K.elems) {
    for (const Subset& X : A.basic_sets) {
      Subset img = apply_to_set(t, X);
      if (A.basic_sets[A.class_of[img[0]]] != img) return false;
    }
  }
  return true;
}

bool fixes_all_classes(const SRing& A, const Endo& t) {
  for (const Subset& X : A.basic_sets)
    if (apply_to_set(t, X) != X) return false;
  return true;
}

std::vector<Subset> h_k(const SRing& A, const AutGroup& K, const Caps& caps) {
  std::vector<Subset> out;
  for (const Subset& H : a_subgroups(A, caps)) {
    bool inv = true;
    for (const Endo& t : K.elems)
      if (apply_to_set(t, H) != H) {
        inv = false;
        break;
      }
    if (inv) out.push_back(H);
  }
  return out;
}

bool is_k_primitive(const SRing& A, const AutGroup& K, const Caps& caps) {
  for (const Subset& H : h_k(A, K, caps))
    if ((int)H.size() != 1 && (int)H.size() != A.group.order) return false;
  return true;
}

bool is_primitive(const SRing& A, const Caps& caps) {
  return is_k_primitive(A, AutGroup::trivial(A.group.order), caps);
}

Subset power_map(const SRing& A, const Subset& X, int p) {
  if (!is_prime(p)) throw invalid_input("power map needs a prime");
  if (A.group.order % p != 0) throw invalid_input("prime does not divide the group order");
  Subset sorted = X;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || A.basic_sets[A.class_of[sorted[0]]] != sorted)
    throw invalid_input("power map argument must be a basic set");
  const AbelianGroup& G = A.group;
  Subset E;
  for (Elem g = 0; g < G.order; ++g)
    if (G.scalar(p, g) == 0) E.push_back(g);
  Subset out;
  for (Elem x : sorted) {
    Subset coset(E.size());
    for (size_t i = 0; i < E.size(); ++i) coset[i] = G.add(x, E[i]);
    std::sort(coset.begin(), coset.end());
    if ((int)set_intersect(coset, sorted).size() % p != 0) out.push_back(G.scalar(p, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SRing cyclotomic_sring(const CommRing& R, const AutGroup& K) {
  AutGroup KR = k_r(R);
  for (const Endo& t : K.elems)
    if (!KR.contains(t))
      throw invalid_input("cyclotomic construction needs K inside the unit multiplications");
  return validate_sring(R.add, orbits(K, R.add));
}

std::optional<AutGroup> is_cyclotomic(const SRing& A, const CommRing& R) {
  if (A.group != R.add) throw invalid_input("S-ring and ring live on different groups");
  std::vector<Endo> fixing;
  for (const Endo& t : k_r(R).elems)
    if (fixes_all_classes(A, t)) fixing.push_back(t);
  AutGroup K = AutGroup::from_elements(std::move(fixing));
  if (orbits(K, A.group) == A.basic_sets) return K;
  return std::nullopt;
}

bool is_quasiprimitive(const SRing& A, const CommRing& R, const Caps& caps) {
  AutGroup KR = k_r(R);
  if (!is_k_invariant(A, KR))
    throw invalid_input("not an S-ring over the ring: partition is not unit-invariant");
  return is_k_primitive(A, KR, caps);
}

std::optional<Endo> cayley_isomorphic(const SRing& A, const SRing& B, const Caps& caps) {
  if (A.group.order != B.group.order) return std::nullopt;
  if (A.group.order > caps.group) throw cap_exceeded("Cayley isomorphism search exceeds cap");
  if (A.rank() != B.rank()) return std::nullopt;
  std::multiset<size_t> sa, sb;
  for (auto& s : A.basic_sets) sa.insert(s.size());
  for (auto& s : B.basic_sets) sb.insert(s.size());
  if (sa != sb) return std::nullopt;
  std::optional<Endo> found;
  for_each_isomorphism(A.group, B.group, [&](const Endo& f) {
    for (const Subset& X : A.basic_sets) {
      Subset img = apply_to_set(f, X);
      if (B.basic_sets[B.class_of[img[0]]] != img) return true;
    }
    found = f;
    return false;
  });
  return found;
}

SRing schurian_sring(const AbelianGroup& G, const PermutationSet& gamma, const Caps& caps) {
  int n = G.order;
  if (gamma.degree != n) throw invalid_input("permutation degree must equal the group order");
  for (const auto& t : gamma.generators) {
    if ((int)t.size() != n) throw invalid_input("permutation table has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : t) {
      if (v < 0 || v >= n || seen[v]) throw invalid_input("generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<Endo> closure = close_tables(gamma.generators, n, caps.closure);
  auto has = [&](const Endo& t) {
    return std::binary_search(closure.begin(), closure.end(), t);
  };
  for (Elem g = 0; g < n; ++g) {
    Endo tr(n);
    for (Elem x = 0; x < n; ++x) tr[x] = G.add(x, g);
    if (!has(tr))
      throw invalid_input("generated group does not contain the regular representation");
  }
  std::vector<Endo> stab;
  for (const Endo& t : closure)
    if (t[0] == 0) stab.push_back(t);
  std::vector<char> done(n, 0);
  std::vector<Subset> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    Subset orb;
    for (const Endo& t : stab) orb.push_back(t[x]);
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    for (Elem y : orb) done[y] = 1;
    classes.push_back(std::move(orb));
  }
  // validation acts as a self-check here: the transitivity module is always
  // an S-ring
  return validate_sring(G, classes);
}

}  // namespace srk
