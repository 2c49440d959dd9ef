#include "srk/duality.hpp"

#include <algorithm>
#include <map>

namespace srk {

int char_pairing(const AbelianGroup& G, Elem a, Elem x) {
  int m = G.exponent;
  auto ra = G.decode(a), rx = G.decode(x);
  long long s = 0;
  for (size_t i = 0; i < G.factors.size(); ++i)
    s += (long long)(m / G.factors[i]) * ra[i] % m * rx[i] % m;
  return (int)(s % m);
}

CycRing::Val char_sum(const AbelianGroup& G, const CycRing& F, Elem a, const Subset& X) {
  CycRing::Val v = F.zero();
  for (Elem x : X) v = F.add(v, F.root_power(char_pairing(G, a, x)));
  return v;
}

Subset annihilator(const AbelianGroup& G, const Subset& H) {
  Subset out;
  for (Elem a = 0; a < G.order; ++a) {
    bool triv = true;
    for (Elem h : H)
      if (char_pairing(G, a, h) != 0) {
        triv = false;
        break;
      }
    if (triv) out.push_back(a);
  }
  return out;
}

SRing dual_sring(const SRing& A) {
  const AbelianGroup& G = A.group;
  CycRing F(G.exponent);
  std::map<std::vector<CycRing::Val>, Subset> classes;
  for (Elem a = 0; a < G.order; ++a) {
    std::vector<CycRing::Val> key;
    key.reserve(A.basic_sets.size());
    for (const Subset& X : A.basic_sets) key.push_back(char_sum(G, F, a, X));
    classes[key].push_back(a);
  }
  std::vector<Subset> parts;
  for (auto& kv : classes) parts.push_back(kv.second);
  SRing dual = validate_sring(G, std::move(parts));
  if (dual.rank() != A.rank()) throw internal_error("dual ring changed rank");
  return dual;
}

Endo dual_automorphism(const AbelianGroup& G, const Endo& sigma) {
  if (!is_automorphism(G, sigma)) throw invalid_input("dual of a non-bijective table");
  Endo inv = inverse_table(sigma);
  int m = G.exponent;
  Endo out(G.order);
  for (Elem a = 0; a < G.order; ++a) {
    // solve <a', e_i> = <a, sigma^{-1}(e_i)> coordinate by coordinate
    std::vector<int> res(G.factors.size(), 0);
    for (size_t i = 0; i < G.factors.size(); ++i) {
      int d = G.factors[i];
      if (d == 1) continue;
      int rhs = char_pairing(G, a, inv[G.unit_vector(i)]);
      int step = m / d;
      if (rhs % step != 0) throw internal_error("dual automorphism equation unsolvable");
      res[i] = (rhs / step) % d;
    }
    out[a] = G.encode(res);
  }
  if (!is_automorphism(G, out)) throw internal_error("dual table is not an automorphism");
  return out;
}

AutGroup dual_aut_group(const AbelianGroup& G, const AutGroup& K) {
  std::vector<Endo> elems;
  elems.reserve(K.elems.size());
  for (const Endo& t : K.elems) elems.push_back(dual_automorphism(G, t));
  AutGroup out = AutGroup::from_elements(std::move(elems));
  std::vector<Endo> gens;
  for (const Endo& g : K.gens) gens.push_back(dual_automorphism(G, g));
  out.gens = std::move(gens);
  return out;
}

DualityReport verify_duality_theorem(const SRing& A, const AutGroup& K, const Caps& caps) {
  DualityReport rep;
  rep.notes.push_back("Aut(G) is identified with the automorphisms of the label group "
                      "through the dual action");
  SRing dual = dual_sring(A);
  SRing dd = dual_sring(dual);
  ++rep.checked;
  if (!(dd == A)) {
    rep.pass = false;
    rep.violations.push_back("double dual differs from the original partition");
  }
  ++rep.checked;
  if (dual.rank() != A.rank()) {
    rep.pass = false;
    rep.violations.push_back("dual rank differs");
  }
  AutGroup Khat = dual_aut_group(A.group, K);
  ++rep.checked;
  if (is_k_invariant(A, K) != is_k_invariant(dual, Khat)) {
    rep.pass = false;
    rep.violations.push_back("invariance under K is not equivalent for the dual");
  }
  // H in H_K(A) iff its annihilator is in H_K(dual)
  std::vector<Subset> hk = h_k(A, K, caps);
  std::vector<Subset> hk_dual = h_k(dual, Khat, caps);
  auto member = [](const std::vector<Subset>& list, const Subset& s) {
    return std::find(list.begin(), list.end(), s) != list.end();
  };
  for (const Subset& H : all_subgroups(A.group, caps)) {
    ++rep.checked;
    bool lhs = member(hk, H);
    bool rhs = member(hk_dual, annihilator(A.group, H));
    if (lhs != rhs) {
      rep.pass = false;
      std::string hs;
      for (Elem x : H) hs += std::to_string(x) + " ";
      rep.violations.push_back("annihilator correspondence fails for subgroup { " + hs + "}");
    }
  }
  ++rep.checked;
  if (is_k_primitive(A, K, caps) != is_k_primitive(dual, Khat, caps)) {
    rep.pass = false;
    rep.violations.push_back("primitivity is not equivalent for the dual");
  }
  return rep;
}

}  // namespace srk
