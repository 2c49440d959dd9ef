#include "srk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

namespace srk {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double sec() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string show(const Subset& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string show_ring(const SRing& A) {
  std::string out = "[";
  for (size_t i = 0; i < A.basic_sets.size(); ++i)
    out += (i ? " " : "") + show(A.basic_sets[i]);
  return out + "]";
}

bool preserves_partition(const SRing& A, const Endo& t) {
  for (const Subset& X : A.basic_sets) {
    Subset img = apply_to_set(t, X);
    if (A.basic_sets[A.class_of[img[0]]] != img) return false;
  }
  return true;
}

bool stabilizes(const AutGroup& K, const Subset& S) {
  for (const Endo& t : K.elems)
    if (apply_to_set(t, S) != S) return false;
  return true;
}

int small_scan_limit(const Caps& caps, int hard) {
  return std::min(caps.sring_enum, hard);
}

}  // namespace

VerificationReport verify_schur_multiplier(const AbelianGroup& G, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "multiplier";
  if (G.order > small_scan_limit(caps, 12))
    throw cap_exceeded("multiplier scan capped at order 12");
  std::vector<SRing> direct = enumerate_all_srings(G, caps);
  std::vector<SRing> merged = enumerate_k_invariant_srings(G, AutGroup::trivial(G.order), caps);
  rep.notes.push_back("partition scan found " + std::to_string(direct.size()) +
                      " S-rings, orbit-merge scan found " + std::to_string(merged.size()));
  if (direct.size() != merged.size())
    rep.violations.push_back("the two enumeration engines disagree on the count");
  else
    for (size_t i = 0; i < direct.size(); ++i)
      if (!(direct[i] == merged[i])) {
        rep.violations.push_back("the two enumeration engines disagree at index " +
                                 std::to_string(i));
        break;
      }
  AutGroup KG = multiplier_group(G);
  for (const SRing& A : direct) {
    ++rep.instances_checked;
    if (!is_k_invariant(A, KG))
      rep.violations.push_back("S-ring not invariant under coprime-power maps: " + show_ring(A));
  }
  rep.elapsed_sec = timer.sec();
  return rep;
}

namespace {

VerificationReport verify_locality_statement(const CommRing& R, bool require_all,
                                             const char* id, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = id;
  std::vector<CommRing> comps = primary_components(R);
  int local_count = 0;
  for (const CommRing& C : comps)
    if (is_local(C)) ++local_count;
  bool hyp = require_all ? local_count == (int)comps.size() : local_count > 0;
  rep.notes.push_back(std::to_string(local_count) + " of " + std::to_string(comps.size()) +
                      " primary components are local");
  if (!hyp) {
    rep.vacuous = true;
    rep.notes.push_back("locality hypothesis not satisfied; conclusion not asserted");
  }
  AutGroup KR = k_r(R);
  bool fieldp = is_field(R);
  for (const SRing& A : enumerate_k_invariant_srings(R.add, KR, caps)) {
    if (!is_k_primitive(A, KR, caps)) continue;
    ++rep.instances_checked;
    if (A.rank() == 2) continue;
    bool cyc = is_cyclotomic(A, R).has_value();
    if (cyc && fieldp) {
      rep.notes.push_back("rank-" + std::to_string(A.rank()) +
                          " quasiprimitive cyclotomic S-ring over a field: " + show_ring(A));
      continue;
    }
    std::string what = "quasiprimitive S-ring of rank " + std::to_string(A.rank()) +
                       (cyc ? " (cyclotomic, ring not a field)" : " (not cyclotomic)") + ": " +
                       show_ring(A);
    if (hyp)
      rep.violations.push_back(what);
    else
      rep.notes.push_back("conclusion fails, as expected without locality: " + what);
  }
  rep.elapsed_sec = timer.sec();
  return rep;
}

}  // namespace

VerificationReport verify_theorem1(const CommRing& R, const Caps& caps) {
  return verify_locality_statement(R, true, "thm1", caps);
}

VerificationReport verify_theorem3(const CommRing& R, const Caps& caps) {
  return verify_locality_statement(R, false, "thm3", caps);
}

VerificationReport verify_theorem2(const AbelianGroup& G, const AutGroup& K, int p,
                                   const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "thm2";
  if (!is_prime(p)) throw invalid_input("thm2 needs a prime");
  if (G.order % p != 0) {
    rep.vacuous = true;
    rep.notes.push_back("p does not divide the group order");
    rep.elapsed_sec = timer.sec();
    return rep;
  }
  Subset P = sylow_subgroup(G, p);
  Subset Q;
  for (Elem x = 0; x < G.order; ++x)
    if (G.elem_order(x) % p != 0) Q.push_back(x);
  std::vector<Endo> kp_elems;
  for (const Endo& t : K.elems) {
    bool fixes_q = true;
    for (Elem q : Q)
      if (t[q] != q) {
        fixes_q = false;
        break;
      }
    if (fixes_q) kp_elems.push_back(t);
  }
  AutGroup KP = AutGroup::from_elements(std::move(kp_elems));
  bool hyp1 = KP.is_abelian();
  if (!hyp1) rep.notes.push_back("restriction of K to the Sylow subgroup is not abelian");

  // the complement of a K-invariant subgroup of P must be a single orbit of
  // the restricted group
  Subset P0;
  bool hyp2 = false;
  for (const Subset& S : all_subgroups(G, caps)) {
    if (!is_subset_of(S, P) || S.size() == P.size()) continue;
    if (!stabilizes(K, S)) continue;
    Subset O = set_difference(P, S);
    if (orbit_of(KP, O[0]) == O) {
      P0 = S;
      hyp2 = true;
      break;
    }
  }
  if (!hyp2) rep.notes.push_back("no K-invariant subgroup of the Sylow subgroup has a "
                                 "one-orbit complement");
  if (!hyp1 || !hyp2) {
    rep.vacuous = true;
    rep.elapsed_sec = timer.sec();
    return rep;
  }
  rep.notes.push_back("complement subgroup " + show(P0));

  for (const SRing& A : enumerate_k_invariant_srings(G, K, caps)) {
    if (!is_k_primitive(A, K, caps)) continue;
    ++rep.instances_checked;
    if (A.rank() == 2) continue;
    // a rank above 2 is admissible only through the field reconstruction on
    // a full point orbit
    if ((int)P.size() != G.order || P0.size() != 1) {
      rep.violations.push_back("rank " + std::to_string(A.rank()) +
                               " S-ring outside the field case: " + show_ring(A));
      continue;
    }
    Elem e = 1;
    Subset O = orbit_of(K, e);
    if ((int)O.size() != G.order - 1) {
      rep.violations.push_back("point orbit does not cover the nonzero elements");
      continue;
    }
    auto pair = is_local_pair(G, K, e);
    if (!pair) {
      rep.violations.push_back("full-orbit pair rejected");
      continue;
    }
    CommRing F = ring_from_local_pair(*pair);
    if (!is_field(F)) {
      rep.violations.push_back("reconstructed ring is not a field");
      continue;
    }
    Subset one_class = basic_set_of(A, F.one);
    std::vector<Endo> l_elems;
    for (const Endo& t : K.elems)
      if (apply_to_set(t, one_class) == one_class) l_elems.push_back(t);
    AutGroup L = AutGroup::from_elements(std::move(l_elems));
    if (orbits(L, G) != A.basic_sets) {
      rep.violations.push_back("basic sets are not the orbits of the class stabilizer: " +
                               show_ring(A));
      continue;
    }
    rep.notes.push_back("rank-" + std::to_string(A.rank()) +
                        " S-ring realized by unit multiplications of a field of order " +
                        std::to_string(F.order()));
  }
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_theorem4(const AbelianGroup& P, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "thm4";
  auto classes = enumerate_local_pairs(P, caps);
  rep.notes.push_back(std::to_string(classes.size()) + " conjugacy classes of local pairs");
  AutGroup aut = automorphism_group(P, caps);

  std::vector<CommRing> reps;
  for (const auto& cls : classes) {
    std::vector<const LocalPair*> k_reps;  // one pair per distinct K in the class
    std::set<std::vector<Endo>> seen_k;
    CommRing rep_ring;
    for (size_t pi = 0; pi < cls.size(); ++pi) {
      const LocalPair& pair = cls[pi];
      ++rep.instances_checked;
      CommRing R = ring_from_local_pair(pair);
      if (pi == 0) rep_ring = R;
      LocalPair back = local_pair_from_ring(R);
      if (back.K.elems != pair.K.elems || back.e != pair.e)
        rep.violations.push_back("pair -> ring -> pair does not return the original pair");
      CommRing R2 = ring_from_local_pair(back);
      if (!ring_identical(R, R2))
        rep.violations.push_back("ring -> pair -> ring changes the multiplication table");
      if (seen_k.insert(pair.K.elems).second) k_reps.push_back(&pair);
    }
    // conjugate component groups must give isomorphic rings
    for (size_t i = 1; i < k_reps.size(); ++i) {
      if (!ring_isomorphic(rep_ring, ring_from_local_pair(*k_reps[i]), caps))
        rep.violations.push_back("conjugate local pairs gave non-isomorphic rings");
    }
    std::string sizes = "class with K of order " + std::to_string(cls[0].K.order()) + ", " +
                        std::to_string(cls.size()) + " pairs, units " +
                        std::to_string(cls[0].orbit.size()) + ", radical " +
                        std::to_string(cls[0].complement.size());
    rep.notes.push_back(sizes);
    reps.push_back(rep_ring);
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      bool iso = ring_isomorphic(reps[i], reps[j], caps);
      bool conj = conjugate_in(aut, classes[i][0].K, classes[j][0].K);
      if (conj) rep.violations.push_back("distinct classes are conjugate");
      if (iso != conj)
        rep.violations.push_back("ring isomorphism does not match conjugacy for classes " +
                                 std::to_string(i) + "," + std::to_string(j));
    }
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_wielandt(const AbelianGroup& G, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "wielandt";
  bool composite = !is_prime(G.order) && G.order > 1;
  bool cyclic_sylow = false;
  for (int p : prime_divisors(G.order)) {
    int torsion = 0;
    for (Elem x = 0; x < G.order; ++x)
      if (G.scalar(p, x) == 0) ++torsion;
    if (torsion == p) cyclic_sylow = true;
  }
  if (!composite || !cyclic_sylow) {
    rep.vacuous = true;
    rep.notes.push_back(composite ? "no cyclic Sylow subgroup" : "group order is not composite");
    rep.elapsed_sec = timer.sec();
    return rep;
  }
  for_each_sring(G, [&](const SRing& A) {
    if (!is_primitive(A, caps)) return;
    ++rep.instances_checked;
    if (A.rank() != 2)
      rep.violations.push_back("primitive S-ring of rank " + std::to_string(A.rank()) + ": " +
                               show_ring(A));
  }, caps);
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_lemma_power(const AbelianGroup& G, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "lemma22";
  if (G.order > small_scan_limit(caps, 12))
    throw cap_exceeded("power map scan capped at order 12");
  AutGroup aut = automorphism_group(G, caps);
  std::vector<int> ps = prime_divisors(G.order);
  rep.notes.push_back("statement (2) is checked with the full stabilizer of the partition, "
                      "which subsumes every admissible K");
  for_each_sring(G, [&](const SRing& A) {
    ++rep.instances_checked;
    for (int p : ps)
      for (const Subset& X : A.basic_sets) {
        Subset Xp = power_map(A, X, p);
        if (!in_star(A, Xp))
          rep.violations.push_back("power map leaves the span: p=" + std::to_string(p) +
                                   " X=" + show(X) + " in " + show_ring(A));
      }
    std::vector<Endo> stab;
    for (const Endo& t : aut.elems)
      if (preserves_partition(A, t)) stab.push_back(t);
    AutGroup Kmax = AutGroup::from_elements(std::move(stab));
    if (!is_k_primitive(A, Kmax, caps)) return;
    for (int p : ps)
      for (const Subset& X : A.basic_sets) {
        Subset Xp = power_map(A, X, p);
        if (Xp != Subset{0})
          rep.violations.push_back("power map of a primitive instance is not the identity: p=" +
                                   std::to_string(p) + " X=" + show(X) + " in " + show_ring(A));
      }
  }, caps);
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_corollary_42(const AbelianGroup& P, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "cor42";
  int p = prime_divisors(P.order).empty() ? 0 : prime_divisors(P.order)[0];
  auto classes = enumerate_local_pairs(P, caps);
  std::vector<Subset> subs = all_subgroups(P, caps);
  std::set<std::vector<Endo>> seen;
  for (const auto& cls : classes) {
    for (const LocalPair& pair : cls) {
      if (!seen.insert(pair.K.elems).second) continue;  // statements do not involve e
      ++rep.instances_checked;
      const Subset& P0 = pair.complement;
      Subset O = set_difference(P.all_elements(), P0);
      // (1) orbits of the Sylow p-part of K on the orbit are the complement
      // cosets
      std::vector<Endo> k0;
      for (const Endo& t : pair.K.elems) {
        int o = table_order(t);
        while (o % p == 0) o /= p;
        if (o == 1) k0.push_back(t);
      }
      AutGroup K0 = AutGroup::from_elements(std::move(k0));
      std::set<Subset> orbs;
      {
        std::set<Elem> left(O.begin(), O.end());
        while (!left.empty()) {
          Subset orb = orbit_of(K0, *left.begin());
          for (Elem x : orb) left.erase(x);
          orbs.insert(orb);
        }
      }
      std::set<Subset> cosets;
      for (Elem x : O) {
        Subset c(P0.size());
        for (size_t i = 0; i < P0.size(); ++i) c[i] = P.add(x, P0[i]);
        std::sort(c.begin(), c.end());
        cosets.insert(c);
      }
      if (orbs != cosets)
        rep.violations.push_back("Sylow-part orbits differ from the complement cosets");

      // (2) dual orbits are differences of nested invariant subgroups
      AutGroup Khat = dual_aut_group(P, pair.K);
      std::vector<Subset> inv;
      for (const Subset& H : subs)
        if (stabilizes(Khat, H)) inv.push_back(H);
      for (const Subset& orb : orbits(Khat, P)) {
        if (orb == Subset{0}) continue;
        bool realized = false;
        for (const Subset& U : inv) {
          // the largest invariant subgroup strictly inside U must contain
          // every other one
          Subset best;
          bool unique_max = true;
          for (const Subset& M : inv) {
            if (M.size() >= U.size() || !is_subset_of(M, U)) continue;
            if (M.size() > best.size()) best = M;
          }
          for (const Subset& M : inv) {
            if (M.size() >= U.size() || !is_subset_of(M, U)) continue;
            if (!is_subset_of(M, best)) unique_max = false;
          }
          if (!unique_max || best.empty()) continue;
          if (set_difference(U, best) == orb) {
            realized = true;
            break;
          }
        }
        if (!realized)
          rep.violations.push_back("dual orbit " + show(orb) +
                                   " is not a difference of nested invariant subgroups");
      }
      Subset ann = annihilator(P, P0);
      if (!stabilizes(Khat, ann))
        rep.violations.push_back("annihilator of the complement is not invariant");
      for (const Subset& H : inv)
        if (H.size() > 1 && !is_subset_of(ann, H))
          rep.violations.push_back("annihilator of the complement is not the smallest "
                                   "nontrivial invariant subgroup");
    }
  }
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_separating(const AbelianGroup& G, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "separating";
  long rings = 0;
  std::vector<Subset> subs = all_subgroups(G, caps);
  for_each_sring(G, [&](const SRing& A) {
    ++rings;
    SeparationReport sr = check_separating_theorem(A, subs);
    rep.instances_checked += sr.checked;
    for (const std::string& v : sr.violations)
      rep.violations.push_back(v + " in " + show_ring(A));
    for (const SeparationWitness& w : sr.witnesses)
      if (in_star(A, w.H))
        rep.violations.push_back("separating subgroup is an A-subgroup: " + show(w.H));
  }, caps);
  rep.notes.push_back(std::to_string(rings) + " S-rings scanned");
  rep.elapsed_sec = timer.sec();
  return rep;
}

VerificationReport verify_duality(const AbelianGroup& G, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "duality";
  if (G.order > small_scan_limit(caps, 12))
    throw cap_exceeded("duality scan capped at order 12");
  AutGroup KG = multiplier_group(G);
  long rings = 0;
  for_each_sring(G, [&](const SRing& A) {
    ++rings;
    DualityReport dr = verify_duality_theorem(A, KG, caps);
    rep.instances_checked += dr.checked;
    for (const std::string& v : dr.violations)
      rep.violations.push_back(v + " in " + show_ring(A));
  }, caps);
  rep.notes.push_back(std::to_string(rings) + " S-rings scanned");
  rep.elapsed_sec = timer.sec();
  return rep;
}

std::pair<CommRing, SRing> build_counterexample(int p) {
  if (p == 2 || !is_prime(p)) throw invalid_input("construction needs an odd prime");
  if (p > 7) throw invalid_input("construction capped at p = 7");
  CommRing R = make_product(make_zn(p), make_zn(p));
  const AbelianGroup& G = R.add;
  Subset X0{0}, X1, X2;
  for (Elem x = 1; x < G.order; ++x) {
    auto r = G.decode(x);
    if (r[0] == 0 || r[1] == 0)
      X1.push_back(x);
    else
      X2.push_back(x);
  }
  SRing A = validate_sring(G, {X0, X1, X2});
  if (!is_k_invariant(A, k_r(R))) throw internal_error("counterexample is not unit-invariant");
  if (!is_quasiprimitive(A, R)) throw internal_error("counterexample is not quasiprimitive");
  if (A.rank() != 3) throw internal_error("counterexample rank is not 3");
  if (is_cyclotomic(A, R)) throw internal_error("counterexample is cyclotomic");
  return {R, A};
}

VerificationReport verify_counterexample(int p, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "counterexample";
  auto [R, A] = build_counterexample(p);
  ++rep.instances_checked;
  std::multiset<size_t> sizes;
  for (const Subset& X : A.basic_sets) sizes.insert(X.size());
  std::multiset<size_t> expected{1, (size_t)(2 * (p - 1)), (size_t)((p - 1) * (p - 1))};
  if (sizes != expected) rep.violations.push_back("basic set sizes are wrong");
  if (!is_quasiprimitive(A, R, caps)) rep.violations.push_back("not quasiprimitive");
  if (A.rank() != 3) rep.violations.push_back("rank is not 3");
  if (is_cyclotomic(A, R)) rep.violations.push_back("cyclotomic after all");
  rep.notes.push_back("ring Z_" + std::to_string(p) + " x Z_" + std::to_string(p) +
                      " with basic set sizes 1, " + std::to_string(2 * (p - 1)) + ", " +
                      std::to_string((p - 1) * (p - 1)));
  rep.elapsed_sec = timer.sec();
  return rep;
}

LocalPair prop23_pair(const AbelianGroup& P, const Caps& caps) {
  (void)caps;
  if (P.order < 2 || prime_divisors(P.order).size() != 1)
    throw invalid_input("construction needs a nontrivial p-group");
  if (is_prime(P.order))
    throw invalid_input("construction needs composite order: the complement would be trivial");
  int p = prime_divisors(P.order)[0];
  size_t lead = 0;
  while (P.factors[lead] != P.exponent) ++lead;
  Elem e = P.unit_vector((int)lead);
  // maps x -> a*x + x_lead * b with a a unit modulo the exponent and b in
  // the complementary factors
  std::vector<Endo> maps;
  for (int a = 1; a <= P.exponent; ++a) {
    if (a % p == 0) continue;
    for (Elem b = 0; b < P.order; ++b) {
      if (P.decode(b)[lead] != 0) continue;
      Endo t(P.order);
      for (Elem x = 0; x < P.order; ++x) {
        int xlead = P.decode(x)[lead];
        t[x] = P.add(P.scalar(a, x), P.scalar(xlead, b));
      }
      maps.push_back(std::move(t));
    }
  }
  AutGroup K = AutGroup::from_generators(P, maps);
  if (K.order() != (int)maps.size()) throw internal_error("constructed map set is not closed");
  auto pair = is_local_pair(P, K, e);
  if (!pair) throw internal_error("constructed pair is not a local pair");
  if (pair->complement.size() <= 1) throw internal_error("complement collapsed");
  return *pair;
}

VerificationReport verify_prop13(const AbelianGroup& P, const Caps& caps) {
  Timer timer;
  VerificationReport rep;
  rep.statement_id = "prop13";
  LocalPair pair = prop23_pair(P, caps);
  rep.notes.push_back("K of order " + std::to_string(pair.K.order()) + ", complement " +
                      show(pair.complement));
  for (const SRing& A : enumerate_k_invariant_srings(P, pair.K, caps)) {
    if (!is_k_primitive(A, pair.K, caps)) continue;
    ++rep.instances_checked;
    if (A.rank() != 2)
      rep.violations.push_back("K-primitive S-ring of rank " + std::to_string(A.rank()) + ": " +
                               show_ring(A));
  }
  rep.elapsed_sec = timer.sec();
  return rep;
}

}  // namespace srk
