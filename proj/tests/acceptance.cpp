// Acceptance suite: one line per criterion, exact integer checks throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "srk/harness.hpp"

using namespace srk;

namespace {

// one representative per isomorphism class of abelian groups of order n
std::vector<AbelianGroup> abelian_groups_of_order(int n) {
  std::vector<AbelianGroup> out;
  std::set<std::vector<int>> seen;
  std::function<void(int, int, std::vector<int>&)> rec = [&](int rem, int maxf,
                                                             std::vector<int>& cur) {
    if (rem == 1) {
      AbelianGroup G = make_group(cur);
      if (seen.insert(G.canonical_form()).second) out.push_back(G);
      return;
    }
    for (int f = 2; f <= std::min(rem, maxf); ++f)
      if (rem % f == 0) {
        cur.push_back(f);
        rec(rem / f, f, cur);
        cur.pop_back();
      }
  };
  std::vector<int> cur;
  if (n == 1)
    out.push_back(make_group({}));
  else
    rec(n, n, cur);
  return out;
}

bool is_prime_power(int n) { return n > 1 && prime_divisors(n).size() == 1; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

bool criterion1(Outcome& o) {
  for (int p : {3, 5}) {
    auto [R, A] = build_counterexample(p);
    if (A.rank() != 3) o.fail("rank != 3 at p=" + std::to_string(p));
    if (!is_k_invariant(A, k_r(R))) o.fail("not unit-invariant at p=" + std::to_string(p));
    if (!is_quasiprimitive(A, R)) o.fail("not quasiprimitive at p=" + std::to_string(p));
    if (is_cyclotomic(A, R)) o.fail("cyclotomic at p=" + std::to_string(p));
    std::multiset<size_t> sizes;
    for (const Subset& X : A.basic_sets) sizes.insert(X.size());
    std::multiset<size_t> want{1, (size_t)(2 * (p - 1)), (size_t)((p - 1) * (p - 1))};
    if (sizes != want) o.fail("basic set sizes wrong at p=" + std::to_string(p));
  }
  o.detail = "p=3 and p=5 reproduce the rank-3 quasiprimitive non-cyclotomic ring";
  return o.pass;
}

bool criterion2(Outcome& o) {
  std::vector<std::pair<std::string, CommRing>> rings;
  rings.emplace_back("Z4", make_zn(4));
  rings.emplace_back("Z8", make_zn(8));
  rings.emplace_back("Z9", make_zn(9));
  rings.emplace_back("Z6", make_zn(6));
  rings.emplace_back("Z12", make_zn(12));
  rings.emplace_back("GF4", make_gf(2, 2));
  rings.emplace_back("GF8", make_gf(2, 3));
  rings.emplace_back("GF9", make_gf(3, 2));
  rings.emplace_back("Z2[t]/(t2)", make_dual_numbers(2));
  rings.emplace_back("Z3[t]/(t2)", make_dual_numbers(3));
  rings.emplace_back("GF4xZ3", make_product(make_gf(2, 2), make_zn(3)));
  long scanned = 0;
  for (auto& [name, R] : rings) {
    VerificationReport rep = verify_theorem3(R);
    if (rep.vacuous) o.fail(name + ": hypothesis unexpectedly fails");
    if (!rep.pass()) o.fail(name + ": " + rep.violations[0]);
    scanned += rep.instances_checked;
    // direct statement: quasiprimitive of rank > 2 forces a cyclotomic ring
    // over a field
    AutGroup KR = k_r(R);
    bool fieldp = is_field(R);
    for (const SRing& A : enumerate_k_invariant_srings(R.add, KR)) {
      if (!is_k_primitive(A, KR) || A.rank() == 2) continue;
      if (!(is_cyclotomic(A, R).has_value() && fieldp))
        o.fail(name + ": rank-" + std::to_string(A.rank()) +
               " quasiprimitive S-ring outside the field case");
    }
  }
  o.detail = "11 rings, " + std::to_string(scanned) + " quasiprimitive instances, 0 violations";
  return o.pass;
}

bool criterion3(Outcome& o) {
  std::vector<std::pair<std::vector<int>, int>> expected = {
      {{2}, -1}, {{4}, 1}, {{8}, -1}, {{2, 2}, 2}, {{2, 4}, -1}, {{9}, -1}, {{3, 3}, 2}};
  std::string counts;
  for (auto& [factors, want] : expected) {
    AbelianGroup P = make_group(factors);
    VerificationReport rep = verify_theorem4(P);
    if (!rep.pass()) o.fail("order " + std::to_string(P.order) + ": " + rep.violations[0]);
    int classes = (int)enumerate_local_pairs(P).size();
    if (want > 0 && classes != want)
      o.fail("class count " + std::to_string(classes) + " != " + std::to_string(want) +
             " on order " + std::to_string(P.order));
    counts += (counts.empty() ? "" : ",") + std::to_string(classes);
  }
  o.detail = "round trips exact; class counts per group: " + counts;
  return o.pass;
}

bool criterion4(Outcome& o) {
  long rings = 0;
  for (int n = 1; n <= 10; ++n) {
    VerificationReport rep = verify_schur_multiplier(n == 1 ? make_group({})
                                                            : make_group({n}));
    if (!rep.pass()) o.fail("Z_" + std::to_string(n) + ": " + rep.violations[0]);
    rings += rep.instances_checked;
  }
  o.detail = std::to_string(rings) + " S-rings over Z_1..Z_10, both engines agree, all invariant";
  return o.pass;
}

bool criterion5(Outcome& o) {
  long prim = 0;
  for (int n = 4; n <= 16; ++n) {
    if (is_prime(n)) continue;
    AbelianGroup G = make_group({n});
    for (const SRing& A : enumerate_all_srings(G)) {
      if (!is_primitive(A)) continue;
      ++prim;
      if (A.rank() != 2)
        o.fail("primitive rank-" + std::to_string(A.rank()) + " S-ring over Z_" +
               std::to_string(n));
    }
  }
  for (auto factors : {std::vector<int>{2, 2, 3}, {15}}) {
    VerificationReport rep = verify_wielandt(make_group(factors));
    if (rep.vacuous) o.fail("hypothesis unexpectedly fails");
    if (!rep.pass()) o.fail(rep.violations[0]);
  }
  o.detail = std::to_string(prim) + " primitive S-rings over composite cyclic groups, all rank 2";
  return o.pass;
}

bool criterion6(Outcome& o) {
  long rings = 0;
  for (int n = 1; n <= 12; ++n)
    for (const AbelianGroup& G : abelian_groups_of_order(n)) {
      VerificationReport rep = verify_lemma_power(G);
      if (!rep.pass()) o.fail("order " + std::to_string(n) + ": " + rep.violations[0]);
      rings += rep.instances_checked;
    }
  o.detail = std::to_string(rings) + " S-rings over all abelian groups of order <= 12";
  return o.pass;
}

bool criterion7(Outcome& o) {
  long checks = 0;
  for (int n = 1; n <= 12; ++n)
    for (const AbelianGroup& G : abelian_groups_of_order(n)) {
      VerificationReport rep = verify_duality(G);
      if (!rep.pass()) o.fail("order " + std::to_string(n) + ": " + rep.violations[0]);
      checks += rep.instances_checked;
    }
  o.detail = std::to_string(checks) + " duality checks (double dual, rank, annihilators)";
  return o.pass;
}

bool criterion8(Outcome& o) {
  long checks = 0;
  for (int n = 1; n <= 16; ++n)
    for (const AbelianGroup& G : abelian_groups_of_order(n)) {
      VerificationReport rep = verify_separating(G);
      if (!rep.pass()) o.fail("order " + std::to_string(n) + ": " + rep.violations[0]);
      checks += rep.instances_checked;
    }
  // pinned witness: the rank-2 ring over Z_8 is separated exactly by the two
  // proper nontrivial subgroups
  AbelianGroup Z8 = make_group({8});
  SRing r2 = validate_sring(Z8, {{0}, {1, 2, 3, 4, 5, 6, 7}});
  if (separating_subgroups(r2) != std::vector<Subset>{{0, 4}, {0, 2, 4, 6}})
    o.fail("Z_8 rank-2 witnesses are not {0,4} and {0,2,4,6}");
  o.detail = std::to_string(checks) + " (H,X) pairs over all abelian groups of order <= 16";
  return o.pass;
}

bool criterion9(Outcome& o) {
  long groups = 0;
  for (int n = 2; n <= 16; ++n) {
    if (!is_prime_power(n)) continue;
    for (const AbelianGroup& P : abelian_groups_of_order(n)) {
      VerificationReport rep = verify_corollary_42(P);
      if (!rep.pass()) o.fail("order " + std::to_string(n) + ": " + rep.violations[0]);
      groups += rep.instances_checked;
    }
  }
  o.detail = std::to_string(groups) + " local-pair groups over all p-groups of order <= 16";
  return o.pass;
}

bool criterion10(Outcome& o) {
  long prim = 0;
  for (auto factors : {std::vector<int>{4}, {8}, {9}, {2, 2}, {2, 4}}) {
    VerificationReport rep = verify_prop13(make_group(factors));
    if (!rep.pass()) o.fail("order mismatch: " + rep.violations[0]);
    prim += rep.instances_checked;
  }
  o.detail = "constructed pairs on all five groups; " + std::to_string(prim) +
             " K-primitive S-rings, all rank 2";
  return o.pass;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    bool (*run)(Outcome&);
  };
  std::vector<Criterion> criteria = {
      {1, "counterexample reproduction", criterion1},
      {2, "locality statement over 11 rings", criterion2},
      {3, "ring/pair correspondence", criterion3},
      {4, "coprime-power invariance", criterion4},
      {5, "composite cyclic primitivity", criterion5},
      {6, "power map statements", criterion6},
      {7, "duality suite", criterion7},
      {8, "separating subgroup suite", criterion8},
      {9, "local pair orbit corollary", criterion9},
      {10, "canonical local pair on p-groups", criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    bool ok;
    try {
      ok = c.run(o);
    } catch (const std::exception& e) {
      ok = false;
      o.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.title << "): " << (ok ? "PASS" : "FAIL") << " — "
         << o.detail << " [" << (long)(dt * 1000) << " ms]";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 10 criteria passed" << std::endl;
  return 0;
}
