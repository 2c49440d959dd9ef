#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srk/duality.hpp"
#include "srk/enumerate.hpp"

using namespace srk;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_poly(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
  // product over divisors reconstructs x^m - 1
  for (int m : {1, 2, 3, 4, 6, 8, 12}) {
    std::vector<long long> prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      auto phi = cyclotomic_poly(d);
      std::vector<long long> next(prod.size() + phi.size() - 1, 0);
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = next;
    }
    std::vector<long long> expect(m + 1, 0);
    expect[0] = -1;
    expect[m] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("exact root arithmetic") {
  CycRing F(4);  // Z[i]
  CHECK(F.degree() == 2);
  auto i1 = F.root_power(1);
  CHECK(F.mul(i1, i1) == F.from_int(-1));
  CHECK(F.is_zero(F.add(F.root_power(1), F.root_power(3))));
  // full sum of m-th roots vanishes for m > 1
  for (int m : {2, 3, 4, 6, 9, 12}) {
    CycRing R(m);
    auto s = R.zero();
    for (int k = 0; k < m; ++k) s = R.add(s, R.root_power(k));
    CHECK(R.is_zero(s));
  }
}

TEST_CASE("character sums") {
  AbelianGroup Z4 = make_group({4});
  CycRing F(Z4.exponent);
  CHECK(char_sum(Z4, F, 0, {0, 1, 3}) == F.from_int(3));
  CHECK(F.is_zero(char_sum(Z4, F, 1, {1, 3})));
  CHECK(F.is_zero(char_sum(Z4, F, 1, {0, 2})));

  // sum over a subgroup detects annihilator membership
  for (auto factors : {std::vector<int>{8}, {2, 4}, {3, 3}}) {
    AbelianGroup G = make_group(factors);
    CycRing R(G.exponent);
    for (const Subset& H : all_subgroups(G)) {
      Subset ann = annihilator(G, H);
      for (Elem a = 0; a < G.order; ++a) {
        auto s = char_sum(G, R, a, H);
        if (set_contains(ann, a))
          CHECK(s == R.from_int((long long)H.size()));
        else
          CHECK(R.is_zero(s));
      }
    }
  }
}

TEST_CASE("annihilator duality") {
  AbelianGroup Z4 = make_group({4});
  CHECK(annihilator(Z4, {0}) == Z4.all_elements());
  CHECK(annihilator(Z4, Z4.all_elements()) == Subset{0});
  CHECK(annihilator(Z4, {0, 2}) == Subset{0, 2});

  for (auto factors : {std::vector<int>{12}, {2, 4}, {2, 2, 3}}) {
    AbelianGroup G = make_group(factors);
    for (const Subset& H : all_subgroups(G)) {
      Subset ann = annihilator(G, H);
      CHECK(is_subgroup(G, ann));
      CHECK(H.size() * ann.size() == (size_t)G.order);
      CHECK(annihilator(G, ann) == H);
    }
    // inclusion-reversing
    auto subs = all_subgroups(G);
    for (const Subset& H1 : subs)
      for (const Subset& H2 : subs)
        if (is_subset_of(H1, H2))
          CHECK(is_subset_of(annihilator(G, H2), annihilator(G, H1)));
  }
}

TEST_CASE("dual S-rings") {
  AbelianGroup Z4 = make_group({4});
  SRing disc = validate_sring(Z4, {{0}, {1}, {2}, {3}});
  CHECK(dual_sring(disc).rank() == 4);

  SRing r2 = validate_sring(Z4, {{0}, {1, 2, 3}});
  CHECK(dual_sring(r2).rank() == 2);

  SRing mid = validate_sring(Z4, {{0}, {2}, {1, 3}});
  SRing dmid = dual_sring(mid);
  CHECK(dmid.basic_sets == mid.basic_sets);  // self-dual

  // double dual and rank preservation across a spread of groups
  for (auto factors : {std::vector<int>{8}, {2, 4}, {9}, {2, 2, 3}}) {
    AbelianGroup G = make_group(factors);
    for (const SRing& A : enumerate_all_srings(G)) {
      SRing d = dual_sring(A);
      CHECK(d.rank() == A.rank());
      CHECK(dual_sring(d) == A);
    }
  }

  // spot checks above order 12, up to 36
  for (int n : {16, 18, 24, 36}) {
    CommRing R = make_zn(n);
    for (const SRing& A : {cyclotomic_sring(R, k_r(R)),
                           validate_sring(R.add, {{0}, [&] {
                                            Subset rest;
                                            for (Elem x = 1; x < n; ++x) rest.push_back(x);
                                            return rest;
                                          }()})}) {
      SRing d = dual_sring(A);
      CHECK(d.rank() == A.rank());
      CHECK(dual_sring(d) == A);
    }
  }

  // a full noncyclic order-16 sweep
  for (const SRing& A : enumerate_all_srings(make_group({4, 4}))) {
    SRing d = dual_sring(A);
    CHECK(d.rank() == A.rank());
    CHECK(dual_sring(d) == A);
  }
}

TEST_CASE("dual automorphisms") {
  AbelianGroup Z4 = make_group({4});
  CHECK(dual_automorphism(Z4, endo_identity(4)) == endo_identity(4));
  CHECK(dual_automorphism(Z4, scalar_endo(Z4, 3)) == scalar_endo(Z4, 3));
  AbelianGroup Z8 = make_group({8});
  CHECK(dual_automorphism(Z8, scalar_endo(Z8, 3)) == scalar_endo(Z8, 3));

  // contravariant pairing identity: <a^, x> = <a, sigma^{-1} x>
  AbelianGroup G = make_group({2, 4});
  for (const Endo& s : automorphism_group(G).elems) {
    Endo hat = dual_automorphism(G, s);
    Endo inv = inverse_table(s);
    for (Elem a = 0; a < G.order; ++a)
      for (Elem x = 0; x < G.order; ++x)
        CHECK(char_pairing(G, hat[a], x) == char_pairing(G, a, inv[x]));
    // the map is a group isomorphism on tables
  }
  AutGroup A = automorphism_group(G);
  for (const Endo& s : A.elems)
    for (const Endo& t : A.elems)
      CHECK(dual_automorphism(G, compose(s, t)) ==
            compose(dual_automorphism(G, s), dual_automorphism(G, t)));
}

TEST_CASE("dual automorphism agrees with a brute-force pairing search") {
  for (auto factors : {std::vector<int>{12}, {2, 4}, {3, 3}}) {
    AbelianGroup G = make_group(factors);
    for (const Endo& s : automorphism_group(G).elems) {
      Endo fast = dual_automorphism(G, s);
      Endo inv = inverse_table(s);
      for (Elem a = 0; a < G.order; ++a) {
        int found = -1;
        for (Elem cand = 0; cand < G.order && found < 0; ++cand) {
          bool ok = true;
          for (Elem x = 0; x < G.order && ok; ++x)
            if (char_pairing(G, cand, x) != char_pairing(G, a, inv[x])) ok = false;
          if (ok) found = cand;
        }
        CHECK(found == fast[a]);
      }
    }
  }
}

TEST_CASE("non-invariance transfers to the dual") {
  AbelianGroup V = make_group({2, 2});
  Elem a = V.encode({1, 0}), b = V.encode({0, 1}), c = V.encode({1, 1});
  SRing B = validate_sring(V, {{0}, {a}, {b, c}});
  Endo swap(V.order);
  for (Elem x = 0; x < V.order; ++x) {
    auto r = V.decode(x);
    swap[x] = V.encode({r[1], r[0]});
  }
  AutGroup K = AutGroup::from_generators(V, {swap});
  REQUIRE(!is_k_invariant(B, K));
  CHECK(!is_k_invariant(dual_sring(B), dual_aut_group(V, K)));
  // the equivalence is what the report asserts, so this instance still passes
  CHECK(verify_duality_theorem(B, K).pass);
}

TEST_CASE("duality theorem checks") {
  AbelianGroup Z6 = make_group({6});
  SRing r2 = validate_sring(Z6, {{0}, {1, 2, 3, 4, 5}});
  DualityReport rep = verify_duality_theorem(r2, multiplier_group(Z6));
  CHECK(rep.pass);

  AbelianGroup Z4 = make_group({4});
  SRing mid = validate_sring(Z4, {{0}, {2}, {1, 3}});
  CHECK(verify_duality_theorem(mid, multiplier_group(Z4)).pass);

  AbelianGroup Z8 = make_group({8});
  CommRing R8 = make_zn(8);
  SRing cyc = cyclotomic_sring(R8, k_r(R8));
  DualityReport rc = verify_duality_theorem(cyc, multiplier_group(Z8));
  CHECK(rc.pass);
  CHECK(rc.checked > 4);
}
