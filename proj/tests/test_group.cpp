#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "srk/group.hpp"

using namespace srk;

TEST_CASE("group construction and arithmetic") {
  AbelianGroup G = make_group({4});
  CHECK(G.order == 4);
  CHECK(G.exponent == 4);
  AbelianGroup H = make_group({2, 4});
  CHECK(H.order == 8);
  CHECK(H.exponent == 4);
  AbelianGroup T = make_group({});
  CHECK(T.order == 1);
  CHECK(T.exponent == 1);
  CHECK_THROWS_AS(make_group({0}), invalid_input);
  CHECK_THROWS_AS(make_group({3, -1}), invalid_input);
  // representation bound: no silent overflow on absurd orders
  CHECK_THROWS_AS(make_group({1000000, 1000000}), invalid_input);
  CHECK(make_group({65536}).order == 65536);

  CHECK(H.add(H.encode({1, 3}), H.encode({1, 2})) == H.encode({0, 1}));
  CHECK(H.neg(H.encode({1, 1})) == H.encode({1, 3}));
  CHECK(H.elem_order(H.encode({1, 2})) == 2);
  CHECK(H.elem_order(H.encode({0, 1})) == 4);
  for (Elem x = 0; x < H.order; ++x) CHECK(H.encode(H.decode(x)) == x);
}

TEST_CASE("canonical form identifies isomorphic factorizations") {
  CHECK(make_group({12}).canonical_form() == make_group({4, 3}).canonical_form());
  CHECK(make_group({2, 6}).canonical_form() == make_group({2, 2, 3}).canonical_form());
  CHECK(make_group({4}).canonical_form() != make_group({2, 2}).canonical_form());
}

TEST_CASE("generated subgroup") {
  AbelianGroup Z8 = make_group({8});
  CHECK(generated_subgroup(Z8, {2}) == Subset{0, 2, 4, 6});
  CHECK(generated_subgroup(Z8, {}) == Subset{0});
  AbelianGroup V = make_group({2, 2});
  CHECK(generated_subgroup(V, {V.encode({1, 0}), V.encode({0, 1})}) == V.all_elements());
}

TEST_CASE("subset radical") {
  AbelianGroup Z8 = make_group({8});
  CHECK(subset_radical(Z8, Z8.all_elements()) == Z8.all_elements());
  CHECK(subset_radical(Z8, {1, 3, 5, 7}) == Subset{0, 2, 4, 6});
  AbelianGroup Z5 = make_group({5});
  // brute force over the definition gives the trivial radical here
  CHECK(subset_radical(Z5, {1, 2}) == Subset{0});
  CHECK_THROWS_AS(subset_radical(Z5, {}), invalid_input);
}

TEST_CASE("radical always lies inside the span") {
  for (auto factors : {std::vector<int>{8}, {2, 4}, {3, 3}, {12}}) {
    AbelianGroup G = make_group(factors);
    for (int mask = 1; mask < (1 << G.order); mask += 7) {  // sampled subsets
      Subset X;
      for (Elem x = 0; x < G.order; ++x)
        if (mask & (1 << x)) X.push_back(x);
      if (X.empty()) continue;
      CHECK(is_subset_of(subset_radical(G, X), generated_subgroup(G, X)));
    }
  }
}

TEST_CASE("all subgroups") {
  CHECK(all_subgroups(make_group({4})).size() == 3);
  CHECK(all_subgroups(make_group({2, 2})).size() == 5);
  CHECK(all_subgroups(make_group({6})).size() == 4);
  for (const Subset& S : all_subgroups(make_group({2, 4}))) {
    CHECK(is_subgroup(make_group({2, 4}), S));
    CHECK(8 % S.size() == 0);
  }
  Caps tight;
  tight.group = 4;
  CHECK_THROWS_AS(all_subgroups(make_group({8}), tight), cap_exceeded);
}

TEST_CASE("subgroups are fixed points of span and radical") {
  for (auto factors : {std::vector<int>{12}, {2, 4}, {3, 3}}) {
    AbelianGroup G = make_group(factors);
    for (const Subset& H : all_subgroups(G)) {
      CHECK(G.order % (int)H.size() == 0);
      CHECK(generated_subgroup(G, H) == H);
      CHECK(subset_radical(G, H) == H);
    }
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(make_group({2, 2})).order() == 6);
  CHECK(automorphism_group(make_group({4})).order() == 2);
  CHECK(automorphism_group(make_group({8})).order() == 4);
  for (int p : {2, 3, 5, 7, 11, 13})
    CHECK(automorphism_group(make_group({p})).order() == p - 1);
  // closure sanity
  AutGroup A = automorphism_group(make_group({2, 4}));
  CHECK(A.order() == 8);
  for (const Endo& s : A.elems) {
    CHECK(A.contains(inverse_table(s)));
    for (const Endo& t : A.elems) CHECK(A.contains(compose(s, t)));
  }
}

TEST_CASE("multiplier group") {
  AutGroup M8 = multiplier_group(make_group({8}));
  CHECK(M8.order() == 4);
  CHECK(multiplier_group(make_group({2, 2})).order() == 1);
  CHECK(multiplier_group(make_group({5})).order() == 4);
  // abelian, and commutes with every scalar endomorphism
  AbelianGroup G = make_group({2, 4});
  AutGroup M = multiplier_group(G);
  CHECK(M.is_abelian());
  for (const Endo& t : M.elems)
    for (int m = 0; m < G.exponent; ++m) {
      Endo s = scalar_endo(G, m);
      CHECK(compose(t, s) == compose(s, t));
    }
}

TEST_CASE("sylow subgroups") {
  AbelianGroup Z12 = make_group({12});
  CHECK(sylow_subgroup(Z12, 2) == Subset{0, 3, 6, 9});
  CHECK(sylow_subgroup(Z12, 3) == Subset{0, 4, 8});
  CHECK(sylow_subgroup(Z12, 5) == Subset{0});
  CHECK_THROWS_AS(sylow_subgroup(Z12, 4), invalid_input);
}

TEST_CASE("orbits") {
  AbelianGroup Z5 = make_group({5});
  auto o5 = orbits(multiplier_group(Z5), Z5);
  CHECK(o5 == std::vector<Subset>{{0}, {1, 2, 3, 4}});
  AbelianGroup Z4 = make_group({4});
  auto osing = orbits(AutGroup::trivial(4), Z4);
  CHECK(osing.size() == 4);
  AbelianGroup Z8 = make_group({8});
  auto o8 = orbits(multiplier_group(Z8), Z8);
  CHECK(o8 == std::vector<Subset>{{0}, {1, 3, 5, 7}, {2, 6}, {4}});
  // orbit partition covers the group exactly once, identity alone
  AbelianGroup G = make_group({2, 4});
  auto os = orbits(automorphism_group(G), G);
  size_t total = 0;
  for (auto& o : os) total += o.size();
  CHECK(total == (size_t)G.order);
  CHECK(os[0] == Subset{0});
}

TEST_CASE("subgroup decomposition recovers structure") {
  AbelianGroup G = make_group({2, 4, 3});
  for (const Subset& S : all_subgroups(G)) {
    SubgroupDecomposition d = decompose_subgroup(G, S);
    CHECK(d.group.order == (int)S.size());
    Subset image(d.embed.begin(), d.embed.end());
    std::sort(image.begin(), image.end());
    CHECK(image == S);
    // embedding is additive
    for (Elem a = 0; a < d.group.order; ++a)
      for (Elem b = 0; b < d.group.order; ++b)
        CHECK(G.add(d.embed[a], d.embed[b]) == d.embed[d.group.add(a, b)]);
  }
}

TEST_CASE("isomorphism search respects structure") {
  AbelianGroup A = make_group({4, 3});
  AbelianGroup B = make_group({12});
  int count = 0;
  for_each_isomorphism(A, B, [&](const Endo& f) {
    ++count;
    for (Elem x = 0; x < A.order; ++x)
      for (Elem y = 0; y < A.order; ++y) CHECK(f[A.add(x, y)] == B.add(f[x], f[y]));
    return count < 2;
  });
  CHECK(count > 0);
  int none = 0;
  for_each_isomorphism(make_group({4}), make_group({2, 2}), [&](const Endo&) {
    ++none;
    return true;
  });
  CHECK(none == 0);
}
