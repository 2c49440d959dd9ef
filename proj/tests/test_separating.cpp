#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srk/enumerate.hpp"
#include "srk/harness.hpp"
#include "srk/separating.hpp"

using namespace srk;

namespace {

SRing rank2(const AbelianGroup& G) {
  Subset rest;
  for (Elem x = 1; x < G.order; ++x) rest.push_back(x);
  return validate_sring(G, {{0}, rest});
}

}  // namespace

TEST_CASE("separation predicate") {
  AbelianGroup Z8 = make_group({8});
  SRing r2 = rank2(Z8);
  Subset X = r2.basic_sets[1];
  CHECK(separates(r2, {0, 4}, X));
  CHECK(separates(r2, {0, 2, 4, 6}, X));
  CHECK(!separates(r2, {0}, X));                    // empty intersection
  CHECK(!separates(r2, Z8.all_elements(), X));      // empty difference

  CommRing R8 = make_zn(8);
  SRing cyc = cyclotomic_sring(R8, k_r(R8));
  CHECK(!separates(cyc, {0, 4}, {1, 3, 5, 7}));

  CHECK_THROWS_AS(separates(r2, {0, 4}, {1, 2}), invalid_input);
}

TEST_CASE("separating subgroup lists") {
  AbelianGroup Z8 = make_group({8});
  CHECK(separating_subgroups(rank2(Z8)) ==
        std::vector<Subset>{{0, 4}, {0, 2, 4, 6}});

  AbelianGroup Z4 = make_group({4});
  SRing disc = validate_sring(Z4, {{0}, {1}, {2}, {3}});
  CHECK(separating_subgroups(disc).empty());

  CommRing R8 = make_zn(8);
  CHECK(separating_subgroups(cyclotomic_sring(R8, k_r(R8))).empty());
}

TEST_CASE("separation conclusions on the rank-2 witness") {
  AbelianGroup Z8 = make_group({8});
  SeparationReport rep = check_separating_theorem(rank2(Z8));
  CHECK(rep.pass());
  REQUIRE(rep.witnesses.size() == 2);
  for (const SeparationWitness& w : rep.witnesses) {
    CHECK(w.span == Z8.all_elements());
    CHECK(w.radical == Subset{0});
    CHECK(w.X == Subset{1, 2, 3, 4, 5, 6, 7});
  }

  SRing z4mid = validate_sring(make_group({4}), {{0}, {2}, {1, 3}});
  SeparationReport vac = check_separating_theorem(z4mid);
  CHECK(vac.pass());
  CHECK(vac.witnesses.empty());
}

TEST_CASE("separation scan over every small S-ring") {
  for (auto factors : {std::vector<int>{8}, {2, 4}, {2, 2, 2}, {9}, {3, 3}, {12}}) {
    AbelianGroup G = make_group(factors);
    for (const SRing& A : enumerate_all_srings(G)) {
      SeparationReport rep = check_separating_theorem(A);
      CHECK(rep.pass());
      // a separating subgroup never lies in the span
      for (const Subset& H : separating_subgroups(A)) CHECK(!in_star(A, H));
    }
  }
}

TEST_CASE("rank-2 conclusion from an invariant separating subgroup") {
  AbelianGroup Z8 = make_group({8});
  CheckReport rep = check_corollary_32(rank2(Z8), multiplier_group(Z8));
  CHECK(rep.pass);
  CHECK(!rep.vacuous);

  // no separating subgroup at all: vacuous
  AbelianGroup Z5 = make_group({5});
  SRing C = validate_sring(Z5, {{0}, {1, 4}, {2, 3}});
  AutGroup pm = AutGroup::from_generators(Z5, {scalar_endo(Z5, 4)});
  CheckReport vac = check_corollary_32(C, pm);
  CHECK(vac.pass);
  CHECK(vac.vacuous);

  // preconditions enforced
  CommRing R8 = make_zn(8);
  SRing cyc = cyclotomic_sring(R8, k_r(R8));
  CHECK_THROWS_AS(check_corollary_32(cyc, multiplier_group(Z8)), invalid_input);
}

TEST_CASE("nested A-subgroup implications") {
  AbelianGroup Z12 = make_group({12});
  SRing r2 = rank2(Z12);
  CheckReport rep = check_lemma_33(r2, multiplier_group(Z12), {0, 6});
  CHECK(rep.pass);
  CHECK(rep.checked == 2);

  AbelianGroup Z8 = make_group({8});
  CommRing R8 = make_zn(8);
  SRing cyc = cyclotomic_sring(R8, k_r(R8));
  CHECK_THROWS_AS(check_lemma_33(cyc, multiplier_group(Z8), {0, 4}), invalid_input);
}

TEST_CASE("the standing rank-3 ring against the section-3 machinery") {
  auto [R, A] = build_counterexample(3);
  AutGroup KR = k_r(R);
  // an axis is a proper K-invariant subgroup; the A-subgroups are only the
  // trivial one and the whole group
  Subset axis;
  for (Elem x = 0; x < A.group.order; ++x)
    if (A.group.decode(x)[1] == 0) axis.push_back(x);
  CheckReport l = check_lemma_33(A, KR, axis);
  CHECK(l.pass);
  CHECK(l.checked == 2);
  // no separating subgroup at all, so the rank-2 conclusion is vacuous
  CheckReport c = check_corollary_32(A, KR);
  CHECK(c.pass);
  CHECK(c.vacuous);
  CHECK(separating_subgroups(A).empty());
}
