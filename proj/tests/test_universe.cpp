#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zgpd/universe.hpp"

using namespace zgpd;

TEST_CASE("universe sizes agree with counts from label sets") {
  for (int n = 0; n <= 3; ++n) {
    const UniverseBundle b = build_universe(static_cast<std::size_t>(n));
    const oracle::UniverseCounts c = oracle::universe_counts(n);
    CHECK(b.U->g().object_count() == c.objects);
    CHECK(b.U->g().morphism_count() == c.morphisms);
    CHECK(fixed_points(*b.U).size() == c.fixed);
    CHECK(b.Utilde->g().object_count() == c.points);
  }
}

TEST_CASE("golden universe counts") {
  // Frozen after agreement with the label-set oracle above.
  const UniverseBundle b2 = build_universe(2);
  CHECK(b2.U->g().object_count() == 7);
  CHECK(b2.U->g().morphism_count() == 25);
  CHECK(fixed_points(*b2.U).size() == 5);
  const UniverseBundle b3 = build_universe(3);
  CHECK(b3.U->g().object_count() == 34);
  CHECK(b3.U->g().morphism_count() == 946);
}

TEST_CASE("the involution of U transposes the type") {
  const UniverseBundle b = build_universe(2);
  for (ObjectId x : b.U->g().objects()) {
    const auto& t = b.types[x.index()];
    const auto& u = b.types[b.U->alpha(x).index()];
    CHECK(u.a == t.b);
    CHECK(u.b == t.a);
    CHECK(u.phi == inverse(t.phi));
  }
  for (MorphismId m : b.U->g().morphisms()) {
    CHECK(b.rho[b.U->alpha(m).index()] == b.tau[m.index()]);
    CHECK(b.tau[b.U->alpha(m).index()] == b.rho[m.index()]);
  }
}

TEST_CASE("p is an equivariant covering") {
  for (std::size_t n : {0, 1, 2}) {
    const UniverseBundle b = build_universe(n);
    CHECK_FALSE(check_equivariant(b.p).has_value());
    CHECK(is_covering(b.p).holds);
    CHECK(oracle::is_covering(b.p));
  }
}

TEST_CASE("universe maps are fibrations with the explicit fillers") {
  for (std::size_t n : {0, 1, 2}) {
    const UniverseMapsReport r = check_universe_maps(build_universe(n));
    CHECK(r.passed());
  }
}

TEST_CASE("pools larger than eight are refused") {
  CHECK_THROWS_AS(build_universe(9), Error);
  SearchLimits tight = SearchLimits::defaults();
  tight.max_morphisms = 100;
  CHECK_THROWS_AS(build_universe(3, tight), Error);
}

TEST_CASE("covering detection matches brute force") {
  for (const auto& x : {one(), check_I(), nabla(), s_one(), s_I()}) {
    for (const auto& a : {one(), s_one(), check_I(), s_I()}) {
      for (const auto& f : enumerate_equivariant_maps(a, x)) CHECK(is_covering(f).holds == oracle::is_covering(f));
    }
  }
}

TEST_CASE("classification roundtrip on the covering corpus") {
  const UniverseBundle b = build_universe(2);
  for (const auto& q : covering_corpus()) {
    const SmallFibrationWitness w = classify(q, b);
    CHECK_FALSE(check_equivariant(w.chi).has_value());
    CHECK(is_isomorphism(w.comparison.map));
    CHECK(compose(w.pullback.first, w.comparison) == q);
  }
}

TEST_CASE("classification errors") {
  const UniverseBundle b1 = build_universe(1);
  try {
    classify(to_one(s_one()), b1);
    FAIL("expected POOL_EXHAUSTED");
  } catch (const PoolExhausted& e) {
    CHECK(e.fiber_size() == 2);
    CHECK(e.pool() == 1);
  }
  try {
    classify(to_one(check_I()), b1);
    FAIL("expected NOT_A_COVERING");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACovering);
  }
}

TEST_CASE("universe axioms on the covering corpus") {
  const auto corpus = covering_corpus();
  for (std::size_t n : {1, 2, 4}) {
    const UniverseAxiomReport r = universe_axiom_check(build_universe(n), corpus);
    CHECK(r.passed());
    for (const auto& i : r.instances) CHECK(i.exhausted == (i.max_fiber > n));
  }
}

TEST_CASE("over-base factorization legs") {
  const auto corpus = covering_corpus();
  const EquivariantFunctor& qb = corpus[4];  // S(1) x S(1) -> S(1)
  const EquivariantFunctor f = identity_map(qb.source);
  const OverBaseFactorization fac = factor_over_base(f, qb);
  CHECK(is_acyclic_cofibration(fac.first));
  CHECK(compose(fac.second, fac.first) == f);
  CHECK(is_covering(fac.second).holds);
}

TEST_CASE("univalence and the equivalence type") {
  for (std::size_t n : {0, 1, 2}) {
    const UniverseBundle b = build_universe(n);
    const UnivalenceCertificate c = check_univalence(b);
    CHECK(c.conclusion);
    CHECK(c.path_objects == b.U->g().morphism_count());
    const EquivalenceType e = equivalence_type(b);
    CHECK(e.section_matches);
    CHECK(e.fiberwise_count);
    CHECK(is_isomorphism(e.to_path.map));
  }
}

TEST_CASE("bijection helpers") {
  Bijection f{0b011, 0b110, {1, 2, -1}};
  CHECK(inverse(inverse(f)) == f);
  CHECK(compose(inverse(f), f).image == std::vector<int>{0, 1, -1});
  CHECK(elements(0b101) == std::vector<int>{0, 2});
  CHECK(set_name(0b101) == "{0,2}");
}
