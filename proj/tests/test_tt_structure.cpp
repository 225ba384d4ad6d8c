#include <doctest.h>

#include "oracle.hpp"
#include "zgpd/tt_structure.hpp"

using namespace zgpd;

TEST_CASE("P_1 has one object per morphism") {
  for (const ZTwoPtr& a : {one(), check_I(), nabla(), s_one(), s_I()}) {
    const PathObject p = path_object(to_one(a));
    CHECK(p.total->g().object_count() == oracle::path_objects_over_point(*a));
    CHECK(p.total->g().object_count() == a->g().morphism_count());
  }
}

TEST_CASE("path objects of fibrations between fibrant objects are very good") {
  std::size_t checked = 0;
  const std::vector<ZTwoPtr> fibrant{one(), nabla(), s_one(), s_I()};
  for (const auto& a : fibrant) {
    for (const auto& c : fibrant) {
      for (const auto& f : enumerate_equivariant_maps(a, c)) {
        if (!is_injective_fibration(f).holds) continue;
        const PathObjectReport r = check_path_object(path_object(f));
        CHECK(r.ok());
        REQUIRE(r.total_fibrant.has_value());
        CHECK(*r.total_fibrant);
        ++checked;
      }
    }
  }
  CHECK(checked >= 8);
}

TEST_CASE("path objects along maps that are not fibrations still factor the diagonal") {
  const PathObjectReport r = check_path_object(path_object(to_one(check_I())));
  CHECK(r.delta1_acyclic_cofibration);
  CHECK(r.delta2_fibration);
  CHECK(r.composite_is_diagonal);
  CHECK_FALSE(r.total_fibrant.has_value());
}

TEST_CASE("pullbacks of fibrations are fibrations") {
  const EquivariantFunctor g = to_one(s_one());
  for (const auto& x : {one(), nabla(), s_I()}) {
    const FibrationPullback pb = pullback_fibration(g, to_one(x));
    CHECK(is_injective_fibration(pb.fibration).holds);
    CHECK(pb.square.object->g().object_count() == 2 * x->g().object_count());
  }
  try {
    pullback_fibration(to_one(check_I()), to_one(one()));
    FAIL("expected NOT_A_FIBRATION");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFibration);
  }
}

TEST_CASE("dependent product along S(1) -> 1") {
  const auto prod = product(s_one(), s_one());
  const DependentProduct pi = pi_along(to_one(s_one()), prod.first);
  // Sections of a two-point fiber over each of the two points.
  CHECK(pi.total->g().object_count() == 4);
  CHECK_FALSE(check_equivariant(pi.projection).has_value());
  CHECK(is_injective_fibration(pi.projection).holds);
  for (const auto& y : small_test_objects())
    for (const auto& m : enumerate_equivariant_maps(y, one())) CHECK(check_pi_adjunction(pi, m).ok());
}

TEST_CASE("dependent product along an identity is the fibration itself") {
  const EquivariantFunctor f = to_one(nabla());
  const DependentProduct pi = pi_along(identity_map(one()), f);
  CHECK(pi.total->g().object_count() == nabla()->g().object_count());
  CHECK(pi.total->g().morphism_count() == nabla()->g().morphism_count());
}

TEST_CASE("fibration category axioms on a small corpus") {
  TtfcCorpus c;
  c.objects = {one(), nabla(), s_one()};
  const TtfcReport r = verify_ttfc_axioms(c);
  CHECK(r.passed());
  CHECK(r.checks.size() == 5);
  for (const auto& k : r.checks) CHECK(k.instances > 0);
  c.objects.push_back(check_I());
  try {
    verify_ttfc_axioms(c);
    FAIL("expected NOT_FIBRANT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFibrant);
  }
}
