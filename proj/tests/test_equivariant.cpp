#include <doctest.h>

#include "oracle.hpp"
#include "zgpd/equivariant.hpp"

using namespace zgpd;

TEST_CASE("standard Z2-groupoids") {
  CHECK(one()->g().object_count() == 1);
  CHECK(check_I()->g().object_count() == 2);
  CHECK(fixed_points(*check_I()).empty());
  CHECK(nabla()->g().object_count() == 3);
  CHECK(nabla()->g().morphism_count() == 9);
  CHECK(fixed_points(*nabla()).size() == 1);
  CHECK(s_one()->g().object_count() == 2);
  CHECK(s_I()->g().object_count() == 4);
  CHECK(s_I()->g().morphism_count() == 8);
  for (const ZTwoPtr& a : {one(), check_I(), nabla(), s_one(), s_I()}) {
    for (ObjectId x : a->g().objects()) CHECK(a->alpha(a->alpha(x)) == x);
    for (MorphismId m : a->g().morphisms()) CHECK(a->alpha(a->alpha(m)) == m);
    CHECK_FALSE(check_functor(a->involution()).has_value());
  }
}

TEST_CASE("the involution of nabla twists psi by phi") {
  const Groupoid& g = nabla()->g();
  const MorphismId phi = *g.find_morphism("phi");
  const MorphismId psi = *g.find_morphism("psi");
  CHECK(nabla()->alpha(phi) == g.inverse(phi));
  CHECK(nabla()->alpha(psi) == g.compose(psi, phi));
}

TEST_CASE("generators are equivariant and injective on objects") {
  for (const EquivariantFunctor& f : {gen_i(), i_prime(), s_i()}) {
    CHECK_FALSE(check_equivariant(f).has_value());
    CHECK(is_injective_on_objects(f.map));
    CHECK(is_equivalence(f.map).holds);
  }
}

TEST_CASE("standard names resolve") {
  for (const char* name : {"one", "check_I", "nabla", "s_one", "s_I", "i", "i_prime", "s_i"})
    CHECK_NOTHROW(standard(name));
  CHECK_THROWS_AS(standard("kappa"), Error);
}

TEST_CASE("involutions are validated") {
  const GroupoidPtr interval = interval_groupoid();
  // Swapping the objects but fixing phi is not a functor.
  CHECK_THROWS_AS(make_ztwo(interval, {ObjectId(1), ObjectId(0)},
                            {MorphismId(3), MorphismId(1), MorphismId(2), MorphismId(0)}),
                  Error);
  const GroupoidPtr z3 = cyclic_group_groupoid(3);
  // Inversion on Z/3 is an involution; g -> g^2 composed with itself is the identity.
  CHECK_NOTHROW(make_ztwo(z3, {ObjectId(0)}, {MorphismId(0), MorphismId(2), MorphismId(1)}));
}

TEST_CASE("equivariant map enumeration agrees with brute force") {
  const std::vector<ZTwoPtr> xs{one(), check_I(), nabla(), s_one(), s_I(), trivial_ztwo(cyclic_group_groupoid(2))};
  for (const auto& x : xs) {
    for (const auto& a : xs) {
      const auto maps = enumerate_equivariant_maps(x, a);
      CHECK(maps.size() == oracle::count_maps(*x, *a));
      for (const auto& f : maps) CHECK_FALSE(check_equivariant(f).has_value());
    }
  }
}

TEST_CASE("maps out of S(g) are maps out of g") {
  const std::vector<ZTwoPtr> targets{one(), check_I(), nabla(), s_I()};
  for (const auto& a : targets) {
    const auto from_s1 = enumerate_equivariant_maps(s_one(), a);
    CHECK(from_s1.size() == a->g().object_count());
    const auto from_sI = enumerate_equivariant_maps(s_I(), a);
    CHECK(from_sI.size() == a->g().morphism_count());
    for (const auto& f : from_sI) {
      const Functor r = restrict_first_copy(f, interval_groupoid());
      CHECK(extend_from_first_copy(r, a) == f);
    }
  }
}

TEST_CASE("check_I has no fixed points, so it admits no map from 1") {
  CHECK(enumerate_equivariant_maps(one(), check_I()).empty());
  CHECK(enumerate_equivariant_maps(one(), nabla()).size() == 1);
}

TEST_CASE("equivariant pullbacks and coproducts") {
  const auto p = product(s_one(), s_one());
  CHECK(p.object->g().object_count() == 4);
  CHECK_FALSE(check_equivariant(p.first).has_value());
  CHECK(fixed_points(*p.object).empty());
  const auto c = coproduct(one(), s_one());
  CHECK(c->g().object_count() == 3);
  CHECK(fixed_points(*c).size() == 1);
  const auto pb = pullback(to_one(nabla()), to_one(check_I()));
  CHECK(pb.object->g().object_count() == 6);
}

TEST_CASE("relabeling gives an isomorphic copy") {
  const auto r = relabel(nabla(), {2, 0, 1}, {8, 7, 6, 5, 4, 3, 2, 1, 0});
  CHECK(is_isomorphism(r.to_copy.map));
  CHECK(compose(r.from_copy, r.to_copy) == identity_map(nabla()));
  CHECK(inverse_map(r.to_copy) == r.from_copy);
}
