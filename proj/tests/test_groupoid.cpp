#include <doctest.h>

#include "oracle.hpp"
#include "zgpd/functor.hpp"

using namespace zgpd;

namespace {

RawGroupoid z3_raw() { return cyclic_group_groupoid(3)->raw(); }

ErrorCode code_of(const RawGroupoid& raw) { return check_groupoid(raw).code; }

}  // namespace

TEST_CASE("standard groupoids have the expected sizes") {
  CHECK(terminal_groupoid()->object_count() == 1);
  CHECK(terminal_groupoid()->morphism_count() == 1);
  CHECK(empty_groupoid()->object_count() == 0);
  CHECK(interval_groupoid()->object_count() == 2);
  CHECK(interval_groupoid()->morphism_count() == 4);
  CHECK(cyclic_group_groupoid(5)->morphism_count() == 5);
  CHECK(cyclic_group_groupoid(5)->automorphism_order(0) == 5);
  auto g = coproduct(*interval_groupoid(), *cyclic_group_groupoid(2));
  CHECK(g->object_count() == 3);
  CHECK(g->morphism_count() == 6);
  CHECK(g->component_count() == 2);
  CHECK(g->find_object("1:*").has_value());
}

TEST_CASE("raw tables roundtrip through validation") {
  for (const GroupoidPtr& g : {terminal_groupoid(), interval_groupoid(), cyclic_group_groupoid(4),
                               coproduct(*interval_groupoid(), *cyclic_group_groupoid(3))}) {
    const RawGroupoid raw = g->raw();
    CHECK(check_groupoid(raw).valid);
    CHECK(*validate_groupoid(raw) == *g);
    CHECK(raw.composition.size() == g->composable_pair_count());
  }
}

TEST_CASE("groupoid laws hold on every composable pair") {
  for (const GroupoidPtr& g : {interval_groupoid(), cyclic_group_groupoid(6),
                               coproduct(*interval_groupoid(), *interval_groupoid())}) {
    g->for_each_composable([&](MorphismId second, MorphismId first, MorphismId result) {
      CHECK(g->source(result) == g->source(first));
      CHECK(g->target(result) == g->target(second));
      CHECK(g->compose(g->inverse(result), result) == g->identity(g->source(first)));
    });
    for (MorphismId f : g->morphisms()) {
      CHECK(g->compose(f, g->identity(g->source(f))) == f);
      CHECK(g->compose(g->inverse(f), f) == g->identity(g->source(f)));
      for (MorphismId h : g->morphisms()) {
        if (g->target(f) != g->source(h)) continue;
        for (MorphismId k : g->morphisms())
          if (g->target(h) == g->source(k))
            CHECK(g->compose(k, g->compose(h, f)) == g->compose(g->compose(k, h), f));
      }
    }
  }
}

TEST_CASE("validation names the violated axiom") {
  SUBCASE("broken inverse table") {
    RawGroupoid raw = z3_raw();
    raw.inverses[1].second = "g^1";  // g^1 is not its own inverse in Z/3
    CHECK(code_of(raw) == ErrorCode::NotAGroupoid);
    CHECK_THROWS_AS(validate_groupoid(raw), Error);
  }
  SUBCASE("identity that is not a unit") {
    RawGroupoid raw = z3_raw();
    raw.identities[0].second = "g^1";
    CHECK(code_of(raw) == ErrorCode::NotACategory);
  }
  SUBCASE("non-associative table") {
    RawGroupoid raw = z3_raw();
    for (auto& c : raw.composition)
      if (c.second == "g^1" && c.first == "g^1") c.result = "g^0";
    CHECK_FALSE(check_groupoid(raw).valid);
  }
  SUBCASE("unknown names") {
    RawGroupoid raw = z3_raw();
    raw.morphisms[1].target = "nowhere";
    CHECK(code_of(raw) == ErrorCode::Malformed);
  }
  SUBCASE("missing composite") {
    RawGroupoid raw = z3_raw();
    raw.composition.pop_back();
    CHECK_FALSE(check_groupoid(raw).valid);
  }
}

TEST_CASE("functor enumeration agrees with brute force") {
  const std::vector<GroupoidPtr> gs{terminal_groupoid(), interval_groupoid(), cyclic_group_groupoid(2),
                                    cyclic_group_groupoid(3), coproduct(*terminal_groupoid(), *terminal_groupoid())};
  for (const auto& a : gs) {
    for (const auto& b : gs) {
      const auto fs = enumerate_functors(a, b);
      CHECK(fs.size() == oracle::count_maps(*trivial_ztwo(a), *trivial_ztwo(b)));
      for (const auto& f : fs) CHECK_FALSE(check_functor(f).has_value());
    }
  }
}

TEST_CASE("equivalences and isofibrations") {
  CHECK(is_equivalence(to_terminal(interval_groupoid())).holds);
  CHECK(is_equivalence(to_terminal(terminal_groupoid())).holds);
  const auto two = discrete_groupoid({"a", "b"});
  const auto e = is_equivalence(to_terminal(two));
  CHECK_FALSE(e.holds);
  CHECK(e.failure == "full");
  CHECK_FALSE(is_equivalence(to_terminal(cyclic_group_groupoid(2))).holds);
  CHECK(is_isofibration(to_terminal(two)).holds);
  // The point inclusion into the interval cannot lift phi.
  const Functor inc = constant_functor(terminal_groupoid(), interval_groupoid(), ObjectId(0));
  const auto iso = is_isofibration(inc);
  CHECK_FALSE(iso.holds);
  REQUIRE(iso.witness.has_value());
  CHECK(interval_groupoid()->morphism_name(iso.witness->second) == "phi");
  CHECK(is_equivalence(inc).holds);
}

TEST_CASE("pullbacks match brute-force pairs") {
  const auto f = to_terminal(interval_groupoid());
  const auto g = to_terminal(cyclic_group_groupoid(3));
  const Pullback p = pullback(f, g);
  CHECK(p.object->object_count() == 2);
  CHECK(p.object->morphism_count() == 4 * 3);
  CHECK(p.find_pair(ObjectId(1), ObjectId(0)).has_value());
  const Pullback pr = product(interval_groupoid(), interval_groupoid());
  CHECK(pr.object->object_count() == 4);
  CHECK(pr.object->morphism_count() == 16);
  CHECK(compose(f, p.first) == compose(g, p.second));
}
