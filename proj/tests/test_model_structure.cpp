#include <doctest.h>

#include "oracle.hpp"
#include "zgpd/model_structure.hpp"

using namespace zgpd;

namespace {

std::vector<ZTwoPtr> small_objects() {
  return {one(), check_I(), nabla(), s_one(), s_I(), coproduct(one(), one())};
}

// Right lifting against both generators, decided square by square with the brute-force filler count.
bool rlp_generators_by_brute_force(const EquivariantFunctor& f) {
  bool holds = true;
  for (const EquivariantFunctor& gen : {s_i(), i_prime()}) {
    for_each_square(gen, f, [&](const LiftingProblem& p) {
      if (oracle::count_fillers(p.left, p.right, p.top, p.bottom) == 0) holds = false;
      return holds;
    });
  }
  return holds;
}

}  // namespace

TEST_CASE("check_I -> 1 is a projective but not an injective fibration") {
  const EquivariantFunctor f = to_one(check_I());
  CHECK(is_projective_fibration(f));
  const FibrationReport r = is_injective_fibration(f);
  CHECK_FALSE(r.holds);
  CHECK(r.isofibration);
  CHECK_FALSE(r.i_prime_lifting);
  REQUIRE(r.failing_square.has_value());
  const LiftingProblem& p = *r.failing_square;
  CHECK(p.left == i_prime());
  CHECK_NOTHROW(validate_square(p));
  CHECK_FALSE(solve_lifting(p).has_value());
  CHECK(oracle::count_fillers(p.left, p.right, p.top, p.bottom) == 0);
}

TEST_CASE("fibrant objects") {
  CHECK(is_fibrant(one()));
  CHECK_FALSE(is_fibrant(check_I()));
  CHECK(is_fibrant(nabla()));
  CHECK(is_fibrant(s_one()));
  CHECK(is_fibrant(s_I()));
  CHECK(is_fibrant(coproduct(one(), one())));
}

TEST_CASE("generators are acyclic cofibrations") {
  CHECK(is_acyclic_cofibration(i_prime()));
  CHECK(is_acyclic_cofibration(s_i()));
  CHECK_FALSE(is_acyclic_cofibration(to_one(s_one())));
  CHECK(is_weak_equivalence(to_one(nabla())));
  CHECK_FALSE(is_cofibration(to_one(s_one())));
}

TEST_CASE("the lifting solver counts fillers like brute force") {
  for (const auto& a : small_objects()) {
    const EquivariantFunctor right = to_one(a);
    for (const EquivariantFunctor& left : {i_prime(), s_i()}) {
      for_each_square(left, right, [&](const LiftingProblem& p) {
        const std::size_t expected = oracle::count_fillers(p.left, p.right, p.top, p.bottom);
        CHECK(count_fillers(p) == expected);
        const auto filler = solve_lifting(p);
        CHECK(filler.has_value() == (expected > 0));
        if (filler) {
          CHECK(compose(filler->diagonal, p.left) == p.top);
          CHECK(compose(p.right, filler->diagonal) == p.bottom);
        }
        return true;
      });
    }
  }
}

TEST_CASE("the fibration test agrees with brute-force lifting against the generators") {
  std::size_t maps = 0;
  for (const auto& x : small_objects()) {
    for (const auto& a : small_objects()) {
      for (const auto& f : enumerate_equivariant_maps(x, a)) {
        CHECK(is_injective_fibration(f).holds == rlp_generators_by_brute_force(f));
        ++maps;
      }
    }
  }
  CHECK(maps > 50);
}

TEST_CASE("a failing isofibration reports an S(i) square") {
  // The point 0 of S(1) into S(I) cannot lift phi.
  const auto maps = enumerate_equivariant_maps(s_one(), s_I());
  REQUIRE_FALSE(maps.empty());
  const FibrationReport r = is_injective_fibration(maps.front());
  CHECK_FALSE(r.isofibration);
  REQUIRE(r.failing_square.has_value());
  CHECK(r.failing_square->left == s_i());
  CHECK_FALSE(solve_lifting(*r.failing_square).has_value());
}

TEST_CASE("invalid squares are rejected") {
  const LiftingProblem p{i_prime(), to_one(nabla()), interval_map(nabla(), ObjectId(0), MorphismId(1)),
                         identity_map(nabla())};
  CHECK_THROWS_AS(validate_square(p), Error);
}

TEST_CASE("cell decompositions of the generators and their composites") {
  for (const EquivariantFunctor& f : {i_prime(), s_i()}) {
    const CellDecomposition d = cell_decompose(f);
    CHECK(d.cells.size() == 1);
    CHECK(verify_decomposition(f, d, {one(), check_I(), nabla()}).ok());
  }
  CHECK(cell_decompose(i_prime()).cells[0].kind == CellStage::Kind::IPrimeCell);
  CHECK(cell_decompose(s_i()).cells[0].kind == CellStage::Kind::SCell);
  CHECK_THROWS_AS(cell_decompose(to_one(s_one())), Error);
}

TEST_CASE("decompositions verify across a slice of the corpus") {
  const auto corpus = acyclic_cofibration_corpus(3);
  CHECK(corpus.size() > 20);
  for (std::size_t k = 0; k < corpus.size(); k += 7) {
    const CellDecomposition d = cell_decompose(corpus[k]);
    const DecompositionCheck c = verify_decomposition(corpus[k], d, {one(), nabla()});
    CHECK(c.ok());
    CHECK(d.cells.size() + corpus[k].source->g().object_count() >= corpus[k].target->g().object_count() / 2);
  }
}

TEST_CASE("lifting through cells agrees with direct search") {
  const auto corpus = acyclic_cofibration_corpus(3);
  const EquivariantFunctor right = to_one(nabla());
  for (std::size_t k = 0; k < corpus.size(); k += 5) {
    const CellDecomposition d = cell_decompose(corpus[k]);
    std::size_t seen = 0;
    for_each_square(corpus[k], right, [&](const LiftingProblem& p) {
      const auto staged = lift_through_cells(d, p);
      REQUIRE(staged.has_value());
      CHECK(compose(staged->diagonal, p.left) == p.top);
      CHECK(compose(p.right, staged->diagonal) == p.bottom);
      return ++seen < 4;
    });
  }
}

TEST_CASE("generator characterization on fibrations and non-fibrations") {
  const auto corpus = acyclic_cofibration_corpus(3);
  for (const EquivariantFunctor& f : {to_one(check_I()), to_one(nabla()), to_one(s_one()), i_prime()}) {
    const CharacterizationReport r = verify_generator_characterization(f, corpus);
    CHECK(r.agree());
  }
}

TEST_CASE("factorization into an acyclic cofibration and a fibration") {
  for (const auto& a : {one(), nabla(), s_one(), s_I()}) {
    for (const auto& f : enumerate_equivariant_maps(a, nabla())) {
      const Factorization fac = factorize(f);
      CHECK(is_acyclic_cofibration(fac.j));
      CHECK(is_injective_fibration(fac.q).holds);
      CHECK(compose(fac.q, fac.j) == f);
      CHECK(is_fibrant(fac.middle));
    }
  }
  try {
    factorize(to_one(check_I()));
    FAIL("expected DOMAIN_NOT_FIBRANT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainNotFibrant);
  }
}

TEST_CASE("fibrant replacement of check_I") {
  const FibrantReplacement r = fibrant_replacement(check_I());
  CHECK(is_fibrant(r.object));
  CHECK(is_acyclic_cofibration(r.inclusion));
  CHECK(r.object->g().object_count() == oracle::path_objects_over_point(*check_I()));
}
