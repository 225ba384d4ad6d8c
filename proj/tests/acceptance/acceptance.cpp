// Acceptance suite: one PASS/FAIL line per criterion. `--extended` adds the pool-3 universe.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "zgpd/universe.hpp"

using namespace zgpd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("AC%d %s  %-48s %7.2fs  %s\n", n, o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  std::fflush(stdout);
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::vector<ZTwoPtr> small_objects() {
  return {one(), check_I(), nabla(), s_one(), s_I(), coproduct(one(), one())};
}

// Every equivariant map between small objects, plus the generators.
std::vector<EquivariantFunctor> map_corpus() {
  std::vector<EquivariantFunctor> out{i_prime(), s_i()};
  for (const auto& x : small_objects())
    for (const auto& a : small_objects())
      for (const auto& f : enumerate_equivariant_maps(x, a)) out.push_back(f);
  return out;
}

// Bases with at most four objects.
std::vector<ZTwoPtr> covering_bases() {
  const GroupoidPtr z3 = cyclic_group_groupoid(3);
  return {one(),
          check_I(),
          nabla(),
          s_one(),
          s_I(),
          coproduct(one(), one()),
          trivial_ztwo(cyclic_group_groupoid(2)),
          make_ztwo(z3, {ObjectId(0)}, {MorphismId(0), MorphismId(2), MorphismId(1)}),
          coproduct(s_one(), one()),
          coproduct(nabla(), one()),
          coproduct(s_one(), s_one())};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) extended = extended || std::strcmp(argv[i], "--extended") == 0;

  criterion(1, "check_I -> 1: projective, not injective", 1, [] {
    Outcome o;
    const EquivariantFunctor f = to_one(check_I());
    expect(o, is_projective_fibration(f), "not a projective fibration");
    const FibrationReport r = is_injective_fibration(f);
    expect(o, !r.holds, "reported as an injective fibration");
    expect(o, r.failing_square.has_value() && r.failing_square->left == i_prime(), "no witness square against i'");
    if (r.failing_square) {
      validate_square(*r.failing_square);
      const auto& p = *r.failing_square;
      expect(o, oracle::count_fillers(p.left, p.right, p.top, p.bottom) == 0, "witness square has a filler");
    }
    if (o.pass) o.detail = "witness against i' has no filler";
    return o;
  });

  const auto corpus = acyclic_cofibration_corpus(4);

  criterion(2, "generator test = direct RLP (corpus <= 4 objects)", 300, [&] {
    Outcome o;
    const auto maps = map_corpus();
    std::size_t squares = 0, fibrations = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const CharacterizationReport r = verify_generator_characterization(maps[k], corpus);
      expect(o, r.agree(), "disagreement on map " + std::to_string(k));
      squares += r.squares;
      fibrations += r.generator_test;
    }
    if (o.pass)
      o.detail = std::to_string(maps.size()) + " maps (" + std::to_string(fibrations) + " fibrations) x " +
                 std::to_string(corpus.size()) + " cofibrations, " + std::to_string(squares) + " squares";
    return o;
  });

  criterion(3, "cell decompositions verify (corpus <= 4 objects)", 300, [&] {
    Outcome o;
    std::size_t cells = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const CellDecomposition d = cell_decompose(corpus[k]);
      const DecompositionCheck c = verify_decomposition(corpus[k], d, {one(), check_I(), nabla()});
      expect(o, c.ok(), "decomposition " + std::to_string(k) + " fails");
      for (const auto& cell : d.cells) expect(o, is_acyclic_cofibration(cell.inclusion), "stage is not acyclic");
      cells += d.cells.size();
    }
    if (o.pass) o.detail = std::to_string(corpus.size()) + " maps, " + std::to_string(cells) + " cells";
    return o;
  });

  criterion(4, extended ? "universe maps are fibrations (N = 0..3)" : "universe maps are fibrations (N = 0..2)",
            extended ? 600 : 60, [&] {
    Outcome o;
    const std::size_t top = extended ? 3 : 2;
    std::size_t fillers = 0;
    for (std::size_t n = 0; n <= top; ++n) {
      const UniverseMapsReport r = check_universe_maps(build_universe(n));
      expect(o, r.passed(), "pool " + std::to_string(n));
      fillers += r.u_fillers_checked + r.p_fillers_checked;
    }
    if (o.pass) o.detail = std::to_string(fillers) + " explicit fillers checked";
    return o;
  });

  criterion(5, "path objects of fibrations are very good", 300, [] {
    Outcome o;
    std::vector<ZTwoPtr> fibrant{one(), nabla(), s_one(), s_I(), coproduct(one(), one()),
                                 fibrant_replacement(check_I()).object};
    std::size_t checked = 0;
    for (const auto& a : fibrant) {
      for (const auto& c : fibrant) {
        for (const auto& f : enumerate_equivariant_maps(a, c)) {
          if (!is_injective_fibration(f).holds) continue;
          const PathObjectReport r = check_path_object(path_object(f));
          expect(o, r.ok() && r.total_fibrant.value_or(false), "path object " + std::to_string(checked));
          ++checked;
        }
      }
    }
    if (o.pass) o.detail = std::to_string(checked) + " fibrations";
    return o;
  });

  criterion(6, "univalence (N = 0..2)", 60, [] {
    Outcome o;
    const oracle::UniverseCounts c2 = oracle::universe_counts(2);
    expect(o, c2.objects == 7, "oracle |Ob U| != 7");
    for (std::size_t n = 0; n <= 2; ++n) {
      const UniverseBundle b = build_universe(n);
      const UnivalenceCertificate c = check_univalence(b);
      expect(o, c.conclusion, "conclusion false at pool " + std::to_string(n));
      const oracle::UniverseCounts counts = oracle::universe_counts(static_cast<int>(n));
      expect(o, c.u_objects == counts.objects, "|Ob U| differs from the oracle");
      expect(o, c.path_objects == counts.morphisms, "|Ob P_1U| differs from |Mor U|");
      if (n == 2) {
        // Every pair of objects of U with a nonempty hom set has its hom set compared.
        std::set<std::pair<ObjectId, ObjectId>> connected;
        for (MorphismId m : b.U->g().morphisms()) connected.emplace(b.U->g().source(m), b.U->g().target(m));
        expect(o, c.delta1_weak_equivalence && c.hom_pairs_checked == connected.size(),
               "delta1 not checked on every hom pair");
        o.detail = "|Ob U| = " + std::to_string(c.u_objects) + ", |Ob P_1U| = " + std::to_string(c.path_objects);
      }
    }
    return o;
  });

  criterion(7, "fibration category axioms", 600, [] {
    Outcome o;
    TtfcCorpus c;
    c.objects = {one(), nabla(), s_one(), fibrant_replacement(check_I()).object, build_universe(2).U};
    const TtfcReport r = verify_ttfc_axioms(c);
    std::string counts;
    for (const auto& k : r.checks) {
      expect(o, k.passed, k.name + (k.witnesses.empty() ? "" : ": " + k.witnesses.front()));
      counts += k.name + "=" + std::to_string(k.instances) + " ";
    }
    if (o.pass) o.detail = counts;
    return o;
  });

  criterion(8, "universe axioms, POOL_EXHAUSTED exactly past N", 600, [] {
    Outcome o;
    const auto coverings = covering_corpus();
    // Fiber sizes worked out by hand: 1 -> 1 has fibers of size 1, S(1) -> 1 of size 2, and
    // S(1) x S(1) -> S(1) -> 1 of size 4.
    const std::vector<std::pair<std::string, std::size_t>> hand{
        {"member corpus/0", 1}, {"member corpus/1", 2}, {"composite corpus/1 after corpus/4", 4}};
    std::size_t instances = 0;
    for (std::size_t n : {1, 2, 4}) {
      const UniverseAxiomReport r = universe_axiom_check(build_universe(n), coverings);
      expect(o, r.passed(), "inconsistent instance at pool " + std::to_string(n));
      for (const auto& i : r.instances) {
        expect(o, i.exhausted == (i.max_fiber > n), i.clause + " " + i.description);
        for (const auto& [what, size] : hand)
          if (i.clause + " " + i.description == what)
            expect(o, i.max_fiber == size, what + ": fiber " + std::to_string(i.max_fiber));
      }
      std::size_t found = 0;
      for (const auto& [what, size] : hand)
        for (const auto& i : r.instances) found += i.clause + " " + i.description == what;
      expect(o, found == hand.size(), "hand-computed instances missing");
      instances += r.instances.size();
    }
    if (o.pass) o.detail = std::to_string(instances) + " instances over pools 1, 2, 4";
    return o;
  });

  criterion(9, "classification roundtrip on 100 random coverings", 300, [] {
    Outcome o;
    const UniverseBundle b = build_universe(3);
    std::mt19937 rng(20261016);
    const auto bases = covering_bases();
    std::vector<std::vector<EquivariantFunctor>> chis;
    for (const auto& x : bases) {
      SearchLimits limits = SearchLimits::defaults();
      chis.push_back(enumerate_equivariant_maps(x, b.U, limits));
    }
    std::size_t done = 0;
    while (done < 100) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng);
      if (chis[k].empty()) continue;
      const auto& chi = chis[k][std::uniform_int_distribution<std::size_t>(0, chis[k].size() - 1)(rng)];
      // A covering with fibers <= 3, with its objects and morphisms shuffled.
      const EquivariantPullback pb = pullback(chi, b.p);
      std::vector<std::size_t> ob(pb.object->g().object_count()), mo(pb.object->g().morphism_count());
      std::iota(ob.begin(), ob.end(), 0);
      std::iota(mo.begin(), mo.end(), 0);
      std::shuffle(ob.begin(), ob.end(), rng);
      std::shuffle(mo.begin(), mo.end(), rng);
      const Relabeled copy = relabel(pb.object, ob, mo);
      const EquivariantFunctor q = compose(pb.first, copy.from_copy);
      expect(o, oracle::is_covering(q), "generated map is not a covering");
      const SmallFibrationWitness w = classify(q, b);
      expect(o, is_isomorphism(w.comparison.map), "comparison is not an isomorphism");
      expect(o, compose(w.pullback.first, w.comparison) == q, "comparison is not over the base");
      expect(o, !check_equivariant(w.comparison).has_value(), "comparison is not equivariant");
      ++done;
    }
    if (o.pass) o.detail = "100 coverings over " + std::to_string(bases.size()) + " bases";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
