#include "zgpd/functor.hpp"

#include <algorithm>

#include "search.hpp"

namespace zgpd {

namespace {

std::uint64_t key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) { return a == b || (a && b && *a == *b); }

bool operator==(const Functor& f, const Functor& g) {
  return f.objects == g.objects && f.morphisms == g.morphisms && same_groupoid(f.source, g.source) &&
         same_groupoid(f.target, g.target);
}

std::optional<std::string> check_functor(const Functor& f, std::vector<std::string>* witnesses) {
  auto fail = [&](std::string what, std::vector<std::string> w) -> std::optional<std::string> {
    if (witnesses) *witnesses = std::move(w);
    return what;
  };
  if (!f.source || !f.target) return fail("functor without source or target", {});
  const Groupoid& a = *f.source;
  const Groupoid& b = *f.target;
  if (f.objects.size() != a.object_count()) return fail("object table has the wrong length", {});
  if (f.morphisms.size() != a.morphism_count()) return fail("morphism table has the wrong length", {});
  for (ObjectId x : a.objects())
    if (f(x).index() >= b.object_count()) return fail("object image out of range", {a.object_name(x)});
  for (MorphismId m : a.morphisms())
    if (f(m).index() >= b.morphism_count()) return fail("morphism image out of range", {a.morphism_name(m)});
  for (MorphismId m : a.morphisms()) {
    if (b.source(f(m)) != f(a.source(m)) || b.target(f(m)) != f(a.target(m)))
      return fail("source or target not preserved", {a.morphism_name(m)});
  }
  for (ObjectId x : a.objects())
    if (f(a.identity(x)) != b.identity(f(x))) return fail("identity not preserved", {a.object_name(x)});
  // With identities and endpoints preserved, functoriality reduces to the normal form: f must be a
  // homomorphism on each base automorphism group and respect the transport decomposition.
  for (std::size_t c = 0; c < a.component_count(); ++c) {
    const std::size_t order = a.automorphism_order(c);
    for (std::uint32_t e1 = 0; e1 < order; ++e1) {
      for (std::uint32_t e2 = 0; e2 < order; ++e2) {
        const MorphismId g1 = a.automorphism(c, e1);
        const MorphismId g2 = a.automorphism(c, e2);
        if (f(a.compose(g1, g2)) != b.compose(f(g1), f(g2)))
          return fail("composition not preserved", {a.morphism_name(g1), a.morphism_name(g2)});
      }
    }
  }
  for (MorphismId m : a.morphisms()) {
    const ObjectId x = a.source(m);
    const ObjectId y = a.target(m);
    const std::size_t c = a.component_of(x);
    const MorphismId tx = a.transport(x);
    const MorphismId ty = a.transport(y);
    const MorphismId g = a.automorphism(c, a.element(m));
    const MorphismId expected = b.compose(f(ty), b.compose(f(g), b.inverse(f(tx))));
    if (f(m) != expected) {
      const MorphismId first = a.compose(g, a.inverse(tx));
      return fail("composition not preserved", {a.morphism_name(ty), a.morphism_name(first)});
    }
  }
  return std::nullopt;
}

Functor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<ObjectId> objects,
                     std::vector<MorphismId> morphisms) {
  Functor f{std::move(source), std::move(target), std::move(objects), std::move(morphisms)};
  std::vector<std::string> witnesses;
  if (auto problem = check_functor(f, &witnesses)) throw Error(ErrorCode::NotAFunctor, *problem, witnesses);
  return f;
}

Functor identity_functor(const GroupoidPtr& g) {
  Functor f{g, g, {}, {}};
  for (ObjectId x : g->objects()) f.objects.push_back(x);
  for (MorphismId m : g->morphisms()) f.morphisms.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_groupoid(f.target, g.source))
    throw Error(ErrorCode::Incompatible, "functors are not composable");
  Functor h{f.source, g.target, {}, {}};
  h.objects.reserve(f.objects.size());
  h.morphisms.reserve(f.morphisms.size());
  for (ObjectId x : f.objects) h.objects.push_back(g(x));
  for (MorphismId m : f.morphisms) h.morphisms.push_back(g(m));
  return h;
}

Functor to_terminal(const GroupoidPtr& g) {
  return constant_functor(g, terminal_groupoid(), ObjectId(0));
}

Functor constant_functor(const GroupoidPtr& source, const GroupoidPtr& target, ObjectId at) {
  Functor f{source, target, std::vector<ObjectId>(source->object_count(), at),
            std::vector<MorphismId>(source->morphism_count(), target->identity(at))};
  return f;
}

bool is_injective_on_objects(const Functor& f) {
  std::vector<char> seen(f.target->object_count(), 0);
  for (ObjectId y : f.objects) {
    if (seen[y.index()]) return false;
    seen[y.index()] = 1;
  }
  return true;
}

EquivalenceReport is_equivalence(const Functor& f) {
  const Groupoid& a = *f.source;
  const Groupoid& b = *f.target;
  EquivalenceReport report;
  std::vector<char> hit;
  for (ObjectId x : a.objects()) {
    for (ObjectId y : a.component_objects(a.component_of(x))) {
      ++report.hom_pairs_checked;
      auto dom = a.hom(x, y);
      auto cod = b.hom(f(x), f(y));
      hit.assign(cod.size(), 0);
      // Hom sets of one component all have the automorphism-group order; map images to slots.
      for (MorphismId m : dom) {
        const auto slot = b.element(f(m));
        if (hit[slot]) {
          report.failure = "faithful";
          report.failing_pair = {x, y};
          return report;
        }
        hit[slot] = 1;
      }
      if (dom.size() != cod.size()) {
        report.failure = "full";
        report.failing_pair = {x, y};
        return report;
      }
    }
    // Pairs in different components have empty hom sets; their images must too.
    for (ObjectId y : a.objects()) {
      if (a.connected(x, y) || !b.connected(f(x), f(y))) continue;
      ++report.hom_pairs_checked;
      report.failure = "full";
      report.failing_pair = {x, y};
      return report;
    }
  }
  // Essential surjectivity: every target component is hit.
  std::vector<std::optional<ObjectId>> hit_component(b.component_count());
  for (ObjectId x : a.objects()) {
    auto& slot = hit_component[b.component_of(f(x))];
    if (!slot) slot = x;
  }
  for (ObjectId y : b.objects()) {
    const auto& pre = hit_component[b.component_of(y)];
    if (!pre) {
      report.failure = "essentially-surjective";
      report.failing_target = y;
      report.preimages.clear();
      return report;
    }
    report.preimages.emplace_back(*pre, b.hom(f(*pre), y).front());
  }
  report.holds = true;
  return report;
}

std::optional<MorphismId> lift_isomorphism(const Functor& f, ObjectId a, MorphismId psi) {
  const Groupoid& src = *f.source;
  std::optional<MorphismId> best;
  for (ObjectId z : src.component_objects(src.component_of(a))) {
    for (MorphismId m : src.hom(a, z)) {
      if (f(m) == psi && (!best || m < *best)) best = m;
    }
  }
  return best;
}

IsofibrationReport is_isofibration(const Functor& f) {
  const Groupoid& a = *f.source;
  const Groupoid& b = *f.target;
  IsofibrationReport report;
  std::vector<char> covered(b.morphism_count(), 0);
  std::vector<MorphismId> targets;
  for (ObjectId x : a.objects()) {
    const ObjectId fx = f(x);
    targets.clear();
    for (ObjectId y : b.component_objects(b.component_of(fx)))
      for (MorphismId n : b.hom(fx, y)) targets.push_back(n);
    for (ObjectId z : a.component_objects(a.component_of(x)))
      for (MorphismId m : a.hom(x, z)) covered[f(m).index()] = 1;
    std::sort(targets.begin(), targets.end());
    for (MorphismId n : targets) {
      if (!covered[n.index()] && report.holds) {
        report.holds = false;
        report.witness = {x, n};
      }
      covered[n.index()] = 0;
    }
    if (!report.holds) return report;
  }
  return report;
}

std::optional<ObjectId> Pullback::find_pair(ObjectId a, ObjectId b) const {
  auto it = object_index.find(key(a.value, b.value));
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> Pullback::find_pair(MorphismId phi, MorphismId psi) const {
  auto it = morphism_index.find(key(phi.value, psi.value));
  if (it == morphism_index.end()) return std::nullopt;
  return it->second;
}

Pullback pullback(const Functor& f, const Functor& g) {
  if (!same_groupoid(f.target, g.target)) throw Error(ErrorCode::Incompatible, "pullback of maps with different codomains");
  const Groupoid& A = *f.source;
  const Groupoid& B = *g.source;
  Pullback out;
  GroupoidBuilder builder;

  // Objects of B grouped by image.
  std::vector<std::vector<ObjectId>> fiber_b(f.target->object_count());
  for (ObjectId b : B.objects()) fiber_b[g(b).index()].push_back(b);
  for (ObjectId a : A.objects()) {
    for (ObjectId b : fiber_b[f(a).index()]) {
      const ObjectId id = builder.add_object(pair_name(A.object_name(a), B.object_name(b)));
      out.object_pairs.emplace_back(a, b);
      out.object_index.emplace(key(a.value, b.value), id);
    }
  }
  // Morphisms of B out of each object, grouped by image.
  std::vector<std::pair<std::uint64_t, MorphismId>> by_image;
  by_image.reserve(B.morphism_count());
  for (MorphismId m : B.morphisms()) by_image.emplace_back(key(B.source(m).value, g(m).value), m);
  std::sort(by_image.begin(), by_image.end());

  for (std::size_t i = 0; i < out.object_pairs.size(); ++i) {
    const auto [a, b] = out.object_pairs[i];
    std::vector<MorphismId> out_a;
    for (ObjectId z : A.component_objects(A.component_of(a)))
      for (MorphismId m : A.hom(a, z)) out_a.push_back(m);
    std::sort(out_a.begin(), out_a.end());
    for (MorphismId phi : out_a) {
      const std::uint64_t k = key(b.value, f(phi).value);
      auto lo = std::lower_bound(by_image.begin(), by_image.end(), std::make_pair(k, MorphismId(0)));
      for (auto it = lo; it != by_image.end() && it->first == k; ++it) {
        const MorphismId psi = it->second;
        const ObjectId s = id_at<ObjectId>(i);
        const ObjectId t = *out.find_pair(A.target(phi), B.target(psi));
        const MorphismId id = builder.add_morphism(pair_name(A.morphism_name(phi), B.morphism_name(psi)), s, t);
        out.morphism_pairs.emplace_back(phi, psi);
        out.morphism_index.emplace(key(phi.value, psi.value), id);
      }
    }
  }
  for (std::size_t i = 0; i < out.object_pairs.size(); ++i) {
    const auto [a, b] = out.object_pairs[i];
    builder.set_identity(id_at<ObjectId>(i), *out.find_pair(A.identity(a), B.identity(b)));
  }
  for (std::size_t i = 0; i < out.morphism_pairs.size(); ++i) {
    const auto [phi, psi] = out.morphism_pairs[i];
    builder.set_inverse(id_at<MorphismId>(i), *out.find_pair(A.inverse(phi), B.inverse(psi)));
  }
  out.object = std::move(builder).build([&](MorphismId second, MorphismId first) {
    const auto [p2, q2] = out.morphism_pairs[second.index()];
    const auto [p1, q1] = out.morphism_pairs[first.index()];
    return *out.find_pair(A.compose(p2, p1), B.compose(q2, q1));
  });
  out.first = Functor{out.object, f.source, {}, {}};
  out.second = Functor{out.object, g.source, {}, {}};
  for (auto [a, b] : out.object_pairs) {
    out.first.objects.push_back(a);
    out.second.objects.push_back(b);
  }
  for (auto [phi, psi] : out.morphism_pairs) {
    out.first.morphisms.push_back(phi);
    out.second.morphisms.push_back(psi);
  }
  return out;
}

Pullback product(const GroupoidPtr& a, const GroupoidPtr& b) { return pullback(to_terminal(a), to_terminal(b)); }

std::vector<Functor> enumerate_functors(const GroupoidPtr& a, const GroupoidPtr& b, const SearchLimits& limits) {
  std::vector<Functor> out;
  detail::MapConstraints c;
  c.source = a.get();
  c.target = b.get();
  SearchBudget budget(limits.max_nodes);
  detail::search_maps(c, budget, [&](const std::vector<ObjectId>& objects, const std::vector<MorphismId>& morphisms) {
    out.push_back(Functor{a, b, objects, morphisms});
    return true;
  });
  return out;
}

}  // namespace zgpd
