#include "zgpd/tt_structure.hpp"

#include <map>
#include <set>

#include "internal.hpp"

namespace zgpd {

using detail::equivariant_constraints;
using detail::out_morphisms;
using detail::pack;
using detail::sorted_hom;

namespace {

void require_fibration(const EquivariantFunctor& f, const char* role, const SearchLimits& limits) {
  const FibrationReport r = is_injective_fibration(f, limits);
  if (!r.holds) throw Error(ErrorCode::NotAFibration, std::string(role) + " is not an injective fibration");
}

std::string join_names(const Groupoid& g, const std::vector<ObjectId>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + g.object_name(xs[i]);
  return out + "]";
}

std::string join_names(const Groupoid& g, const std::vector<MorphismId>& ms) {
  std::string out = "[";
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? "," : "") + g.morphism_name(ms[i]);
  return out + "]";
}

}  // namespace

FibrationPullback pullback_fibration(const EquivariantFunctor& g, const EquivariantFunctor& h,
                                     const SearchLimits& limits) {
  require_fibration(g, "g", limits);
  FibrationPullback out;
  out.square = pullback(g, h);
  out.fibration = out.square.second;
  return out;
}

std::optional<ObjectId> PathObject::find(ObjectId x, MorphismId phi) const {
  auto it = object_index.find(pack(x.value, phi.value));
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> PathObject::find(ObjectId source, ObjectId target, MorphismId r) const {
  const std::uint64_t n = triples.size();
  const std::uint64_t m = f.source->g().morphism_count();
  auto it = morphism_index.find((std::uint64_t{source.value} * n + target.value) * m + r.value);
  if (it == morphism_index.end()) return std::nullopt;
  return it->second;
}

PathObject path_object(const EquivariantFunctor& f, const SearchLimits& limits) {
  const ZTwoPtr& a = f.source;
  const Groupoid& g = a->g();
  const Groupoid& c = f.target->g();
  detail::PathTables t = detail::mapping_path(*a, *a, identity_functor(a->carrier), false, limits.max_morphisms,
                                              [&](MorphismId phi) { return c.is_identity(f(phi)); });
  PathObject p;
  p.f = f;
  p.total = t.object;
  p.triples = t.objects;
  p.rho = t.rho;
  p.tau = t.sigma;
  p.object_index = std::move(t.object_index);
  p.morphism_index = std::move(t.morphism_index);

  std::vector<ObjectId> d1_objects;
  std::vector<MorphismId> d1_morphisms;
  for (ObjectId x : g.objects()) d1_objects.push_back(*p.find(x, g.identity(x)));
  for (MorphismId m : g.morphisms())
    d1_morphisms.push_back(*p.find(d1_objects[g.source(m).index()], d1_objects[g.target(m).index()], m));
  p.delta1 = EquivariantFunctor{a, p.total, Functor{a->carrier, p.total->carrier, d1_objects, d1_morphisms}};

  p.product = pullback(f, f);
  const Pullback& tables = p.product.tables;
  std::vector<ObjectId> d2_objects;
  std::vector<MorphismId> d2_morphisms;
  for (const auto& [x, phi] : p.triples) d2_objects.push_back(*tables.find_pair(x, g.target(phi)));
  for (std::size_t i = 0; i < p.rho.size(); ++i) d2_morphisms.push_back(*tables.find_pair(p.rho[i], p.tau[i]));
  const ZTwoPtr& prod = p.product.object;
  p.delta2 = EquivariantFunctor{p.total, prod, Functor{p.total->carrier, prod->carrier, d2_objects, d2_morphisms}};
  return p;
}

PathObjectReport check_path_object(const PathObject& p, const SearchLimits& limits) {
  PathObjectReport r;
  const Groupoid& a = p.f.source->g();
  r.delta1_acyclic_cofibration = is_acyclic_cofibration(p.delta1);
  r.delta2_fibration = is_injective_fibration(p.delta2, limits).holds;
  r.equivariant = !check_equivariant(p.delta1) && !check_equivariant(p.delta2);

  const EquivariantFunctor d = compose(p.delta2, p.delta1);
  const Pullback& tables = p.product.tables;
  r.composite_is_diagonal = true;
  for (ObjectId x : a.objects())
    if (tables.find_pair(x, x) != d(x)) r.composite_is_diagonal = false;
  for (MorphismId m : a.morphisms())
    if (tables.find_pair(m, m) != d(m)) r.composite_is_diagonal = false;

  r.witness_isos = true;
  for (std::size_t i = 0; i < p.triples.size(); ++i) {
    const auto [x, phi] = p.triples[i];
    const ObjectId y = a.target(phi);
    const auto w = p.find(p.delta1(y), id_at<ObjectId>(i), a.inverse(phi));
    if (!w || p.tau[w->index()] != a.identity(y)) r.witness_isos = false;
  }

  if (is_injective_fibration(p.f, limits).holds && is_fibrant(p.f.source, limits))
    r.total_fibrant = is_fibrant(p.total, limits);
  return r;
}

MorphismId DependentProduct::representative(ObjectId a, MorphismId gamma) const {
  return representative_index.at(pack(a.value, gamma.value));
}

MorphismId DependentProduct::evaluate(MorphismId m, MorphismId theta) const {
  const Groupoid& A = g.source->g();
  const Groupoid& B = f.source->g();
  const ObjectId a = A.source(theta);
  const MorphismId theta_a = representative(a, projection(m));
  const MorphismId mu_a = representatives[m.index()][position[a.index()]];
  const Section& target = sections[total->g().target(m).index()];
  return B.compose(target.vertical[A.compose(theta, A.inverse(theta_a)).index()], mu_a);
}

DependentProduct pi_along(const EquivariantFunctor& g, const EquivariantFunctor& f, const SearchLimits& limits) {
  if (!same_ztwo(f.target, g.source)) throw Error(ErrorCode::Incompatible, "f must land in the domain of g");
  require_fibration(g, "g", limits);
  require_fibration(f, "f", limits);
  const ZTwoGroupoid& AZ = *g.source;
  const ZTwoGroupoid& BZ = *f.source;
  const ZTwoGroupoid& CZ = *g.target;
  const Groupoid& A = AZ.g();
  const Groupoid& B = BZ.g();
  const Groupoid& C = CZ.g();

  DependentProduct pi;
  pi.g = g;
  pi.f = f;
  pi.fibers.resize(C.object_count());
  pi.position.resize(A.object_count());
  for (ObjectId a : A.objects()) {
    auto& fiber = pi.fibers[g(a).index()];
    pi.position[a.index()] = fiber.size();
    fiber.push_back(a);
  }
  for (ObjectId a : A.objects())
    for (MorphismId m : out_morphisms(A, a)) pi.representative_index.emplace(pack(a.value, g(m).value), m);

  SearchBudget budget(limits.max_nodes);
  std::map<std::vector<std::uint32_t>, ObjectId> object_lookup;
  auto section_key = [&](ObjectId c, const std::vector<ObjectId>& objects, const std::vector<MorphismId>& vertical) {
    std::vector<std::uint32_t> key{c.value};
    for (ObjectId o : objects) key.push_back(o.value);
    for (MorphismId m : vertical) key.push_back(m.value);
    return key;
  };

  // Sections over each strict fiber.
  for (ObjectId c : C.objects()) {
    const auto& fiber = pi.fibers[c.index()];
    GroupoidBuilder fb;
    std::vector<MorphismId> embed;
    std::unordered_map<std::uint32_t, MorphismId> local;
    for (ObjectId a : fiber) fb.add_object(A.object_name(a));
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = 0; j < fiber.size(); ++j)
        for (MorphismId m : sorted_hom(A, fiber[i], fiber[j])) {
          if (!C.is_identity(g(m))) continue;
          local.emplace(m.value, fb.add_morphism(A.morphism_name(m), id_at<ObjectId>(i), id_at<ObjectId>(j)));
          embed.push_back(m);
        }
    for (std::size_t i = 0; i < fiber.size(); ++i) fb.set_identity(id_at<ObjectId>(i), local.at(A.identity(fiber[i]).value));
    for (std::size_t k = 0; k < embed.size(); ++k) fb.set_inverse(id_at<MorphismId>(k), local.at(A.inverse(embed[k]).value));
    GroupoidPtr vertical = std::move(fb).build([&](MorphismId second, MorphismId first) {
      return local.at(A.compose(embed[second.index()], embed[first.index()]).value);
    });
    std::vector<ObjectId> fiber_objects(fiber.begin(), fiber.end());
    Functor inclusion{vertical, g.source->carrier, fiber_objects, embed};

    detail::MapConstraints cons;
    cons.source = vertical.get();
    cons.target = f.source->carrier.get();
    cons.over = &f.map;
    cons.bottom = &inclusion;
    detail::search_maps(cons, budget, [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
      DependentProduct::Section s;
      s.base = c;
      s.objects = os;
      s.vertical.assign(A.morphism_count(), MorphismId{});
      for (std::size_t k = 0; k < embed.size(); ++k) s.vertical[embed[k].index()] = ms[k];
      object_lookup.emplace(section_key(c, os, ms), id_at<ObjectId>(pi.sections.size()));
      pi.sections.push_back(std::move(s));
      if (pi.sections.size() > limits.max_morphisms)
        throw Error(ErrorCode::BudgetExceeded, "too many sections in the dependent product");
      return true;
    });
  }
  auto find_section = [&](ObjectId c, const std::vector<ObjectId>& objects, const std::vector<MorphismId>& vertical_all) {
    std::vector<MorphismId> local_values;
    for (ObjectId a : pi.fibers[c.index()])
      for (ObjectId b : pi.fibers[c.index()])
        for (MorphismId m : sorted_hom(A, a, b))
          if (C.is_identity(g(m))) local_values.push_back(vertical_all[m.index()]);
    return object_lookup.at(section_key(c, objects, local_values));
  };

  // Morphisms: per pair of sections and gamma, the compatible families mu.
  GroupoidBuilder b;
  detail::NameSet object_names, morphism_names;
  for (const auto& s : pi.sections)
    b.add_object(object_names.fresh(C.object_name(s.base) + ":" + join_names(B, s.objects)));
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  std::vector<MorphismId> over;
  std::map<std::vector<std::uint32_t>, MorphismId> morphism_lookup;
  auto morphism_key = [](ObjectId p, ObjectId q, MorphismId gamma, const std::vector<MorphismId>& mu) {
    std::vector<std::uint32_t> key{p.value, q.value, gamma.value};
    for (MorphismId m : mu) key.push_back(m.value);
    return key;
  };
  std::vector<std::vector<ObjectId>> by_base(C.object_count());
  for (std::size_t i = 0; i < pi.sections.size(); ++i) by_base[pi.sections[i].base.index()].push_back(id_at<ObjectId>(i));

  for (std::size_t pi_index = 0; pi_index < pi.sections.size(); ++pi_index) {
    const ObjectId p = id_at<ObjectId>(pi_index);
    const auto& s = pi.sections[pi_index];
    const auto& fiber = pi.fibers[s.base.index()];
    for (ObjectId c2 : C.component_objects(C.component_of(s.base))) {
      for (ObjectId q : by_base[c2.index()]) {
        const auto& s2 = pi.sections[q.index()];
        for (MorphismId gamma : sorted_hom(C, s.base, c2)) {
          std::vector<MorphismId> theta(fiber.size());
          for (std::size_t i = 0; i < fiber.size(); ++i) theta[i] = pi.representative(fiber[i], gamma);
          std::vector<MorphismId> mu(fiber.size());
          // Backtracking over the fiber; verticals between assigned objects constrain mu.
          std::function<void(std::size_t)> assign = [&](std::size_t i) {
            budget.charge();
            if (i == fiber.size()) {
              const MorphismId id = b.add_morphism(
                  morphism_names.fresh(C.morphism_name(gamma) + join_names(B, mu)), p, q);
              ends.emplace_back(p, q);
              over.push_back(gamma);
              pi.representatives.push_back(mu);
              morphism_lookup.emplace(morphism_key(p, q, gamma, mu), id);
              if (ends.size() > limits.max_morphisms)
                throw Error(ErrorCode::BudgetExceeded, "dependent product has too many morphisms");
              return;
            }
            const ObjectId ai = fiber[i];
            const ObjectId target = s2.objects[pi.position[A.target(theta[i]).index()]];
            for (MorphismId m : sorted_hom(B, s.objects[i], target)) {
              if (f(m) != theta[i]) continue;
              mu[i] = m;
              bool ok = true;
              for (std::size_t j = 0; j <= i && ok; ++j) {
                for (MorphismId v : A.hom(fiber[j], ai)) {
                  if (!C.is_identity(g(v))) continue;
                  const MorphismId moved = A.compose(theta[i], A.compose(v, A.inverse(theta[j])));
                  if (B.compose(mu[i], s.vertical[v.index()]) != B.compose(s2.vertical[moved.index()], mu[j])) {
                    ok = false;
                    break;
                  }
                }
              }
              if (ok) assign(i + 1);
            }
          };
          assign(0);
        }
      }
    }
  }
  auto find_morphism = [&](ObjectId p, ObjectId q, MorphismId gamma, const std::vector<MorphismId>& mu) {
    return morphism_lookup.at(morphism_key(p, q, gamma, mu));
  };
  for (std::size_t i = 0; i < pi.sections.size(); ++i) {
    const ObjectId p = id_at<ObjectId>(i);
    const auto& s = pi.sections[i];
    std::vector<MorphismId> mu;
    const MorphismId id_c = C.identity(s.base);
    for (ObjectId a : pi.fibers[s.base.index()]) mu.push_back(s.vertical[pi.representative(a, id_c).index()]);
    b.set_identity(p, find_morphism(p, p, id_c, mu));
  }

  // Evaluation before the carrier exists.
  auto evaluate_raw = [&](MorphismId m, MorphismId theta) {
    const ObjectId a = A.source(theta);
    const MorphismId theta_a = pi.representative(a, over[m.index()]);
    const MorphismId mu_a = pi.representatives[m.index()][pi.position[a.index()]];
    const auto& target = pi.sections[ends[m.index()].second.index()];
    return B.compose(target.vertical[A.compose(theta, A.inverse(theta_a)).index()], mu_a);
  };
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const MorphismId m = id_at<MorphismId>(k);
    const auto [p, q] = ends[k];
    const MorphismId inv_gamma = C.inverse(over[k]);
    std::vector<MorphismId> nu;
    for (ObjectId a2 : pi.fibers[pi.sections[q.index()].base.index()]) {
      const MorphismId t = pi.representative(a2, inv_gamma);
      nu.push_back(B.inverse(evaluate_raw(m, A.inverse(t))));
    }
    b.set_inverse(m, find_morphism(q, p, inv_gamma, nu));
  }
  GroupoidPtr carrier = std::move(b).build([&](MorphismId second, MorphismId first) {
    const ObjectId p = ends[first.index()].first;
    const ObjectId r = ends[second.index()].second;
    const MorphismId gamma = C.compose(over[second.index()], over[first.index()]);
    std::vector<MorphismId> mu;
    for (ObjectId a : pi.fibers[pi.sections[p.index()].base.index()]) {
      const MorphismId theta2 = pi.representative(a, gamma);
      const MorphismId theta1 = pi.representative(a, over[first.index()]);
      const MorphismId rest = A.compose(theta2, A.inverse(theta1));
      mu.push_back(B.compose(evaluate_raw(second, rest), pi.representatives[first.index()][pi.position[a.index()]]));
    }
    return find_morphism(p, r, gamma, mu);
  });

  std::vector<ObjectId> object_alpha(pi.sections.size());
  for (std::size_t i = 0; i < pi.sections.size(); ++i) {
    const auto& s = pi.sections[i];
    const ObjectId c = CZ.alpha(s.base);
    std::vector<ObjectId> objects;
    for (ObjectId a : pi.fibers[c.index()]) objects.push_back(BZ.alpha(s.objects[pi.position[AZ.alpha(a).index()]]));
    std::vector<MorphismId> vertical(A.morphism_count());
    for (MorphismId v : A.morphisms())
      if (g(v) == C.identity(c)) vertical[v.index()] = BZ.alpha(s.vertical[AZ.alpha(v).index()]);
    object_alpha[i] = find_section(c, objects, vertical);
  }
  std::vector<MorphismId> morphism_alpha(ends.size());
  std::vector<ObjectId> projection_objects;
  for (const auto& s : pi.sections) projection_objects.push_back(s.base);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const MorphismId gamma = CZ.alpha(over[k]);
    const ObjectId p = object_alpha[ends[k].first.index()];
    const ObjectId q = object_alpha[ends[k].second.index()];
    std::vector<MorphismId> mu;
    for (ObjectId a : pi.fibers[C.source(gamma).index()]) {
      const MorphismId theta = pi.representative(a, gamma);
      mu.push_back(BZ.alpha(evaluate_raw(id_at<MorphismId>(k), AZ.alpha(theta))));
    }
    morphism_alpha[k] = find_morphism(p, q, gamma, mu);
  }
  pi.total = detail::unchecked_ztwo(carrier, std::move(object_alpha), std::move(morphism_alpha));
  pi.projection = EquivariantFunctor{pi.total, g.target, Functor{carrier, g.target->carrier, projection_objects, over}};
  return pi;
}

AdjunctionCount check_pi_adjunction(const DependentProduct& pi, const EquivariantFunctor& y, const SearchLimits& limits) {
  if (!same_ztwo(y.target, pi.g.target)) throw Error(ErrorCode::Incompatible, "test object must lie over the base");
  AdjunctionCount out;
  SearchBudget budget(limits.max_nodes);
  const EquivariantPullback gy = pullback(pi.g, y);  // objects (a, y)
  const Pullback& t = gy.tables;
  const ZTwoPtr& yz = y.source;

  std::set<std::vector<MorphismId>> transposes;
  auto into = equivariant_constraints(*yz, *pi.total);
  into.over = &pi.projection.map;
  into.bottom = &y.map;
  detail::search_maps(into, budget, [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
    ++out.maps_into_product;
    std::vector<ObjectId> objects;
    std::vector<MorphismId> morphisms;
    for (const auto& [a, w] : t.object_pairs)
      objects.push_back(pi.sections[os[w.index()].index()].objects[pi.position[a.index()]]);
    for (const auto& [theta, eta] : t.morphism_pairs) morphisms.push_back(pi.evaluate(ms[eta.index()], theta));
    EquivariantFunctor transpose{gy.object, pi.f.source, Functor{gy.object->carrier, pi.f.source->carrier, objects, morphisms}};
    if (check_equivariant(transpose) || !(compose(pi.f, transpose) == gy.first)) out.transposes_valid = false;
    if (!transposes.insert(morphisms).second) out.transposes_distinct = false;
    return true;
  });

  auto from = equivariant_constraints(*gy.object, *pi.f.source);
  from.over = &pi.f.map;
  from.bottom = &gy.first.map;
  detail::search_maps(from, budget, [&](const std::vector<ObjectId>&, const std::vector<MorphismId>&) {
    ++out.maps_from_pullback;
    return true;
  });
  return out;
}

std::vector<ZTwoPtr> small_test_objects() {
  return {
      trivial_ztwo(empty_groupoid()),
      one(),
      s_one(),
      coproduct(one(), one()),
      check_I(),
      trivial_ztwo(interval_groupoid()),
      trivial_ztwo(cyclic_group_groupoid(2)),
  };
}

bool TtfcReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::vector<EquivariantFunctor> some_maps(const ZTwoPtr& x, const ZTwoPtr& y, std::size_t cap, const SearchLimits& limits) {
  std::vector<EquivariantFunctor> out;
  if (cap == 0) return out;
  SearchBudget budget(limits.max_nodes);
  detail::search_maps(equivariant_constraints(*x, *y), budget,
                      [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
                        out.push_back(EquivariantFunctor{x, y, Functor{x->carrier, y->carrier, os, ms}});
                        return out.size() < cap;
                      });
  return out;
}

void record(AxiomCheck& check, bool ok, const std::string& what) {
  ++check.instances;
  if (!ok) {
    check.passed = false;
    if (check.witnesses.size() < 8) check.witnesses.push_back(what);
  }
}

}  // namespace

TtfcReport verify_ttfc_axioms(const TtfcCorpus& corpus, const SearchLimits& limits) {
  for (std::size_t i = 0; i < corpus.objects.size(); ++i) {
    if (!is_fibrant(corpus.objects[i], limits))
      throw Error(ErrorCode::NotFibrant, "corpus object " + std::to_string(i) + " is not fibrant",
                  {"objects/" + std::to_string(i)});
  }
  const auto& objects = corpus.objects;
  auto label = [](const char* kind, std::size_t i) { return std::string(kind) + "/" + std::to_string(i); };

  std::vector<EquivariantFunctor> fibrations = corpus.fibrations;
  for (const auto& x : objects) {
    fibrations.push_back(to_one(x));
    fibrations.push_back(identity_map(x));
  }

  TtfcReport report;
  AxiomCheck terminal{"terminal", true, 0, {}};
  record(terminal, is_fibrant(one(), limits), "1 is not fibrant");
  for (std::size_t i = 0; i < objects.size(); ++i)
    record(terminal, enumerate_equivariant_maps(objects[i], one(), limits).size() == 1, label("objects", i));
  report.checks.push_back(terminal);

  AxiomCheck fib{"fibrations", true, 0, {}};
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& x = objects[i];
    record(fib, is_injective_fibration(to_one(x), limits).holds, label("to-one", i));
    record(fib, is_injective_fibration(identity_map(x), limits).holds, label("identity", i));
    const std::size_t n = x->g().object_count();
    const std::size_t m = x->g().morphism_count();
    std::vector<std::size_t> ro(n), rm(m);
    for (std::size_t k = 0; k < n; ++k) ro[k] = n - 1 - k;
    for (std::size_t k = 0; k < m; ++k) rm[k] = m - 1 - k;
    record(fib, is_injective_fibration(relabel(x, ro, rm).to_copy, limits).holds, label("isomorphism", i));
  }
  for (std::size_t i = 0; i < corpus.fibrations.size(); ++i)
    record(fib, is_injective_fibration(corpus.fibrations[i], limits).holds, label("fibrations", i));
  report.checks.push_back(fib);

  AxiomCheck pb{"pullbacks", true, 0, {}};
  for (std::size_t i = 0; i < fibrations.size(); ++i) {
    const auto& g = fibrations[i];
    if (!is_injective_fibration(g, limits).holds) continue;
    for (std::size_t k = 0; k < objects.size(); ++k) {
      for (const auto& h : some_maps(objects[k], g.target, corpus.maps_per_pair, limits)) {
        const FibrationPullback p = pullback_fibration(g, h, limits);
        record(pb, is_injective_fibration(p.fibration, limits).holds && is_fibrant(p.square.object, limits),
               "fibration " + std::to_string(i) + " along a map from " + label("objects", k));
      }
    }
  }
  report.checks.push_back(pb);

  AxiomCheck dp{"dependent-products", true, 0, {}};
  const auto tests = small_test_objects();
  for (std::size_t i = 0; i < fibrations.size(); ++i) {
    for (std::size_t j = 0; j < fibrations.size(); ++j) {
      const auto& f = fibrations[i];
      const auto& g = fibrations[j];
      if (!same_ztwo(f.target, g.source)) continue;
      if (!is_injective_fibration(f, limits).holds || !is_injective_fibration(g, limits).holds) continue;
      const DependentProduct pi = pi_along(g, f, limits);
      const std::string what = "pi of fibration " + std::to_string(i) + " along " + std::to_string(j);
      record(dp, is_injective_fibration(pi.projection, limits).holds, what + ": projection");
      record(dp, !check_equivariant(pi.projection), what + ": equivariance");
      for (const auto& y : tests) {
        if (y->g().object_count() > 2) continue;
        for (const auto& map : some_maps(y, g.target, corpus.maps_per_pair, limits))
          record(dp, check_pi_adjunction(pi, map, limits).ok(), what + ": adjunction");
      }
    }
  }
  report.checks.push_back(dp);

  AxiomCheck fz{"factorization", true, 0, {}};
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t k = 0; k < objects.size(); ++k) {
      for (const auto& f : some_maps(objects[i], objects[k], corpus.maps_per_pair, limits)) {
        const Factorization fac = factorize(f, limits);
        const bool ok = is_acyclic_cofibration(fac.j) && is_injective_fibration(fac.q, limits).holds &&
                        is_fibrant(fac.middle, limits) && compose(fac.q, fac.j) == f;
        record(fz, ok, "map " + label("objects", i) + " -> " + label("objects", k));
      }
    }
  }
  report.checks.push_back(fz);
  return report;
}

}  // namespace zgpd
