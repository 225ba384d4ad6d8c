#include "zgpd/model_structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "internal.hpp"
#include "search.hpp"

namespace zgpd {

using detail::equivariant_constraints;
using detail::fix_along;
using detail::out_morphisms;
using detail::pack;
using detail::sorted_hom;

namespace {

struct NewObject {
  std::string name;
  ObjectId anchor;
  std::size_t partner;  // index among the new objects of alpha(this)
  MorphismId kappa;     // alpha(anchor(u)) -> anchor(alpha(u))
};

struct Extension {
  ZTwoPtr object;
  std::vector<ObjectId> anchor;
  std::vector<MorphismId> underlying;
  std::vector<ObjectId> new_ids;
  std::unordered_map<std::uint64_t, MorphismId> index;  // (u * n + v, r) packed
  std::size_t n = 0;

  MorphismId find(ObjectId u, ObjectId v, MorphismId r) const {
    return index.at(pack(static_cast<std::uint32_t>(u.index() * n + v.index()), r.value));
  }
};

// Adds objects isomorphic to existing ones: hom(u, v) is hom(anchor u, anchor v) of x.
Extension extend(const ZTwoPtr& x, const std::vector<NewObject>& added) {
  const Groupoid& g = x->g();
  const std::size_t n_old = g.object_count();
  const std::size_t n = n_old + added.size();
  Extension ext;
  ext.n = n;
  std::vector<MorphismId> kappa(n);
  std::vector<ObjectId> alpha(n);
  for (ObjectId u : g.objects()) {
    ext.anchor.push_back(u);
    kappa[u.index()] = g.identity(x->alpha(u));
    alpha[u.index()] = x->alpha(u);
  }
  for (std::size_t i = 0; i < added.size(); ++i) {
    ext.anchor.push_back(added[i].anchor);
    kappa[n_old + i] = added[i].kappa;
    alpha[n_old + i] = id_at<ObjectId>(n_old + added[i].partner);
    ext.new_ids.push_back(id_at<ObjectId>(n_old + i));
  }

  detail::NameSet object_names, morphism_names;
  GroupoidBuilder b;
  std::vector<std::string> names;
  for (ObjectId u : g.objects()) names.push_back(object_names.fresh(g.object_name(u)));
  for (const auto& a : added) names.push_back(object_names.fresh(a.name));
  for (const auto& name : names) b.add_object(name);
  for (MorphismId m : g.morphisms()) morphism_names.fresh(g.morphism_name(m));

  std::vector<std::pair<ObjectId, ObjectId>> ends;
  auto add = [&](ObjectId u, ObjectId v, MorphismId r, std::string name) {
    const MorphismId id = b.add_morphism(std::move(name), u, v);
    ext.underlying.push_back(r);
    ends.emplace_back(u, v);
    ext.index.emplace(pack(static_cast<std::uint32_t>(u.index() * n + v.index()), r.value), id);
  };
  for (MorphismId m : g.morphisms()) add(g.source(m), g.target(m), m, g.morphism_name(m));
  for (std::size_t ui = 0; ui < n; ++ui) {
    for (std::size_t vi = 0; vi < n; ++vi) {
      if (ui < n_old && vi < n_old) continue;
      const ObjectId u = id_at<ObjectId>(ui);
      const ObjectId v = id_at<ObjectId>(vi);
      for (MorphismId r : sorted_hom(g, ext.anchor[ui], ext.anchor[vi])) {
        std::string name = "[" + names[ui] + "," + names[vi] + "]" + g.morphism_name(r);
        add(u, v, r, morphism_names.fresh(std::move(name)));
      }
    }
  }
  for (std::size_t ui = 0; ui < n; ++ui) {
    const ObjectId u = id_at<ObjectId>(ui);
    b.set_identity(u, ext.find(u, u, g.identity(ext.anchor[ui])));
  }
  for (std::size_t i = 0; i < ext.underlying.size(); ++i) {
    const auto [u, v] = ends[i];
    b.set_inverse(id_at<MorphismId>(i), ext.find(v, u, g.inverse(ext.underlying[i])));
  }
  GroupoidPtr carrier = std::move(b).build([&](MorphismId second, MorphismId first) {
    const ObjectId u = ends[first.index()].first;
    const ObjectId w = ends[second.index()].second;
    return ext.find(u, w, g.compose(ext.underlying[second.index()], ext.underlying[first.index()]));
  });
  std::vector<MorphismId> morphism_alpha(ext.underlying.size());
  for (std::size_t i = 0; i < ext.underlying.size(); ++i) {
    const auto [u, v] = ends[i];
    const MorphismId r = ext.underlying[i];
    const MorphismId moved =
        g.compose(kappa[v.index()], g.compose(x->alpha(r), g.inverse(kappa[u.index()])));
    morphism_alpha[i] = ext.find(alpha[u.index()], alpha[v.index()], moved);
  }
  ext.object = detail::unchecked_ztwo(carrier, std::move(alpha), std::move(morphism_alpha));
  return ext;
}


// Attaches one generator along `attaching`. The corner map is found by search with the
// generator's domain and the corner arrows pinned.
CellStage make_stage(const ZTwoPtr& x, CellStage::Kind kind, const EquivariantFunctor& attaching,
                     const std::vector<std::string>& new_names) {
  const Groupoid& g = x->g();
  std::vector<NewObject> added;
  std::vector<MorphismId> arrows;
  if (kind == CellStage::Kind::IPrimeCell) {
    const ObjectId ay = attaching(id_at<ObjectId>(1));
    added.push_back({new_names.at(0), ay, 0, attaching(id_at<MorphismId>(1))});
    arrows = {id_at<MorphismId>(5)};  // psi
  } else {
    const ObjectId y = attaching(id_at<ObjectId>(0));
    const ObjectId ay = attaching(id_at<ObjectId>(1));
    added.push_back({new_names.at(0), y, 1, g.identity(ay)});
    added.push_back({new_names.at(1), ay, 0, g.identity(y)});
    arrows = {id_at<MorphismId>(1), id_at<MorphismId>(5)};  // phi in each copy
  }
  Extension ext = extend(x, added);

  CellStage stage;
  stage.kind = kind;
  stage.attaching = attaching;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  for (ObjectId u : g.objects()) objects.push_back(u);
  for (MorphismId m : g.morphisms()) morphisms.push_back(m);
  stage.inclusion = EquivariantFunctor{x, ext.object, Functor{x->carrier, ext.object->carrier, objects, morphisms}};
  stage.anchor = ext.anchor;
  stage.underlying = ext.underlying;
  stage.new_objects = ext.new_ids;
  stage.corner_arrows = arrows;

  const EquivariantFunctor& gen = generator(kind);
  auto c = equivariant_constraints(*gen.target, *ext.object);
  fix_along(c, gen, compose(stage.inclusion, attaching));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const ObjectId u = ext.new_ids[i];
    const ObjectId a = ext.anchor[u.index()];
    c.fixed_morphisms.emplace_back(arrows[i], ext.find(a, u, g.identity(a)));
  }
  SearchBudget budget(SearchLimits::defaults().max_nodes);
  std::optional<EquivariantFunctor> corner;
  detail::search_maps(c, budget, [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
    corner = EquivariantFunctor{gen.target, ext.object, Functor{gen.target->carrier, ext.object->carrier, os, ms}};
    return false;
  });
  if (!corner) throw Error(ErrorCode::Internal, "no corner map for a cell attachment");
  stage.corner = std::move(*corner);
  return stage;
}

std::optional<MorphismId> find_in_hom(const Groupoid& g, ObjectId x, ObjectId y, const Functor& h, MorphismId image) {
  for (MorphismId m : g.hom(x, y))
    if (h(m) == image) return m;
  return std::nullopt;
}

}  // namespace

// The equivariant map check_I -> a at x with phi -> theta.
EquivariantFunctor interval_map(const ZTwoPtr& a, ObjectId x, MorphismId theta) {
  const Groupoid& g = a->g();
  const ObjectId ax = a->alpha(x);
  Functor map{check_I()->carrier, a->carrier, {x, ax}, {g.identity(x), theta, g.inverse(theta), g.identity(ax)}};
  return EquivariantFunctor{check_I(), a, std::move(map)};
}

// The map nabla -> b with 0 -> s, phi -> theta: s -> beta(s), psi -> chi: beta(s) -> z.
EquivariantFunctor nabla_map(const ZTwoPtr& b, MorphismId theta, MorphismId chi) {
  const Groupoid& g = b->g();
  const ObjectId s = g.source(theta);
  const ObjectId t = g.target(theta);
  const ObjectId z = g.target(chi);
  const MorphismId chi_theta = g.compose(chi, theta);
  Functor map{nabla()->carrier, b->carrier, {s, t, z},
              {g.identity(s), theta, g.inverse(theta), g.identity(t), chi_theta, chi, g.inverse(chi_theta),
               g.inverse(chi), g.identity(z)}};
  return EquivariantFunctor{nabla(), b, std::move(map)};
}

EquivariantFunctor point_pair_map(const ZTwoPtr& a, ObjectId y) {
  const Groupoid& g = a->g();
  const ObjectId ay = a->alpha(y);
  Functor map{s_one()->carrier, a->carrier, {y, ay}, {g.identity(y), g.identity(ay)}};
  return EquivariantFunctor{s_one(), a, std::move(map)};
}

// S(I) -> b sending copy 0 of phi to psi.
EquivariantFunctor interval_pair_map(const ZTwoPtr& b, MorphismId psi) {
  const Groupoid& g = b->g();
  const ObjectId s = g.source(psi);
  const ObjectId t = g.target(psi);
  const MorphismId bpsi = b->alpha(psi);
  const ObjectId bs = b->alpha(s);
  const ObjectId bt = b->alpha(t);
  Functor map{s_I()->carrier, b->carrier, {s, t, bs, bt},
              {g.identity(s), psi, g.inverse(psi), g.identity(t), g.identity(bs), bpsi, g.inverse(bpsi),
               g.identity(bt)}};
  return EquivariantFunctor{s_I(), b, std::move(map)};
}

namespace detail {

PathTables mapping_path(const ZTwoGroupoid& A, const ZTwoGroupoid& C, const Functor& f, bool swap,
                        std::uint64_t max_morphisms, const std::function<bool(MorphismId)>& keep) {
  const Groupoid& a = A.g();
  const Groupoid& c = C.g();
  PathTables t;
  t.a_morphisms = a.morphism_count();
  GroupoidBuilder b;
  for (ObjectId x : a.objects()) {
    for (MorphismId gamma : out_morphisms(c, f(x))) {
      if (keep && !keep(gamma)) continue;
      const ObjectId id = b.add_object("(" + a.object_name(x) + "," + c.morphism_name(gamma) + ")");
      t.objects.emplace_back(x, gamma);
      t.object_index.emplace(pack(x.value, gamma.value), id);
    }
  }
  // Objects grouped by the component of their first coordinate.
  std::vector<std::vector<ObjectId>> by_component(a.component_count());
  for (std::size_t i = 0; i < t.objects.size(); ++i)
    by_component[a.component_of(t.objects[i].first)].push_back(id_at<ObjectId>(i));
  std::uint64_t total = 0;
  for (const auto& comp : by_component) {
    if (comp.empty()) continue;
    total += std::uint64_t{comp.size()} * comp.size() * a.automorphism_order(a.component_of(t.objects[comp[0].index()].first));
  }
  if (total > max_morphisms)
    throw Error(ErrorCode::BudgetExceeded, "mapping path object has " + std::to_string(total) + " morphisms");

  detail::NameSet names;
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  for (std::size_t pi = 0; pi < t.objects.size(); ++pi) {
    const auto [x, gamma] = t.objects[pi];
    const ObjectId p = id_at<ObjectId>(pi);
    for (ObjectId q : by_component[a.component_of(x)]) {
      const auto [y, delta] = t.objects[q.index()];
      for (MorphismId r : sorted_hom(a, x, y)) {
        const MorphismId s = c.compose(delta, c.compose(f(r), c.inverse(gamma)));
        const MorphismId id =
            b.add_morphism(names.fresh("(" + a.morphism_name(r) + "," + c.morphism_name(s) + ")"), p, q);
        t.rho.push_back(r);
        t.sigma.push_back(s);
        ends.emplace_back(p, q);
        t.morphism_index.emplace((std::uint64_t{p.value} * t.objects.size() + q.value) * t.a_morphisms + r.value, id);
      }
    }
  }
  for (std::size_t pi = 0; pi < t.objects.size(); ++pi) {
    const ObjectId p = id_at<ObjectId>(pi);
    b.set_identity(p, t.find(p, p, a.identity(t.objects[pi].first)));
  }
  for (std::size_t i = 0; i < t.rho.size(); ++i)
    b.set_inverse(id_at<MorphismId>(i), t.find(ends[i].second, ends[i].first, a.inverse(t.rho[i])));
  GroupoidPtr carrier = std::move(b).build([&](MorphismId second, MorphismId first) {
    return t.find(ends[first.index()].first, ends[second.index()].second,
                  a.compose(t.rho[second.index()], t.rho[first.index()]));
  });

  std::vector<ObjectId> object_alpha(t.objects.size());
  for (std::size_t pi = 0; pi < t.objects.size(); ++pi) {
    const auto [x, gamma] = t.objects[pi];
    if (swap)
      object_alpha[pi] = t.find(C.alpha(c.target(gamma)), c.inverse(C.alpha(gamma)));
    else
      object_alpha[pi] = t.find(A.alpha(x), C.alpha(gamma));
  }
  std::vector<MorphismId> morphism_alpha(t.rho.size());
  for (std::size_t i = 0; i < t.rho.size(); ++i) {
    const ObjectId p = object_alpha[ends[i].first.index()];
    const ObjectId q = object_alpha[ends[i].second.index()];
    morphism_alpha[i] = t.find(p, q, swap ? C.alpha(t.sigma[i]) : A.alpha(t.rho[i]));
  }
  t.object = detail::unchecked_ztwo(carrier, std::move(object_alpha), std::move(morphism_alpha));
  return t;
}

}  // namespace detail

void validate_square(const LiftingProblem& p) {
  if (!same_ztwo(p.left.source, p.top.source) || !same_ztwo(p.left.target, p.bottom.source) ||
      !same_ztwo(p.right.source, p.top.target) || !same_ztwo(p.right.target, p.bottom.target))
    throw Error(ErrorCode::InvalidSquare, "the four maps do not fit into a square");
  const Groupoid& x = p.left.source->g();
  for (ObjectId o : x.objects()) {
    if (p.right(p.top(o)) != p.bottom(p.left(o)))
      throw Error(ErrorCode::InvalidSquare, "square does not commute", {x.object_name(o)});
  }
  for (MorphismId m : x.morphisms()) {
    if (p.right(p.top(m)) != p.bottom(p.left(m)))
      throw Error(ErrorCode::InvalidSquare, "square does not commute", {x.morphism_name(m)});
  }
}

namespace {

void search_fillers(const LiftingProblem& p, const SearchLimits& limits, const detail::MapVisitor& visit) {
  validate_square(p);
  auto c = equivariant_constraints(*p.left.target, *p.right.source);
  fix_along(c, p.left, p.top);
  c.over = &p.right.map;
  c.bottom = &p.bottom.map;
  SearchBudget budget(limits.max_nodes);
  detail::search_maps(c, budget, visit);
}

}  // namespace

std::optional<Filler> solve_lifting(const LiftingProblem& p, const SearchLimits& limits) {
  std::optional<Filler> out;
  search_fillers(p, limits, [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
    const ZTwoPtr& y = p.left.target;
    const ZTwoPtr& a = p.right.source;
    out = Filler{EquivariantFunctor{y, a, Functor{y->carrier, a->carrier, os, ms}}};
    return false;
  });
  return out;
}

std::size_t count_fillers(const LiftingProblem& p, const SearchLimits& limits) {
  std::size_t n = 0;
  search_fillers(p, limits, [&](const std::vector<ObjectId>&, const std::vector<MorphismId>&) {
    ++n;
    return true;
  });
  return n;
}

FibrationReport is_injective_fibration(const EquivariantFunctor& f, const SearchLimits& limits) {
  const ZTwoGroupoid& A = *f.source;
  const ZTwoGroupoid& B = *f.target;
  const Groupoid& a = A.g();
  const Groupoid& b = B.g();
  FibrationReport report;

  const IsofibrationReport iso = is_isofibration(f.map);
  if (!iso.holds) {
    report.isofibration = false;
    const auto [x, psi] = *iso.witness;
    report.failing_square =
        LiftingProblem{s_i(), f, point_pair_map(f.source, x), interval_pair_map(f.target, psi)};
  }

  // For every top (x, theta), the images f(chi) of the arrows chi: alpha(x) -> z~ with z~ fixed and
  // alpha(chi) = chi ∘ theta are exactly the bottoms that admit a filler.
  std::vector<char> achievable(b.morphism_count(), 0);
  std::vector<MorphismId> marked;
  for (ObjectId x : a.objects()) {
    const ObjectId ax = A.alpha(x);
    for (MorphismId theta : sorted_hom(a, x, ax)) {
      if (A.alpha(theta) != a.inverse(theta)) continue;
      for (ObjectId z : a.component_objects(a.component_of(ax))) {
        if (A.alpha(z) != z) continue;
        for (MorphismId chi : a.hom(ax, z)) {
          if (A.alpha(chi) != a.compose(chi, theta)) continue;
          const MorphismId image = f(chi);
          if (!achievable[image.index()]) {
            achievable[image.index()] = 1;
            marked.push_back(image);
          }
        }
      }
      const ObjectId fax = f(ax);
      const MorphismId ftheta = f(theta);
      for (ObjectId z : b.component_objects(b.component_of(fax))) {
        if (B.alpha(z) != z) continue;
        for (MorphismId chi : sorted_hom(b, fax, z)) {
          if (B.alpha(chi) != b.compose(chi, ftheta)) continue;
          if (++report.squares_checked > limits.max_squares)
            throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(limits.max_squares) + " i' squares");
          if (!achievable[chi.index()] && report.i_prime_lifting) {
            report.i_prime_lifting = false;
            if (report.isofibration)
              report.failing_square =
                  LiftingProblem{i_prime(), f, interval_map(f.source, x, theta), nabla_map(f.target, ftheta, chi)};
          }
        }
      }
      for (MorphismId m : marked) achievable[m.index()] = 0;
      marked.clear();
    }
  }
  report.holds = report.isofibration && report.i_prime_lifting;
  return report;
}

bool is_fibrant(const ZTwoPtr& a, const SearchLimits& limits) {
  return is_injective_fibration(to_one(a), limits).holds;
}

bool is_projective_fibration(const EquivariantFunctor& f) { return is_isofibration(f.map).holds; }

bool is_cofibration(const EquivariantFunctor& f) { return is_injective_on_objects(f.map); }

bool is_weak_equivalence(const EquivariantFunctor& f) { return is_equivalence(f.map).holds; }

bool is_acyclic_cofibration(const EquivariantFunctor& f) { return is_cofibration(f) && is_weak_equivalence(f); }

const EquivariantFunctor& generator(CellStage::Kind kind) {
  static const EquivariantFunctor s = s_i();
  static const EquivariantFunctor ip = i_prime();
  return kind == CellStage::Kind::SCell ? s : ip;
}

EquivariantFunctor induced_map(const CellStage& stage, const EquivariantFunctor& previous,
                               const std::vector<MorphismId>& arrows) {
  const ZTwoPtr& source = stage.inclusion.target;
  const ZTwoPtr& target = previous.target;
  const Groupoid& s = source->g();
  const Groupoid& t = target->g();
  const std::size_t n_old = stage.inclusion.source->g().object_count();
  std::vector<ObjectId> objects(s.object_count());
  std::vector<MorphismId> mu(s.object_count());
  for (ObjectId u : s.objects()) {
    if (u.index() < n_old) {
      objects[u.index()] = previous(u);
      mu[u.index()] = t.identity(objects[u.index()]);
    } else {
      mu[u.index()] = arrows.at(u.index() - n_old);
      objects[u.index()] = t.target(mu[u.index()]);
    }
  }
  std::vector<MorphismId> morphisms(s.morphism_count());
  for (MorphismId m : s.morphisms()) {
    const MorphismId r = previous(stage.underlying[m.index()]);
    morphisms[m.index()] =
        t.compose(mu[s.target(m).index()], t.compose(r, t.inverse(mu[s.source(m).index()])));
  }
  return EquivariantFunctor{source, target, Functor{source->carrier, target->carrier, objects, morphisms}};
}

EquivariantFunctor induced_map_from_corner(const CellStage& stage, const EquivariantFunctor& previous,
                                           const EquivariantFunctor& from_generator) {
  std::vector<MorphismId> arrows;
  for (MorphismId m : stage.corner_arrows) arrows.push_back(from_generator(m));
  return induced_map(stage, previous, arrows);
}

CellDecomposition cell_decompose(const EquivariantFunctor& f) {
  if (!is_acyclic_cofibration(f))
    throw Error(ErrorCode::NotAcyclicCofibration, "map is not an acyclic cofibration");
  const ZTwoGroupoid& B = *f.target;
  const Groupoid& b = B.g();
  CellDecomposition d;
  d.stages.push_back(f.source);
  d.to_codomain.push_back(f);
  d.composite = identity_map(f.source);

  std::vector<std::optional<ObjectId>> preimage(b.object_count());
  for (ObjectId x : f.source->g().objects()) preimage[f(x).index()] = x;

  for (ObjectId x : b.objects()) {
    if (preimage[x.index()]) continue;
    const ZTwoPtr& stage = d.stages.back();
    const EquivariantFunctor& h = d.to_codomain.back();
    const Groupoid& g = stage->g();

    // Least arrow into x from the image so far.
    std::optional<MorphismId> chosen;
    for (ObjectId w : b.component_objects(b.component_of(x))) {
      if (!preimage[w.index()]) continue;
      for (MorphismId m : b.hom(w, x))
        if (!chosen || m < *chosen) chosen = m;
    }
    if (!chosen) throw Error(ErrorCode::Internal, "no arrow into a new object from the image");
    const MorphismId vartheta = *chosen;
    const ObjectId y = *preimage[b.source(vartheta).index()];
    const ObjectId bx = B.alpha(x);

    CellStage cell;
    std::vector<MorphismId> lambda;
    if (bx == x) {
      const MorphismId theta_b = b.compose(b.inverse(B.alpha(vartheta)), vartheta);
      const auto theta = find_in_hom(g, y, stage->alpha(y), h.map, theta_b);
      if (!theta) throw Error(ErrorCode::Internal, "comparison map is not full");
      cell = make_stage(stage, CellStage::Kind::IPrimeCell, interval_map(stage, y, *theta), {b.object_name(x)});
      cell.orbit = {x};
      lambda = {B.alpha(vartheta)};
    } else {
      cell = make_stage(stage, CellStage::Kind::SCell, point_pair_map(stage, y), {b.object_name(x), b.object_name(bx)});
      cell.orbit = {x, bx};
      lambda = {vartheta, B.alpha(vartheta)};
    }
    cell.chosen_iso = vartheta;
    EquivariantFunctor next = induced_map(cell, h, lambda);
    for (std::size_t i = 0; i < cell.new_objects.size(); ++i) preimage[cell.orbit[i].index()] = cell.new_objects[i];
    d.composite = compose(cell.inclusion, d.composite);
    d.stages.push_back(cell.inclusion.target);
    d.to_codomain.push_back(std::move(next));
    d.cells.push_back(std::move(cell));
  }
  d.matching = d.to_codomain.back();
  return d;
}

DecompositionCheck verify_decomposition(const EquivariantFunctor& f, const CellDecomposition& d,
                                        const std::vector<ZTwoPtr>& test_objects, const SearchLimits& limits) {
  DecompositionCheck check;
  check.composite_matches = compose(d.matching, d.composite) == f;
  check.matching_is_iso = is_isomorphism(d.matching.map) && !check_equivariant(d.matching);
  check.squares_commute = true;
  check.stages_acyclic = true;
  check.pushouts_universal = true;
  for (const CellStage& cell : d.cells) {
    if (!(compose(cell.inclusion, cell.attaching) == compose(cell.corner, generator(cell.kind))))
      check.squares_commute = false;
    if (check_equivariant(cell.inclusion) || check_equivariant(cell.corner) || !is_acyclic_cofibration(cell.inclusion))
      check.stages_acyclic = false;
  }
  for (const CellStage& cell : d.cells) {
    const EquivariantFunctor& gen = generator(cell.kind);
    const ZTwoPtr& previous = cell.inclusion.source;
    const ZTwoPtr& next = cell.inclusion.target;
    for (const ZTwoPtr& t : test_objects) {
      // Restrictions of maps out of the pushout must be distinct and exhaust the compatible pairs.
      std::set<std::pair<std::vector<MorphismId>, std::vector<MorphismId>>> seen;
      std::size_t maps = 0;
      for (const auto& h : enumerate_equivariant_maps(next, t, limits)) {
        ++maps;
        seen.emplace(compose(h, cell.inclusion).map.morphisms, compose(h, cell.corner).map.morphisms);
      }
      std::size_t pairs = 0;
      for (const auto& u : enumerate_equivariant_maps(previous, t, limits)) {
        auto c = equivariant_constraints(*gen.target, *t);
        fix_along(c, gen, compose(u, cell.attaching));
        SearchBudget budget(limits.max_nodes);
        detail::search_maps(c, budget, [&](const std::vector<ObjectId>&, const std::vector<MorphismId>&) {
          ++pairs;
          return true;
        });
      }
      if (seen.size() != maps || maps != pairs) check.pushouts_universal = false;
    }
  }
  return check;
}

std::optional<Filler> lift_through_cells(const CellDecomposition& d, const LiftingProblem& p,
                                         const SearchLimits& limits) {
  validate_square(p);
  EquivariantFunctor lift = p.top;
  for (std::size_t k = 0; k < d.cells.size(); ++k) {
    const CellStage& cell = d.cells[k];
    LiftingProblem step{generator(cell.kind), p.right, compose(lift, cell.attaching),
                        compose(p.bottom, compose(d.to_codomain[k + 1], cell.corner))};
    auto filler = solve_lifting(step, limits);
    if (!filler) return std::nullopt;
    lift = induced_map_from_corner(cell, lift, filler->diagonal);
  }
  return Filler{compose(lift, inverse_map(d.matching))};
}

std::vector<EquivariantFunctor> acyclic_cofibration_corpus(std::size_t max_objects) {
  std::vector<ZTwoPtr> bases = {
      trivial_ztwo(empty_groupoid()),
      one(),
      s_one(),
      check_I(),
      coproduct(one(), one()),
      trivial_ztwo(cyclic_group_groupoid(2)),
      make_ztwo(cyclic_group_groupoid(3), {id_at<ObjectId>(0)},
                {id_at<MorphismId>(0), id_at<MorphismId>(2), id_at<MorphismId>(1)}),
      nabla(),
      s_I(),
  };
  std::vector<EquivariantFunctor> out = {i_prime(), s_i()};
  std::function<void(const EquivariantFunctor&)> grow = [&](const EquivariantFunctor& j) {
    out.push_back(j);
    const ZTwoPtr& x = j.target;
    const std::size_t n = x->g().object_count();
    if (n + 2 <= max_objects) {
      for (ObjectId y : x->g().objects()) {
        CellStage cell = make_stage(x, CellStage::Kind::SCell, point_pair_map(x, y), {"n", "n"});
        grow(compose(cell.inclusion, j));
      }
    }
    if (n + 1 <= max_objects) {
      for (const auto& a : enumerate_equivariant_maps(check_I(), x)) {
        CellStage cell = make_stage(x, CellStage::Kind::IPrimeCell, a, {"z"});
        grow(compose(cell.inclusion, j));
      }
    }
  };
  for (const ZTwoPtr& base : bases) {
    if (base->g().object_count() <= max_objects) grow(identity_map(base));
  }

  // Relabeled copies: reversed object and morphism numbering of the codomain.
  const std::size_t generated = out.size();
  for (std::size_t i = 0; i < generated; ++i) {
    const ZTwoPtr& y = out[i].target;
    if (y->g().object_count() < 2) continue;
    std::vector<std::size_t> objects(y->g().object_count()), morphisms(y->g().morphism_count());
    for (std::size_t k = 0; k < objects.size(); ++k) objects[k] = objects.size() - 1 - k;
    for (std::size_t k = 0; k < morphisms.size(); ++k) morphisms[k] = morphisms.size() - 1 - k;
    Relabeled r = relabel(y, objects, morphisms);
    out.push_back(compose(r.to_copy, out[i]));
  }
  return out;
}

void for_each_square(const EquivariantFunctor& left, const EquivariantFunctor& right,
                     const std::function<bool(const LiftingProblem&)>& visit, const SearchLimits& limits) {
  const ZTwoPtr& x = left.source;
  const ZTwoPtr& y = left.target;
  const ZTwoPtr& a = right.source;
  const ZTwoPtr& b = right.target;
  SearchBudget budget(limits.max_nodes);
  std::uint64_t squares = 0;
  bool stop = false;
  auto tops = equivariant_constraints(*x, *a);
  detail::search_maps(tops, budget, [&](const std::vector<ObjectId>& tos, const std::vector<MorphismId>& tms) {
    EquivariantFunctor top{x, a, Functor{x->carrier, a->carrier, tos, tms}};
    const EquivariantFunctor rt = compose(right, top);
    auto bottoms = equivariant_constraints(*y, *b);
    fix_along(bottoms, left, rt);
    detail::search_maps(bottoms, budget, [&](const std::vector<ObjectId>& bos, const std::vector<MorphismId>& bms) {
      if (++squares > limits.max_squares)
        throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(limits.max_squares) + " squares");
      EquivariantFunctor bottom{y, b, Functor{y->carrier, b->carrier, bos, bms}};
      if (!visit(LiftingProblem{left, right, top, std::move(bottom)})) stop = true;
      return !stop;
    });
    return !stop;
  });
}

CharacterizationReport verify_generator_characterization(const EquivariantFunctor& f,
                                                         const std::vector<EquivariantFunctor>& corpus,
                                                         const SearchLimits& limits) {
  CharacterizationReport report;
  report.generator_test = is_injective_fibration(f, limits).holds;
  report.corpus_size = corpus.size();
  for (const EquivariantFunctor& j : corpus) {
    const CellDecomposition d = cell_decompose(j);
    for_each_square(
        j, f,
        [&](const LiftingProblem& p) {
          ++report.squares;
          const auto direct = solve_lifting(p, limits);
          const auto staged = lift_through_cells(d, p, limits);
          if (staged) {
            const auto& l = staged->diagonal;
            if (!(compose(l, j) == p.top) || !(compose(f, l) == p.bottom) || check_equivariant(l) || !direct)
              report.staged_consistent = false;
          } else {
            report.staged_lifts = false;
          }
          if (!direct) {
            report.direct_test = false;
            report.counterexample = p;
            return false;
          }
          return true;
        },
        limits);
    if (!report.direct_test) break;
  }
  return report;
}

Factorization factorize(const EquivariantFunctor& f, const SearchLimits& limits) {
  if (!is_fibrant(f.source, limits))
    throw Error(ErrorCode::DomainNotFibrant, "the domain of the map is not fibrant");
  const ZTwoGroupoid& A = *f.source;
  const ZTwoGroupoid& C = *f.target;
  detail::PathTables t = detail::mapping_path(A, C, f.map, false, limits.max_morphisms);
  const Groupoid& a = A.g();
  const Groupoid& c = C.g();
  std::vector<ObjectId> j_objects, q_objects;
  std::vector<MorphismId> j_morphisms;
  for (ObjectId x : a.objects()) j_objects.push_back(t.find(x, c.identity(f(x))));
  for (MorphismId m : a.morphisms())
    j_morphisms.push_back(t.find(j_objects[a.source(m).index()], j_objects[a.target(m).index()], m));
  for (const auto& [x, gamma] : t.objects) q_objects.push_back(c.target(gamma));
  Factorization out;
  out.middle = t.object;
  out.j = EquivariantFunctor{f.source, t.object, Functor{f.source->carrier, t.object->carrier, j_objects, j_morphisms}};
  out.q = EquivariantFunctor{t.object, f.target, Functor{t.object->carrier, f.target->carrier, q_objects, t.sigma}};
  return out;
}

FibrantReplacement fibrant_replacement(const ZTwoPtr& x) {
  const Groupoid& g = x->g();
  detail::PathTables t = detail::mapping_path(*x, *x, identity_functor(x->carrier), true, SearchLimits::defaults().max_morphisms);
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  for (ObjectId o : g.objects()) objects.push_back(t.find(o, g.identity(o)));
  for (MorphismId m : g.morphisms())
    morphisms.push_back(t.find(objects[g.source(m).index()], objects[g.target(m).index()], m));
  return FibrantReplacement{t.object, EquivariantFunctor{x, t.object, Functor{x->carrier, t.object->carrier, objects, morphisms}}};
}

}  // namespace zgpd
