#include "zgpd/universe.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "internal.hpp"

namespace zgpd {

using detail::pack;
using detail::sorted_hom;

std::vector<int> elements(LabelSet s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i)
    if ((s >> i) & 1U) out.push_back(i);
  return out;
}

std::string set_name(LabelSet s) {
  std::string out = "{";
  bool first = true;
  for (int a : elements(s)) {
    out += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return out + "}";
}

Bijection inverse(const Bijection& f) {
  Bijection out{f.codomain, f.domain, std::vector<int>(f.image.size(), -1)};
  for (int a : elements(f.domain)) out.image[static_cast<std::size_t>(f(a))] = a;
  return out;
}

Bijection compose(const Bijection& g, const Bijection& f) {
  Bijection out{f.domain, g.codomain, std::vector<int>(f.image.size(), -1)};
  for (int a : elements(f.domain)) out.image[static_cast<std::size_t>(a)] = g(f(a));
  return out;
}

namespace {

constexpr std::size_t kMaxPool = 8;

// Images of the domain's elements in base pool + 1; unique per domain.
std::uint64_t image_code(const Bijection& f) {
  std::uint64_t code = 0;
  for (int a : elements(f.domain)) code = code * (kMaxPool + 1) + static_cast<std::uint64_t>(f(a));
  return code;
}

std::uint64_t bijection_key(const Bijection& f) {
  return (std::uint64_t{f.domain} << 48) | (std::uint64_t{f.codomain} << 32) | image_code(f);
}

std::string bijection_name(const Bijection& f) {
  std::string out = set_name(f.domain) + "->[";
  bool first = true;
  for (int a : elements(f.domain)) {
    out += (first ? "" : ",") + std::to_string(f(a));
    first = false;
  }
  return out + "]";
}

// All bijections from `domain` onto `codomain`, lexicographic in the images.
std::vector<Bijection> bijections(LabelSet domain, LabelSet codomain, std::size_t pool) {
  std::vector<Bijection> out;
  const auto from = elements(domain);
  auto to = elements(codomain);
  if (from.size() != to.size()) return out;
  do {
    Bijection f{domain, codomain, std::vector<int>(pool, -1)};
    for (std::size_t i = 0; i < from.size(); ++i) f.image[static_cast<std::size_t>(from[i])] = to[i];
    out.push_back(std::move(f));
  } while (std::next_permutation(to.begin(), to.end()));
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

std::optional<ObjectId> UniverseBundle::find_type(const Bijection& phi) const {
  auto it = type_index.find(bijection_key(phi));
  if (it == type_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> UniverseBundle::find_morphism(ObjectId source, ObjectId target, const Bijection& r) const {
  if (r.domain != types[source.index()].a || r.codomain != types[target.index()].a) return std::nullopt;
  const auto& index = morphism_index[source.index()];
  auto it = index.find(pack(target.value, static_cast<std::uint32_t>(image_code(r))));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<ObjectId> UniverseBundle::find_point(ObjectId u, int a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= pool) return std::nullopt;
  const ObjectId id = point_index[u.index()][static_cast<std::size_t>(a)];
  if (id.value == UINT32_MAX) return std::nullopt;
  return id;
}

std::optional<MorphismId> UniverseBundle::lift(MorphismId m, int a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= pool) return std::nullopt;
  const MorphismId id = lift_index[m.index()][static_cast<std::size_t>(a)];
  if (id.value == UINT32_MAX) return std::nullopt;
  return id;
}

UniverseBundle build_universe(std::size_t pool, const SearchLimits& limits) {
  if (pool > kMaxPool) throw Error(ErrorCode::BudgetExceeded, "label pool larger than " + std::to_string(kMaxPool));
  std::uint64_t morphism_total = 0;
  for (std::uint64_t k = 0; k <= pool; ++k) {
    const std::uint64_t objects = binomial(pool, k) * binomial(pool, k) * factorial(k);
    morphism_total += objects * objects * factorial(k);
  }
  if (morphism_total > limits.max_morphisms)
    throw Error(ErrorCode::BudgetExceeded, "universe would have " + std::to_string(morphism_total) + " morphisms");

  UniverseBundle b;
  b.pool = pool;
  const LabelSet masks = LabelSet{1} << pool;

  // U.
  GroupoidBuilder ub;
  std::vector<std::string> type_names;
  for (LabelSet a = 0; a < masks; ++a) {
    for (LabelSet c = 0; c < masks; ++c) {
      for (Bijection& phi : bijections(a, c, pool)) {
        const ObjectId id = ub.add_object(bijection_name(phi));
        type_names.push_back(bijection_name(phi));
        b.type_index.emplace(bijection_key(phi), id);
        b.types.push_back({a, c, std::move(phi)});
      }
    }
  }
  const std::size_t n = b.types.size();
  std::vector<std::vector<ObjectId>> by_size(pool + 1);
  for (std::size_t i = 0; i < n; ++i)
    by_size[static_cast<std::size_t>(std::popcount(b.types[i].a))].push_back(id_at<ObjectId>(i));
  b.morphism_index.resize(n);
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = b.types[i];
    for (ObjectId t : by_size[static_cast<std::size_t>(std::popcount(s.a))]) {
      const auto& tt = b.types[t.index()];
      for (Bijection& r : bijections(s.a, tt.a, pool)) {
        Bijection tau = compose(tt.phi, compose(r, inverse(s.phi)));
        const MorphismId id =
            ub.add_morphism(type_names[i] + ":(" + bijection_name(r) + "," + bijection_name(tau) + ")", id_at<ObjectId>(i), t);
        b.morphism_index[i].emplace(pack(t.value, static_cast<std::uint32_t>(image_code(r))), id);
        b.rho.push_back(std::move(r));
        b.tau.push_back(std::move(tau));
        ends.emplace_back(id_at<ObjectId>(i), t);
      }
    }
  }
  auto find = [&](ObjectId s, ObjectId t, const Bijection& r) { return *b.find_morphism(s, t, r); };
  for (std::size_t i = 0; i < n; ++i) {
    const ObjectId x = id_at<ObjectId>(i);
    Bijection id{b.types[i].a, b.types[i].a, std::vector<int>(pool, -1)};
    for (int a : elements(b.types[i].a)) id.image[static_cast<std::size_t>(a)] = a;
    ub.set_identity(x, find(x, x, id));
  }
  for (std::size_t k = 0; k < b.rho.size(); ++k)
    ub.set_inverse(id_at<MorphismId>(k), find(ends[k].second, ends[k].first, inverse(b.rho[k])));
  GroupoidPtr u = std::move(ub).build([&](MorphismId second, MorphismId first) {
    return find(ends[first.index()].first, ends[second.index()].second,
                compose(b.rho[second.index()], b.rho[first.index()]));
  });
  std::vector<ObjectId> upsilon(n);
  for (std::size_t i = 0; i < n; ++i) upsilon[i] = *b.find_type(inverse(b.types[i].phi));
  std::vector<MorphismId> upsilon_m(b.rho.size());
  for (std::size_t k = 0; k < b.rho.size(); ++k)
    upsilon_m[k] = find(upsilon[ends[k].first.index()], upsilon[ends[k].second.index()], b.tau[k]);
  b.U = detail::unchecked_ztwo(u, upsilon, upsilon_m);

  // Ũ: the same with a point of A.
  GroupoidBuilder pb;
  b.point_index.assign(n, std::vector<ObjectId>(pool, ObjectId(UINT32_MAX)));
  for (std::size_t i = 0; i < n; ++i) {
    for (int a : elements(b.types[i].a)) {
      const ObjectId id = pb.add_object(type_names[i] + "@" + std::to_string(a));
      b.point_index[i][static_cast<std::size_t>(a)] = id;
      b.points.emplace_back(id_at<ObjectId>(i), a);
    }
  }
  b.lift_index.assign(b.rho.size(), std::vector<MorphismId>(pool, MorphismId(UINT32_MAX)));
  std::vector<MorphismId> under;  // per morphism of Ũ, the morphism of U
  std::vector<std::pair<ObjectId, ObjectId>> pends;
  for (std::size_t pi = 0; pi < b.points.size(); ++pi) {
    const auto [u_src, a] = b.points[pi];
    for (std::size_t pj = 0; pj < b.points.size(); ++pj) {
      const auto [u_tgt, c] = b.points[pj];
      if (!b.U->g().connected(u_src, u_tgt)) continue;
      for (MorphismId m : sorted_hom(b.U->g(), u_src, u_tgt)) {
        if (b.rho[m.index()](a) != c) continue;
        const MorphismId id = pb.add_morphism(
            type_names[u_src.index()] + "@" + std::to_string(a) + ":(" + bijection_name(b.rho[m.index()]) + "," +
                bijection_name(b.tau[m.index()]) + ")",
            id_at<ObjectId>(pi), id_at<ObjectId>(pj));
        b.lift_index[m.index()][static_cast<std::size_t>(a)] = id;
        under.push_back(m);
        pends.emplace_back(id_at<ObjectId>(pi), id_at<ObjectId>(pj));
      }
    }
  }
  const Groupoid& ug = b.U->g();
  auto point_of = [&](ObjectId x) { return b.points[x.index()].second; };
  for (std::size_t pi = 0; pi < b.points.size(); ++pi) {
    const auto [uu, a] = b.points[pi];
    pb.set_identity(id_at<ObjectId>(pi), *b.lift(ug.identity(uu), a));
  }
  for (std::size_t k = 0; k < under.size(); ++k)
    pb.set_inverse(id_at<MorphismId>(k), *b.lift(ug.inverse(under[k]), point_of(pends[k].second)));
  GroupoidPtr ut = std::move(pb).build([&](MorphismId second, MorphismId first) {
    return *b.lift(ug.compose(under[second.index()], under[first.index()]), point_of(pends[first.index()].first));
  });
  std::vector<ObjectId> tilde_upsilon(b.points.size());
  for (std::size_t pi = 0; pi < b.points.size(); ++pi) {
    const auto [uu, a] = b.points[pi];
    tilde_upsilon[pi] = *b.find_point(upsilon[uu.index()], b.types[uu.index()].phi(a));
  }
  std::vector<MorphismId> tilde_upsilon_m(under.size());
  for (std::size_t k = 0; k < under.size(); ++k)
    tilde_upsilon_m[k] = *b.lift(upsilon_m[under[k].index()], point_of(tilde_upsilon[pends[k].first.index()]));
  b.Utilde = detail::unchecked_ztwo(ut, tilde_upsilon, tilde_upsilon_m);

  std::vector<ObjectId> p_objects;
  for (const auto& [uu, a] : b.points) p_objects.push_back(uu);
  b.p = EquivariantFunctor{b.Utilde, b.U, Functor{ut, u, p_objects, under}};
  return b;
}

EquivariantFunctor universe_filler(const UniverseBundle& b, const EquivariantFunctor& top) {
  const MorphismId theta = top(id_at<MorphismId>(1));
  const ObjectId x = top(id_at<ObjectId>(0));
  const ObjectId ax = top(id_at<ObjectId>(1));
  const Bijection& phi = b.types[x.index()].phi;
  const Bijection tau_phi = compose(b.tau[theta.index()], phi);
  const ObjectId z = *b.find_type(tau_phi);
  const MorphismId chi = *b.find_morphism(ax, z, inverse(phi));
  return nabla_map(b.U, theta, chi);
}

EquivariantFunctor projection_filler(const UniverseBundle& b, const EquivariantFunctor& top,
                                     const EquivariantFunctor& bottom) {
  const MorphismId theta = top(id_at<MorphismId>(1));
  const int a = b.points[top(id_at<ObjectId>(0)).index()].second;
  const int start = b.points[top(id_at<ObjectId>(1)).index()].second;
  const MorphismId psi = bottom(id_at<MorphismId>(5));
  const ObjectId z = b.U->g().target(psi);
  const auto corner = b.find_point(z, b.tau[psi.index()](a));  // (C, C, eta, chi(a))
  const auto lifted = b.lift(psi, start);                       // (sigma, chi)
  if (!corner || !lifted || b.Utilde->g().target(*lifted) != *corner)
    throw Error(ErrorCode::Internal, "explicit filler for p does not land at (C, C, eta, chi(a))");
  return nabla_map(b.Utilde, theta, *lifted);
}

UniverseMapsReport check_universe_maps(const UniverseBundle& b, const SearchLimits& limits) {
  UniverseMapsReport r;
  r.p_fibration = is_injective_fibration(b.p, limits).holds;
  r.u_fibrant = is_fibrant(b.U, limits);
  r.utilde_fibrant = is_fibrant(b.Utilde, limits);

  const ZTwoGroupoid& U = *b.U;
  const ZTwoGroupoid& T = *b.Utilde;
  const EquivariantFunctor ip = i_prime();
  for (ObjectId x : U.g().objects()) {
    for (MorphismId theta : U.g().hom(x, U.alpha(x))) {
      if (U.alpha(theta) != U.g().inverse(theta)) continue;
      const EquivariantFunctor top = interval_map(b.U, x, theta);
      const EquivariantFunctor j = universe_filler(b, top);
      ++r.u_fillers_checked;
      if (check_equivariant(j) || !(compose(j, ip) == top)) r.explicit_fillers = false;
    }
  }
  for (ObjectId x : T.g().objects()) {
    for (MorphismId theta : T.g().hom(x, T.alpha(x))) {
      if (T.alpha(theta) != T.g().inverse(theta)) continue;
      const EquivariantFunctor top = interval_map(b.Utilde, x, theta);
      const ObjectId start = b.p(T.alpha(x));
      const MorphismId ptheta = b.p(theta);
      for (ObjectId z : U.g().component_objects(U.g().component_of(start))) {
        if (U.alpha(z) != z) continue;
        for (MorphismId chi : U.g().hom(start, z)) {
          if (U.alpha(chi) != U.g().compose(chi, ptheta)) continue;
          const EquivariantFunctor bottom = nabla_map(b.U, ptheta, chi);
          const EquivariantFunctor j = projection_filler(b, top, bottom);
          ++r.p_fillers_checked;
          if (check_equivariant(j) || !(compose(j, ip) == top) || !(compose(b.p, j) == bottom))
            r.explicit_fillers = false;
        }
      }
    }
  }
  return r;
}

CoveringReport is_covering(const EquivariantFunctor& q) {
  const Groupoid& e = q.source->g();
  const Groupoid& x = q.target->g();
  CoveringReport r;
  r.fiber_sizes.assign(x.object_count(), 0);
  for (ObjectId o : e.objects()) ++r.fiber_sizes[q(o).index()];
  std::vector<std::uint32_t> count(x.morphism_count(), 0);
  for (ObjectId o : e.objects()) {
    for (MorphismId m : detail::out_morphisms(e, o)) ++count[q(m).index()];
    for (MorphismId gamma : detail::out_morphisms(x, q(o))) {
      if (count[gamma.index()] != 1 && r.holds) {
        r.holds = false;
        r.failure = "unique-lifting";
        r.witness = {o, gamma};
      }
      count[gamma.index()] = 0;
    }
  }
  return r;
}

std::vector<EquivariantFunctor> covering_corpus() {
  std::vector<EquivariantFunctor> out{to_one(one()), to_one(s_one()), to_one(coproduct(one(), one()))};
  const ZTwoPtr bz2 = trivial_ztwo(cyclic_group_groupoid(2));
  for (const EquivariantFunctor& f : enumerate_equivariant_maps(check_I(), bz2)) {
    if (is_covering(f).holds) {
      out.push_back(f);
      break;
    }
  }
  out.push_back(product(s_one(), s_one()).first);
  return out;
}

SmallFibrationWitness classify(const EquivariantFunctor& q, const UniverseBundle& b) {
  const CoveringReport cov = is_covering(q);
  const Groupoid& e = q.source->g();
  const Groupoid& x = q.target->g();
  if (!cov.holds) {
    const auto [o, gamma] = *cov.witness;
    throw Error(ErrorCode::NotACovering, "morphism does not lift uniquely", {e.object_name(o), x.morphism_name(gamma)});
  }
  const std::size_t largest = cov.fiber_sizes.empty() ? 0 : *std::max_element(cov.fiber_sizes.begin(), cov.fiber_sizes.end());
  if (largest > b.pool) throw PoolExhausted(largest, b.pool);

  std::vector<int> rank(e.object_count());
  {
    std::vector<int> next(x.object_count(), 0);
    for (ObjectId o : e.objects()) rank[o.index()] = next[q(o).index()]++;
  }
  std::unordered_map<std::uint64_t, MorphismId> lift;
  for (ObjectId o : e.objects())
    for (MorphismId m : detail::out_morphisms(e, o)) lift.emplace(pack(o.value, q(m).value), m);
  std::vector<std::vector<ObjectId>> fiber(x.object_count());
  for (ObjectId o : e.objects()) fiber[q(o).index()].push_back(o);

  const ZTwoGroupoid& E = *q.source;
  const ZTwoGroupoid& X = *q.target;
  auto labels = [&](std::size_t k) { return k == 0 ? LabelSet{0} : (LabelSet{1} << k) - 1; };
  std::vector<ObjectId> chi_objects(x.object_count());
  for (ObjectId o : x.objects()) {
    const std::size_t k = fiber[o.index()].size();
    Bijection phi{labels(k), labels(k), std::vector<int>(b.pool, -1)};
    for (ObjectId point : fiber[o.index()]) phi.image[static_cast<std::size_t>(rank[point.index()])] = rank[E.alpha(point).index()];
    chi_objects[o.index()] = *b.find_type(phi);
  }
  std::vector<MorphismId> chi_morphisms(x.morphism_count());
  for (MorphismId gamma : x.morphisms()) {
    const ObjectId s = x.source(gamma);
    const std::size_t k = fiber[s.index()].size();
    Bijection r{labels(k), labels(k), std::vector<int>(b.pool, -1)};
    for (ObjectId point : fiber[s.index()])
      r.image[static_cast<std::size_t>(rank[point.index()])] = rank[e.target(lift.at(pack(point.value, gamma.value))).index()];
    const auto m = b.find_morphism(chi_objects[s.index()], chi_objects[x.target(gamma).index()], r);
    if (!m) throw Error(ErrorCode::Internal, "transport is not a morphism of U");
    chi_morphisms[gamma.index()] = *m;
    (void)X;
  }
  SmallFibrationWitness w;
  w.chi = EquivariantFunctor{q.target, b.U, Functor{q.target->carrier, b.U->carrier, chi_objects, chi_morphisms}};
  w.pullback = pullback(w.chi, b.p);
  std::vector<ObjectId> cmp_objects;
  std::vector<MorphismId> cmp_morphisms;
  for (ObjectId o : e.objects()) {
    const ObjectId base = q(o);
    cmp_objects.push_back(*w.pullback.tables.find_pair(base, *b.find_point(chi_objects[base.index()], rank[o.index()])));
  }
  for (MorphismId m : e.morphisms()) {
    const MorphismId gamma = q(m);
    cmp_morphisms.push_back(
        *w.pullback.tables.find_pair(gamma, *b.lift(chi_morphisms[gamma.index()], rank[e.source(m).index()])));
  }
  const ZTwoPtr& pb = w.pullback.object;
  w.comparison = EquivariantFunctor{q.source, pb, Functor{q.source->carrier, pb->carrier, cmp_objects, cmp_morphisms}};
  return w;
}

OverBaseFactorization factor_over_base(const EquivariantFunctor& f, const EquivariantFunctor& qb,
                                       const SearchLimits& limits) {
  const PathObject path = path_object(qb, limits);
  const EquivariantFunctor d0 = compose(path.product.first, path.delta2);
  const EquivariantFunctor d1 = compose(path.product.second, path.delta2);
  const EquivariantPullback n = pullback(f, d0);  // objects (a, (x, y, phi)) with f(a) = x
  const Groupoid& a = f.source->g();
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  for (ObjectId o : a.objects()) objects.push_back(*n.tables.find_pair(o, path.delta1(f(o))));
  for (MorphismId m : a.morphisms()) morphisms.push_back(*n.tables.find_pair(m, path.delta1(f(m))));
  OverBaseFactorization out;
  out.middle = n.object;
  out.first = EquivariantFunctor{f.source, n.object, Functor{f.source->carrier, n.object->carrier, objects, morphisms}};
  out.second = compose(d1, n.second);
  return out;
}

bool UniverseAxiomReport::passed() const {
  for (const auto& i : instances)
    if (!i.consistent) return false;
  return true;
}

namespace {

// Classifies q and checks the witness; side_ok carries the clause's own conditions.
UniverseAxiomReport::Instance classify_instance(const UniverseBundle& b, const EquivariantFunctor& q,
                                                std::string clause, std::string description, bool side_ok) {
  UniverseAxiomReport::Instance in;
  in.clause = std::move(clause);
  in.description = std::move(description);
  const CoveringReport cov = is_covering(q);
  for (std::size_t s : cov.fiber_sizes) in.max_fiber = std::max(in.max_fiber, s);
  if (!cov.holds) return in;
  bool witness_ok = true;
  try {
    const SmallFibrationWitness w = classify(q, b);
    in.classified = true;
    witness_ok = !check_equivariant(w.chi) && is_isomorphism(w.comparison.map) &&
                 compose(w.pullback.first, w.comparison) == q;
  } catch (const PoolExhausted&) {
    in.exhausted = true;
  }
  in.consistent = cov.holds && side_ok && witness_ok && (in.exhausted == (in.max_fiber > b.pool)) &&
                  (in.classified != in.exhausted);
  return in;
}

}  // namespace

UniverseAxiomReport universe_axiom_check(const UniverseBundle& b, const std::vector<EquivariantFunctor>& corpus,
                                         std::size_t maps_per_pair, const SearchLimits& limits) {
  UniverseAxiomReport r;
  auto name = [](std::size_t i) { return "corpus/" + std::to_string(i); };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    r.instances.push_back(classify_instance(b, corpus[i], "member", name(i), true));
    r.instances.push_back(classify_instance(b, identity_map(corpus[i].target), "identity", name(i) + " base", true));
    r.instances.push_back(classify_instance(b, identity_map(corpus[i].source), "identity", name(i) + " total", true));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const auto& f = corpus[i];
      const auto& g = corpus[j];
      if (!same_ztwo(f.target, g.source)) continue;
      const std::string what = name(j) + " after " + name(i);
      r.instances.push_back(classify_instance(b, compose(g, f), "composite", what, true));
      const DependentProduct pi = pi_along(g, f, limits);
      r.instances.push_back(classify_instance(b, pi.projection, "pi", "pi of " + name(i) + " along " + name(j), true));
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const auto& qa = corpus[i];
      const auto& qb = corpus[j];
      if (!same_ztwo(qa.target, qb.target)) continue;
      auto c = detail::equivariant_constraints(*qa.source, *qb.source);
      c.over = &qb.map;
      c.bottom = &qa.map;
      std::vector<EquivariantFunctor> maps;
      SearchBudget budget(limits.max_nodes);
      detail::search_maps(c, budget, [&](const std::vector<ObjectId>& os, const std::vector<MorphismId>& ms) {
        maps.push_back(EquivariantFunctor{qa.source, qb.source, Functor{qa.source->carrier, qb.source->carrier, os, ms}});
        return maps.size() < maps_per_pair;
      });
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const OverBaseFactorization fac = factor_over_base(maps[k], qb, limits);
        const bool side = is_acyclic_cofibration(fac.first) && compose(fac.second, fac.first) == maps[k];
        // Fibers of the second leg are the fibers of the map.
        bool fibers_ok = true;
        const CoveringReport cov = is_covering(fac.second);
        std::vector<std::size_t> expected(qb.source->g().object_count(), 0);
        for (ObjectId o : qa.source->g().objects()) ++expected[maps[k](o).index()];
        if (cov.fiber_sizes != expected) fibers_ok = false;
        r.instances.push_back(classify_instance(b, fac.second, "factorization",
                                                "map " + std::to_string(k) + " from " + name(i) + " to " + name(j),
                                                side && fibers_ok));
      }
    }
  }
  return r;
}

EquivalenceType equivalence_type(const UniverseBundle& b, const SearchLimits& limits) {
  EquivalenceType out;
  const ZTwoGroupoid& U = *b.U;
  const Groupoid& u = U.g();
  detail::PathTables t = detail::mapping_path(U, U, identity_functor(b.U->carrier), false, limits.max_morphisms);
  out.object = t.object;
  out.path = path_object(to_one(b.U), limits);

  std::vector<ObjectId> section_objects;
  std::vector<MorphismId> section_morphisms;
  for (ObjectId x : u.objects()) section_objects.push_back(t.find(x, u.identity(x)));
  for (MorphismId m : u.morphisms())
    section_morphisms.push_back(t.find(section_objects[u.source(m).index()], section_objects[u.target(m).index()], m));
  out.section = EquivariantFunctor{b.U, t.object, Functor{b.U->carrier, t.object->carrier, section_objects, section_morphisms}};

  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  for (const auto& [x, w] : t.objects) objects.push_back(*out.path.find(x, w));
  for (std::size_t k = 0; k < t.rho.size(); ++k) {
    const ObjectId s = objects[t.object->g().source(id_at<MorphismId>(k)).index()];
    const ObjectId d = objects[t.object->g().target(id_at<MorphismId>(k)).index()];
    morphisms.push_back(*out.path.find(s, d, t.rho[k]));
  }
  out.to_path =
      EquivariantFunctor{t.object, out.path.total, Functor{t.object->carrier, out.path.total->carrier, objects, morphisms}};
  out.section_matches = compose(out.to_path, out.section) == out.path.delta1;

  // Pairs of bijections (rho, tau) with phi' ∘ rho = tau ∘ phi, counted from the label data alone.
  std::size_t pairs = 0;
  for (const auto& s : b.types)
    for (const auto& d : b.types)
      for (const auto& r : bijections(s.a, d.a, b.pool))
        for (const auto& tau : bijections(s.b, d.b, b.pool))
          if (compose(d.phi, r) == compose(tau, s.phi)) ++pairs;
  out.fiberwise_count = pairs == t.objects.size();
  return out;
}

UnivalenceCertificate check_univalence(const UniverseBundle& b, const SearchLimits& limits) {
  UnivalenceCertificate c;
  c.pool = b.pool;
  c.u_objects = b.U->g().object_count();
  c.u_morphisms = b.U->g().morphism_count();
  const PathObject path = path_object(to_one(b.U), limits);
  c.path_objects = path.total->g().object_count();
  c.delta1_acyclic_cofibration = is_acyclic_cofibration(path.delta1);
  c.u_fibrant = is_fibrant(b.U, limits);
  c.path_fibrant = is_fibrant(path.total, limits);
  const EquivalenceReport eq = is_equivalence(path.delta1.map);
  c.delta1_weak_equivalence = eq.holds;
  c.hom_pairs_checked = eq.hom_pairs_checked;
  c.conclusion = c.delta1_acyclic_cofibration && c.u_fibrant && c.path_fibrant && c.delta1_weak_equivalence;
  return c;
}

}  // namespace zgpd
