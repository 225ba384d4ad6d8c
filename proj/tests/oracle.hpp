#pragma once

// Brute-force reference computations. They use only the raw tables of the inputs, never the
// library's search, normal forms or constructions, and are meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "zgpd/equivariant.hpp"

namespace oracle {

using zgpd::EquivariantFunctor;
using zgpd::MorphismId;
using zgpd::ObjectId;
using zgpd::ZTwoGroupoid;

struct Tables {
  std::size_t objects = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // per morphism
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;  // (g, f) -> g∘f
  std::vector<std::size_t> alpha_o;
  std::vector<std::size_t> alpha_m;
};

inline Tables tables(const ZTwoGroupoid& a) {
  const auto raw = a.g().raw();
  Tables t;
  t.objects = raw.objects.size();
  std::map<std::string, std::size_t> o, m;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) o[raw.objects[i]] = i;
  for (std::size_t i = 0; i < raw.morphisms.size(); ++i) {
    m[raw.morphisms[i].name] = i;
    t.ends.emplace_back(o[raw.morphisms[i].source], o[raw.morphisms[i].target]);
  }
  for (const auto& c : raw.composition) t.compose[{m[c.second], m[c.first]}] = m[c.result];
  for (ObjectId x : a.g().objects()) t.alpha_o.push_back(o[a.g().object_name(a.alpha(x))]);
  for (MorphismId f : a.g().morphisms()) t.alpha_m.push_back(m[a.g().morphism_name(a.alpha(f))]);
  return t;
}

// Calls visit(objects, morphisms) for every equivariant functor x -> a, by plain enumeration of
// object maps and then of morphism images compatible with the endpoints.
inline void for_each_map(const ZTwoGroupoid& x, const ZTwoGroupoid& a,
                         const std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& visit) {
  const Tables X = tables(x);
  const Tables A = tables(a);
  std::vector<std::size_t> om(X.objects, 0);
  const std::size_t xm = X.ends.size();
  if (A.objects == 0 && X.objects > 0) return;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < X.objects && ok; ++i) ok = A.alpha_o[om[i]] == om[X.alpha_o[i]];
    if (ok) {
      std::vector<std::vector<std::size_t>> choices(xm);
      for (std::size_t k = 0; k < xm; ++k)
        for (std::size_t j = 0; j < A.ends.size(); ++j)
          if (A.ends[j].first == om[X.ends[k].first] && A.ends[j].second == om[X.ends[k].second]) choices[k].push_back(j);
      std::vector<std::size_t> pick(xm, 0), mm(xm);
      bool any = std::all_of(choices.begin(), choices.end(), [](const auto& c) { return !c.empty(); });
      while (any) {
        for (std::size_t k = 0; k < xm; ++k) mm[k] = choices[k][pick[k]];
        bool good = true;
        for (std::size_t k = 0; k < xm && good; ++k) good = A.alpha_m[mm[k]] == mm[X.alpha_m[k]];
        for (auto it = X.compose.begin(); it != X.compose.end() && good; ++it)
          good = A.compose.at({mm[it->first.first], mm[it->first.second]}) == mm[it->second];
        if (good) visit(om, mm);
        std::size_t k = 0;
        while (k < xm && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == xm) break;
      }
    }
    std::size_t i = 0;
    while (i < X.objects && ++om[i] == A.objects) om[i++] = 0;
    if (i == X.objects) return;
  }
}

inline std::size_t count_maps(const ZTwoGroupoid& x, const ZTwoGroupoid& a) {
  std::size_t n = 0;
  for_each_map(x, a, [&](const auto&, const auto&) { ++n; });
  return n;
}

// Fillers of a square, by brute force over all maps from the codomain of the left side.
inline std::size_t count_fillers(const EquivariantFunctor& left, const EquivariantFunctor& right,
                                 const EquivariantFunctor& top, const EquivariantFunctor& bottom) {
  std::size_t n = 0;
  for_each_map(*left.target, *right.source, [&](const auto& om, const auto& mm) {
    for (ObjectId x : left.source->g().objects())
      if (om[left(x).index()] != top(x).index()) return;
    for (MorphismId m : left.source->g().morphisms())
      if (mm[left(m).index()] != top(m).index()) return;
    for (ObjectId y : left.target->g().objects())
      if (right(ObjectId(static_cast<std::uint32_t>(om[y.index()]))) != bottom(y)) return;
    for (MorphismId m : left.target->g().morphisms())
      if (right(MorphismId(static_cast<std::uint32_t>(mm[m.index()]))) != bottom(m)) return;
    ++n;
  });
  return n;
}

// Universe data counted straight from label sets: all functions A -> B of subsets of the pool,
// keeping the bijective ones.
struct UniverseCounts {
  std::size_t objects = 0;
  std::size_t fixed = 0;
  std::size_t morphisms = 0;
  std::size_t points = 0;
};

inline std::vector<std::vector<int>> all_bijections(const std::vector<int>& from, const std::vector<int>& to, int pool) {
  std::vector<std::vector<int>> out;
  if (from.size() != to.size()) return out;
  std::vector<int> f(static_cast<std::size_t>(pool), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == from.size()) {
      std::set<int> image;
      for (int a : from) image.insert(f[static_cast<std::size_t>(a)]);
      if (image.size() == from.size()) out.push_back(f);
      return;
    }
    for (int b : to) {
      f[static_cast<std::size_t>(from[i])] = b;
      rec(i + 1);
    }
    f[static_cast<std::size_t>(from[i])] = -1;
  };
  rec(0);
  return out;
}

inline UniverseCounts universe_counts(int pool) {
  struct Obj {
    std::vector<int> a, b;
    std::vector<int> phi;
  };
  std::vector<Obj> obs;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << pool); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < pool; ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(s);
  }
  for (const auto& a : subsets)
    for (const auto& b : subsets)
      for (const auto& phi : all_bijections(a, b, pool)) obs.push_back({a, b, phi});
  UniverseCounts c;
  c.objects = obs.size();
  for (const auto& o : obs) {
    c.points += o.a.size();
    bool fixed = o.a == o.b;
    for (int x : o.a) fixed = fixed && o.phi[static_cast<std::size_t>(o.phi[static_cast<std::size_t>(x)])] == x;
    c.fixed += fixed;
  }
  for (const auto& s : obs)
    for (const auto& t : obs)
      for (const auto& rho : all_bijections(s.a, t.a, pool))
        for (const auto& tau : all_bijections(s.b, t.b, pool)) {
          bool commutes = true;
          for (int x : s.a)
            commutes = commutes && t.phi[static_cast<std::size_t>(rho[static_cast<std::size_t>(x)])] ==
                                       tau[static_cast<std::size_t>(s.phi[static_cast<std::size_t>(x)])];
          c.morphisms += commutes;
        }
  return c;
}

// Objects of P_1 A: triples (x, y, phi: x -> y), counted from the raw incidence table.
inline std::size_t path_objects_over_point(const ZTwoGroupoid& a) {
  const Tables t = tables(a);
  std::size_t n = 0;
  for (std::size_t x = 0; x < t.objects; ++x)
    for (std::size_t y = 0; y < t.objects; ++y)
      for (const auto& e : t.ends) n += e.first == x && e.second == y;
  return n;
}

// Lifts of each base morphism out of each total object, by scanning every morphism of E.
inline bool is_covering(const EquivariantFunctor& q) {
  const Tables e = tables(*q.source);
  const Tables x = tables(*q.target);
  for (std::size_t o = 0; o < e.objects; ++o) {
    for (std::size_t g = 0; g < x.ends.size(); ++g) {
      if (x.ends[g].first != q(ObjectId(static_cast<std::uint32_t>(o))).index()) continue;
      std::size_t lifts = 0;
      for (std::size_t m = 0; m < e.ends.size(); ++m)
        lifts += e.ends[m].first == o && q(MorphismId(static_cast<std::uint32_t>(m))).index() == g;
      if (lifts != 1) return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> fiber_sizes(const EquivariantFunctor& q) {
  std::vector<std::size_t> out(q.target->g().object_count(), 0);
  for (ObjectId o : q.source->g().objects()) ++out[q(o).index()];
  return out;
}

}  // namespace oracle
