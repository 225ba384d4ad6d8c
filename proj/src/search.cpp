#include "search.hpp"

#include <algorithm>
#include <cstdint>

namespace zgpd::detail {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;
constexpr std::uint32_t kMorphismBit = 0x80000000u;

class MapSearch {
 public:
  MapSearch(const MapConstraints& c, SearchBudget& budget, const MapVisitor& visit)
      : c_(c), src_(*c.source), tgt_(*c.target), budget_(budget), visit_(visit) {
    obj_.assign(src_.object_count(), kUnset);
    mor_.assign(src_.morphism_count(), kUnset);
    if (c_.over && c_.bottom) {
      const std::size_t base = c_.over->target->object_count();
      fibers_.resize(base);
      for (ObjectId y : tgt_.objects()) fibers_[(*c_.over)(y).index()].push_back(y);
    }
    equivariant_ = c_.source_object_involution && c_.target_object_involution;
  }

  void run() {
    for (auto [x, y] : c_.fixed_objects)
      if (!assign_object(x, y)) return;
    for (auto [m, n] : c_.fixed_morphisms)
      if (!assign_morphism(m, n)) return;
    if (!propagate()) return;
    recurse(0, 0);
  }

 private:
  bool assign_object(ObjectId x, ObjectId y) {
    auto& slot = obj_[x.index()];
    if (slot != kUnset) return slot == y.value;
    if (fibers_.size() && (*c_.over)(y) != (*c_.bottom)(x)) return false;
    slot = y.value;
    trail_.push_back(x.value);
    queue_.push_back(x.value);
    return true;
  }

  bool assign_morphism(MorphismId m, MorphismId n) {
    auto& slot = mor_[m.index()];
    if (slot != kUnset) return slot == n.value;
    if (fibers_.size() && (*c_.over)(n) != (*c_.bottom)(m)) return false;
    slot = n.value;
    trail_.push_back(m.value | kMorphismBit);
    queue_.push_back(m.value | kMorphismBit);
    return assign_object(src_.source(m), tgt_.source(n)) && assign_object(src_.target(m), tgt_.target(n));
  }

  bool process_object(ObjectId x) {
    const ObjectId y(obj_[x.index()]);
    if (!assign_morphism(src_.identity(x), tgt_.identity(y))) return false;
    if (equivariant_) {
      if (!assign_object((*c_.source_object_involution)[x.index()], (*c_.target_object_involution)[y.index()]))
        return false;
    }
    // Objects in one component must land in one component.
    for (ObjectId w : src_.component_objects(src_.component_of(x))) {
      const auto v = obj_[w.index()];
      if (v != kUnset && !tgt_.connected(ObjectId(v), y)) return false;
    }
    return true;
  }

  bool process_morphism(MorphismId m) {
    const MorphismId n(mor_[m.index()]);
    if (!assign_morphism(src_.inverse(m), tgt_.inverse(n))) return false;
    if (equivariant_) {
      if (!assign_morphism((*c_.source_morphism_involution)[m.index()],
                           (*c_.target_morphism_involution)[n.index()]))
        return false;
    }
    const ObjectId x = src_.source(m);
    const ObjectId y = src_.target(m);
    for (ObjectId z : src_.component_objects(src_.component_of(y))) {
      for (MorphismId k : src_.hom(y, z)) {
        const auto v = mor_[k.index()];
        if (v == kUnset) continue;
        if (!assign_morphism(src_.compose(k, m), tgt_.compose(MorphismId(v), n))) return false;
      }
      for (MorphismId k : src_.hom(z, x)) {
        const auto v = mor_[k.index()];
        if (v == kUnset) continue;
        if (!assign_morphism(src_.compose(m, k), tgt_.compose(n, MorphismId(v)))) return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (head_ < queue_.size()) {
      const std::uint32_t item = queue_[head_++];
      const bool ok = (item & kMorphismBit) ? process_morphism(MorphismId(item & ~kMorphismBit))
                                            : process_object(ObjectId(item));
      if (!ok) return false;
    }
    return true;
  }

  void undo(std::size_t trail_size) {
    while (trail_.size() > trail_size) {
      const std::uint32_t item = trail_.back();
      trail_.pop_back();
      if (item & kMorphismBit)
        mor_[item & ~kMorphismBit] = kUnset;
      else
        obj_[item] = kUnset;
    }
    queue_.clear();
    head_ = 0;
  }

  // Returns false once the visitor asked to stop.
  bool recurse(std::size_t next_object, std::size_t next_morphism) {
    while (next_object < obj_.size() && obj_[next_object] != kUnset) ++next_object;
    if (next_object < obj_.size()) {
      const ObjectId x = id_at<ObjectId>(next_object);
      const auto try_value = [&](ObjectId y) {
        budget_.charge();
        const std::size_t mark = trail_.size();
        bool keep_going = true;
        if (assign_object(x, y) && propagate()) keep_going = recurse(next_object + 1, next_morphism);
        undo(mark);
        return keep_going;
      };
      if (!fibers_.empty()) {
        for (ObjectId y : fibers_[(*c_.bottom)(x).index()])
          if (!try_value(y)) return false;
      } else {
        for (ObjectId y : tgt_.objects())
          if (!try_value(y)) return false;
      }
      return true;
    }
    while (next_morphism < mor_.size() && mor_[next_morphism] != kUnset) ++next_morphism;
    if (next_morphism == mor_.size()) {
      budget_.charge();
      std::vector<ObjectId> objects(obj_.size());
      std::vector<MorphismId> morphisms(mor_.size());
      for (std::size_t i = 0; i < obj_.size(); ++i) objects[i] = ObjectId(obj_[i]);
      for (std::size_t i = 0; i < mor_.size(); ++i) morphisms[i] = MorphismId(mor_[i]);
      return visit_(objects, morphisms);
    }
    const MorphismId m = id_at<MorphismId>(next_morphism);
    const ObjectId fx(obj_[src_.source(m).index()]);
    const ObjectId fy(obj_[src_.target(m).index()]);
    auto span = tgt_.hom(fx, fy);
    std::vector<MorphismId> candidates(span.begin(), span.end());
    std::sort(candidates.begin(), candidates.end());
    for (MorphismId n : candidates) {
      budget_.charge();
      const std::size_t mark = trail_.size();
      bool keep_going = true;
      if (assign_morphism(m, n) && propagate()) keep_going = recurse(next_object, next_morphism + 1);
      undo(mark);
      if (!keep_going) return false;
    }
    return true;
  }

  const MapConstraints& c_;
  const Groupoid& src_;
  const Groupoid& tgt_;
  SearchBudget& budget_;
  const MapVisitor& visit_;
  bool equivariant_ = false;

  std::vector<std::uint32_t> obj_;
  std::vector<std::uint32_t> mor_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> queue_;
  std::size_t head_ = 0;
  std::vector<std::vector<ObjectId>> fibers_;
};

}  // namespace

void search_maps(const MapConstraints& constraints, SearchBudget& budget, const MapVisitor& visit) {
  MapSearch(constraints, budget, visit).run();
}

}  // namespace zgpd::detail
