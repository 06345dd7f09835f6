#include "galloc/detail/masks.hpp"

#include <bit>

namespace galloc::detail {

Mask mask_of(std::span<const Obj> alloc) {
  Mask mask = 0;
  for (Obj o : alloc) mask |= Mask{1} << o;
  return mask;
}

ClassMasks ClassMasks::build(const Profile& profile) {
  ClassMasks cm;
  cm.agent1.reserve(profile.pref1.num_classes());
  cm.agent2.reserve(profile.pref2.num_classes());
  for (const auto& cls : profile.pref1.classes()) cm.agent1.push_back(mask_of(cls));
  for (const auto& cls : profile.pref2.classes()) cm.agent2.push_back(mask_of(cls));
  return cm;
}

bool sd_weak_masks(std::span<const Mask> class_masks, Mask a, Mask b) {
  int cum_a = 0, cum_b = 0;
  for (Mask cls : class_masks) {
    cum_a += std::popcount(a & cls);
    cum_b += std::popcount(b & cls);
    if (cum_a < cum_b) return false;
  }
  return true;
}

bool ef_masks(const ClassMasks& cm, Mask p1, Mask p2) {
  if (std::popcount(p1) != std::popcount(p2)) return false;
  return sd_weak_masks(cm.agent1, p1, p2) && sd_weak_masks(cm.agent2, p2, p1);
}

bool pareto_dominates_masks(const ClassMasks& cm, Mask q1, Mask q2, Mask p1, Mask p2) {
  if (!sd_weak_masks(cm.agent1, q1, p1) || !sd_weak_masks(cm.agent2, q2, p2)) return false;
  return !sd_weak_masks(cm.agent1, p1, q1) || !sd_weak_masks(cm.agent2, p2, q2);
}

}  // namespace galloc::detail
