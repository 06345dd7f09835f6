#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "galloc/prefs.hpp"

namespace galloc::detail {

// Bitmask allocation encoding used by the enumeration oracles: bit o set
// means object o is in the allocation. Limited to m <= 63.
using Mask = std::uint64_t;

Mask mask_of(std::span<const Obj> alloc);

// Per-class object masks for both agents; SD prefix comparisons become
// popcounts. Equivalent to the vector-based predicates in sd.hpp (asserted
// exhaustively in tests).
struct ClassMasks {
  std::vector<Mask> agent1;
  std::vector<Mask> agent2;

  static ClassMasks build(const Profile& profile);
};

bool sd_weak_masks(std::span<const Mask> class_masks, Mask a, Mask b);
bool ef_masks(const ClassMasks& cm, Mask p1, Mask p2);
bool pareto_dominates_masks(const ClassMasks& cm, Mask q1, Mask q2, Mask p1, Mask p2);

}  // namespace galloc::detail
