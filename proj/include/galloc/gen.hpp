#pragma once

#include <cstdint>
#include <functional>

#include "galloc/sd.hpp"

namespace galloc {

// Fixed-algorithm generator (splitmix64) so seeded output is byte-identical
// across standard libraries and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by multiply-shift reduction.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Each object draws a class id in 1..max_classes; empty classes are compacted
// in order. Lower surviving class id = more preferred.
WeakOrder random_weak_order(std::uint32_t m, std::uint32_t max_classes, SplitMix64& rng);

// Fisher-Yates permutation, singleton classes.
WeakOrder random_strict_order(std::uint32_t m, SplitMix64& rng);

// Labels o1..om; agent 1's order is drawn first, then agent 2's, from one
// stream seeded with `seed`.
Profile random_profile(std::uint32_t m, std::uint64_t seed, bool strict,
                       std::uint32_t max_classes);

// Uniform destination agent-1 / agent-2 / unallocated per object.
Assignment random_assignment(const Profile& profile, SplitMix64& rng);

// Enumerates every weak order over m objects (every ordered set partition),
// in a fixed order. 1, 3, 13, 75, ... orders for m = 1, 2, 3, 4.
void for_each_weak_order(std::uint32_t m, const std::function<void(const WeakOrder&)>& fn);

std::uint64_t weak_order_count(std::uint32_t m);

}  // namespace galloc
