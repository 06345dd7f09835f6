#include "galloc/gen.hpp"

#include <algorithm>
#include <numeric>

namespace galloc {

WeakOrder random_weak_order(std::uint32_t m, std::uint32_t max_classes, SplitMix64& rng) {
  if (max_classes == 0 || max_classes > m) {
    throw Error("max_classes must lie in 1..m");
  }
  std::vector<std::vector<Obj>> classes(max_classes);
  for (Obj o = 0; o < m; ++o) {
    classes[rng.bounded(max_classes)].push_back(o);
  }
  std::erase_if(classes, [](const std::vector<Obj>& c) { return c.empty(); });
  return WeakOrder(std::move(classes), m);
}

WeakOrder random_strict_order(std::uint32_t m, SplitMix64& rng) {
  std::vector<Obj> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::uint32_t i = m; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.bounded(i)]);
  }
  std::vector<std::vector<Obj>> classes;
  classes.reserve(m);
  for (Obj o : perm) classes.push_back({o});
  return WeakOrder(std::move(classes), m);
}

Profile random_profile(std::uint32_t m, std::uint64_t seed, bool strict,
                       std::uint32_t max_classes) {
  if (m == 0) throw Error("m must be at least 1");
  SplitMix64 rng(seed);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::uint32_t i = 1; i <= m; ++i) labels.push_back("o" + std::to_string(i));

  auto draw = [&]() {
    return strict ? random_strict_order(m, rng) : random_weak_order(m, max_classes, rng);
  };
  WeakOrder w1 = draw();
  WeakOrder w2 = draw();
  return Profile{std::move(labels), std::move(w1), std::move(w2)};
}

Assignment random_assignment(const Profile& profile, SplitMix64& rng) {
  Assignment a;
  for (Obj o = 0; o < profile.num_objects(); ++o) {
    switch (rng.bounded(3)) {
      case 0: a.p1.push_back(o); break;
      case 1: a.p2.push_back(o); break;
      default: a.unallocated.push_back(o); break;
    }
  }
  return a;
}

void for_each_weak_order(std::uint32_t m, const std::function<void(const WeakOrder&)>& fn) {
  // Class-id strings over 1..m whose used ids form an initial segment are in
  // bijection with ordered set partitions.
  std::vector<std::uint32_t> class_of(m, 0);
  while (true) {
    std::uint32_t max_used = 0;
    bool initial_segment = true;
    std::vector<bool> used(m, false);
    for (std::uint32_t c : class_of) {
      used[c] = true;
      max_used = std::max(max_used, c);
    }
    for (std::uint32_t c = 0; c <= max_used; ++c) {
      if (!used[c]) {
        initial_segment = false;
        break;
      }
    }
    if (initial_segment) {
      std::vector<std::vector<Obj>> classes(max_used + 1);
      for (Obj o = 0; o < m; ++o) classes[class_of[o]].push_back(o);
      fn(WeakOrder(std::move(classes), m));
    }
    // Odometer over base-m digits.
    std::uint32_t pos = 0;
    while (pos < m && ++class_of[pos] == m) {
      class_of[pos] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
}

std::uint64_t weak_order_count(std::uint32_t m) {
  std::uint64_t count = 0;
  for_each_weak_order(m, [&](const WeakOrder&) { ++count; });
  return count;
}

}  // namespace galloc
