#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "galloc/gen.hpp"
#include "galloc/prefs.hpp"
#include "galloc/sd.hpp"

namespace testutil {

using galloc::Allocation;
using galloc::Obj;

// 1-based literals, matching the o1..om naming used throughout.
inline Allocation A(std::initializer_list<int> xs) {
  Allocation out;
  for (int x : xs) out.push_back(static_cast<Obj>(x - 1));
  return out;
}

inline std::vector<std::vector<Obj>> classes(
    std::initializer_list<std::initializer_list<int>> groups) {
  std::vector<std::vector<Obj>> out;
  for (const auto& g : groups) out.push_back(A(g));
  return out;
}

inline galloc::Profile make_test_profile(int m,
                                         std::initializer_list<std::initializer_list<int>> c1,
                                         std::initializer_list<std::initializer_list<int>> c2) {
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("o" + std::to_string(i));
  return galloc::make_profile(std::move(labels), classes(c1), classes(c2));
}

inline galloc::Profile example1() {
  return make_test_profile(6, {{1, 2, 3}, {4, 5, 6}}, {{2, 3, 4}, {6}, {1, 5}});
}

inline galloc::Profile example2() {
  return make_test_profile(7, {{7}, {1, 2, 3}, {4, 5, 6}}, {{7}, {1}, {3}, {4, 5}, {2, 6}});
}

// Definitional SD comparison, straight off the per-object counting form;
// kept independent of the cumulative-count implementation it checks.
inline bool naive_sd_weak(const galloc::WeakOrder& order, const Allocation& a,
                          const Allocation& b) {
  for (Obj o = 0; o < order.num_objects(); ++o) {
    int ca = 0, cb = 0;
    for (Obj x : a) {
      if (order.weakly_prefers(x, o)) ++ca;
    }
    for (Obj x : b) {
      if (order.weakly_prefers(x, o)) ++cb;
    }
    if (ca < cb) return false;
  }
  return true;
}

inline galloc::SdOrdering naive_sd_compare(const galloc::WeakOrder& order, const Allocation& a,
                                           const Allocation& b) {
  const bool ab = naive_sd_weak(order, a, b);
  const bool ba = naive_sd_weak(order, b, a);
  if (ab && ba) return galloc::SdOrdering::Equal;
  if (ab) return galloc::SdOrdering::StrictlyPrefers;
  if (ba) return galloc::SdOrdering::StrictlyDispreferred;
  return galloc::SdOrdering::Incomparable;
}

inline bool naive_is_ef(const galloc::Profile& profile, const galloc::Assignment& a) {
  return a.p1.size() == a.p2.size() && naive_sd_weak(profile.pref1, a.p1, a.p2) &&
         naive_sd_weak(profile.pref2, a.p2, a.p1);
}

// Every pair of weak orders over m objects.
inline void for_each_profile(int m, const std::function<void(const galloc::Profile&)>& fn) {
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("o" + std::to_string(i));
  galloc::for_each_weak_order(m, [&](const galloc::WeakOrder& w1) {
    galloc::for_each_weak_order(m, [&](const galloc::WeakOrder& w2) {
      fn(galloc::Profile{labels, w1, w2});
    });
  });
}

}  // namespace testutil
