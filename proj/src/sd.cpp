#include "galloc/sd.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace galloc {

namespace {

// Per-class occupancy of an allocation under `order`, most preferred class first.
std::vector<std::uint32_t> class_counts(const WeakOrder& order, std::span<const Obj> alloc) {
  std::vector<std::uint32_t> counts(order.num_classes(), 0);
  for (Obj o : alloc) counts[order.rank(o)]++;
  return counts;
}

void check_membership(const Profile& profile, std::span<const Obj> alloc, const char* name,
                      std::vector<std::uint8_t>& seen) {
  for (Obj o : alloc) {
    if (o >= profile.num_objects()) {
      throw Error(std::string("assignment: ") + name + " references object index " +
                  std::to_string(o + 1) + " outside the instance");
    }
    if (seen[o]) {
      throw Error("assignment: object '" + profile.label(o) + "' assigned more than once");
    }
    seen[o] = 1;
  }
}

}  // namespace

Assignment make_assignment(const Profile& profile, Allocation p1, Allocation p2) {
  std::vector<std::uint8_t> seen(profile.num_objects(), 0);
  check_membership(profile, p1, "p1", seen);
  check_membership(profile, p2, "p2", seen);
  Assignment a{std::move(p1), std::move(p2), {}};
  for (Obj o = 0; o < profile.num_objects(); ++o) {
    if (!seen[o]) a.unallocated.push_back(o);
  }
  return a;
}

void validate_assignment(const Profile& profile, const Assignment& a) {
  std::vector<std::uint8_t> seen(profile.num_objects(), 0);
  check_membership(profile, a.p1, "p1", seen);
  check_membership(profile, a.p2, "p2", seen);
  check_membership(profile, a.unallocated, "unallocated", seen);
  for (Obj o = 0; o < profile.num_objects(); ++o) {
    if (!seen[o]) {
      throw Error("assignment: object '" + profile.label(o) + "' appears nowhere");
    }
  }
}

bool sd_weakly_prefers(const WeakOrder& order, std::span<const Obj> a, std::span<const Obj> b) {
  const auto ca = class_counts(order, a);
  const auto cb = class_counts(order, b);
  std::uint32_t cum_a = 0, cum_b = 0;
  for (std::size_t j = 0; j < order.num_classes(); ++j) {
    cum_a += ca[j];
    cum_b += cb[j];
    if (cum_a < cum_b) return false;
  }
  return true;
}

SdOrdering sd_compare(const WeakOrder& order, std::span<const Obj> a, std::span<const Obj> b) {
  const auto ca = class_counts(order, a);
  const auto cb = class_counts(order, b);
  bool a_geq = true, b_geq = true;
  std::uint32_t cum_a = 0, cum_b = 0;
  for (std::size_t j = 0; j < order.num_classes(); ++j) {
    cum_a += ca[j];
    cum_b += cb[j];
    if (cum_a < cum_b) a_geq = false;
    if (cum_b < cum_a) b_geq = false;
  }
  if (a_geq && b_geq) return SdOrdering::Equal;
  if (a_geq) return SdOrdering::StrictlyPrefers;
  if (b_geq) return SdOrdering::StrictlyDispreferred;
  return SdOrdering::Incomparable;
}

bool is_ef(const Profile& profile, const Assignment& a) {
  if (a.p1.size() != a.p2.size()) return false;
  return sd_weakly_prefers(profile.pref1, a.p1, a.p2) &&
         sd_weakly_prefers(profile.pref2, a.p2, a.p1);
}

namespace {

// Kuhn's augmenting-path matching on the envy graph of one agent:
// left = the other agent's objects, right = own objects, edge when the owner
// weakly prefers its own object to the other's.
class EnvyMatcher {
 public:
  EnvyMatcher(const WeakOrder& own_order, std::span<const Obj> own, std::span<const Obj> others)
      : own_(own.begin(), own.end()), others_(others.begin(), others.end()) {
    adj_.resize(others_.size());
    for (std::size_t l = 0; l < others_.size(); ++l) {
      for (std::size_t r = 0; r < own_.size(); ++r) {
        if (own_order.weakly_prefers(own_[r], others_[l])) adj_[l].push_back(r);
      }
    }
  }

  // Returns (own object, matched other object) pairs covering all of
  // `others`, or nullopt if no perfect matching exists.
  std::optional<std::vector<std::pair<Obj, Obj>>> solve() {
    match_of_right_.assign(own_.size(), SIZE_MAX);
    for (std::size_t l = 0; l < others_.size(); ++l) {
      visited_.assign(own_.size(), false);
      if (!augment(l)) return std::nullopt;
    }
    std::vector<std::pair<Obj, Obj>> pairs;
    for (std::size_t r = 0; r < own_.size(); ++r) {
      assert(match_of_right_[r] != SIZE_MAX);
      pairs.emplace_back(own_[r], others_[match_of_right_[r]]);
    }
    return pairs;
  }

 private:
  bool augment(std::size_t l) {
    for (std::size_t r : adj_[l]) {
      if (visited_[r]) continue;
      visited_[r] = true;
      if (match_of_right_[r] == SIZE_MAX || augment(match_of_right_[r])) {
        match_of_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<Obj> own_, others_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_of_right_;
  std::vector<bool> visited_;
};

}  // namespace

std::optional<InjectionWitness> find_ef_injections(const Profile& profile, const Assignment& a) {
  if (a.p1.size() != a.p2.size()) return std::nullopt;
  auto f1 = EnvyMatcher(profile.pref1, a.p1, a.p2).solve();
  if (!f1) return std::nullopt;
  auto f2 = EnvyMatcher(profile.pref2, a.p2, a.p1).solve();
  if (!f2) return std::nullopt;
  return InjectionWitness{std::move(*f1), std::move(*f2)};
}

bool is_ef_injection(const Profile& profile, const Assignment& a) {
  return find_ef_injections(profile, a).has_value();
}

bool is_ef_halving(const Profile& profile, const Assignment& a) {
  for (int agent : {1, 2}) {
    const WeakOrder& order = profile.pref(agent);
    const Allocation& own = agent == 1 ? a.p1 : a.p2;
    const std::size_t k = order.num_classes();
    std::vector<std::uint32_t> own_cnt(k, 0), all_cnt(k, 0);
    std::vector<std::uint8_t> occupied(k, 0);
    for (Obj o : own) {
      own_cnt[order.rank(o)]++;
    }
    for (const Allocation* alloc : {&a.p1, &a.p2}) {
      for (Obj o : *alloc) {
        all_cnt[order.rank(o)]++;
        occupied[order.rank(o)] = 1;
      }
    }
    std::uint32_t cum_own = 0, cum_all = 0;
    for (std::size_t j = 0; j < k; ++j) {
      cum_own += own_cnt[j];
      cum_all += all_cnt[j];
      // The inequality only binds at classes holding an allocated object.
      if (occupied[j] && 2 * cum_own < cum_all) return false;
    }
  }
  return true;
}

std::optional<LpoViolation> find_lpo_violation(const Profile& profile, const Assignment& a) {
  for (Obj x : a.p1) {
    for (Obj y : a.p2) {
      // Agent 1 holds x but strictly prefers y, and agent 2 weakly prefers x.
      if (profile.pref1.prefers(y, x) && profile.pref2.weakly_prefers(x, y)) {
        return LpoViolation{x, y, 1};
      }
      // Mirror: agent 2 holds y but strictly prefers x, agent 1 weakly prefers y.
      if (profile.pref2.prefers(x, y) && profile.pref1.weakly_prefers(y, x)) {
        return LpoViolation{x, y, 2};
      }
    }
  }
  return std::nullopt;
}

bool is_lpo(const Profile& profile, const Assignment& a) {
  return !find_lpo_violation(profile, a).has_value();
}

bool pareto_dominates(const Profile& profile, const Assignment& q, const Assignment& p) {
  const bool weak1 = sd_weakly_prefers(profile.pref1, q.p1, p.p1);
  const bool weak2 = sd_weakly_prefers(profile.pref2, q.p2, p.p2);
  if (!weak1 || !weak2) return false;
  const bool strict1 = !sd_weakly_prefers(profile.pref1, p.p1, q.p1);
  const bool strict2 = !sd_weakly_prefers(profile.pref2, p.p2, q.p2);
  return strict1 || strict2;
}

}  // namespace galloc
