#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galloc/prefs.hpp"

namespace galloc {

// A set of objects. Predicates ignore order; producers keep a deterministic
// one (GAL uses acquisition order, enumeration ascending index).
using Allocation = std::vector<Obj>;

struct Assignment {
  Allocation p1;
  Allocation p2;
  Allocation unallocated;

  bool complete() const { return unallocated.empty(); }
  bool operator==(const Assignment& other) const = default;
};

// Builds the assignment with unallocated = O \ (p1 u p2), ascending. Throws
// Error if p1/p2 overlap, repeat an object, or reference unknown indices.
Assignment make_assignment(const Profile& profile, Allocation p1, Allocation p2);

// Partition check for externally supplied assignments.
void validate_assignment(const Profile& profile, const Assignment& a);

enum class SdOrdering { StrictlyPrefers, Equal, StrictlyDispreferred, Incomparable };

// a >=_SD b under `order`: at every class prefix, a holds at least as many
// objects as b. Cumulative-count procedure, O(m); a and b may differ in size.
bool sd_weakly_prefers(const WeakOrder& order, std::span<const Obj> a, std::span<const Obj> b);

SdOrdering sd_compare(const WeakOrder& order, std::span<const Obj> a, std::span<const Obj> b);

// Envy-freeness: |p1| == |p2| and each agent weakly SD-prefers its own
// allocation. O(m).
bool is_ef(const Profile& profile, const Assignment& a);

// Pairs (own object, image in the other agent's allocation); each own object
// is weakly preferred by its owner to its image.
struct InjectionWitness {
  std::vector<std::pair<Obj, Obj>> agent1;
  std::vector<std::pair<Obj, Obj>> agent2;
};

// Matching-based envy-freeness check. Returns witness injections when the
// assignment is EF (no uniqueness guarantee), nullopt otherwise.
std::optional<InjectionWitness> find_ef_injections(const Profile& profile, const Assignment& a);
bool is_ef_injection(const Profile& profile, const Assignment& a);

// Halving characterization: for each agent i and each allocated object o,
// 2 * |p(i) n {o' >=_i o}| >= |{o' in p1 u p2 : o' >=_i o}|. Exact integers.
bool is_ef_halving(const Profile& profile, const Assignment& a);

// A pair witnessing a local Pareto improvement: swapping in_p1 and in_p2
// strictly improves improving_agent without hurting the other.
struct LpoViolation {
  Obj in_p1;
  Obj in_p2;
  int improving_agent;

  bool operator==(const LpoViolation& other) const = default;
};

std::optional<LpoViolation> find_lpo_violation(const Profile& profile, const Assignment& a);

// Local Pareto optimality via the pair condition, O(m^2).
bool is_lpo(const Profile& profile, const Assignment& a);

// q Pareto-dominates p: both agents weakly SD-prefer q, at least one strictly.
bool pareto_dominates(const Profile& profile, const Assignment& q, const Assignment& p);

}  // namespace galloc
