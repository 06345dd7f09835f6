#include "galloc/prefs.hpp"

#include <algorithm>
#include <unordered_map>

namespace galloc {

WeakOrder::WeakOrder(std::vector<std::vector<Obj>> classes, std::size_t num_objects)
    : classes_(std::move(classes)), rank_(num_objects, UINT32_MAX) {
  for (std::size_t j = 0; j < classes_.size(); ++j) {
    if (classes_[j].empty()) {
      throw Error("weak order: class " + std::to_string(j + 1) + " is empty");
    }
    for (Obj o : classes_[j]) {
      if (o >= num_objects) {
        throw Error("weak order: object index " + std::to_string(o + 1) + " out of range 1.." +
                    std::to_string(num_objects));
      }
      if (rank_[o] != UINT32_MAX) {
        throw Error("weak order: object " + std::to_string(o + 1) +
                    " appears in more than one class");
      }
      rank_[o] = static_cast<std::uint32_t>(j);
    }
  }
  for (Obj o = 0; o < num_objects; ++o) {
    if (rank_[o] == UINT32_MAX) {
      throw Error("weak order: object " + std::to_string(o + 1) + " appears in no class");
    }
  }
}

std::uint32_t WeakOrder::rank(Obj o) const {
  if (o >= rank_.size()) {
    throw Error("unknown object index " + std::to_string(o + 1));
  }
  return rank_[o];
}

bool WeakOrder::strict() const {
  return std::all_of(classes_.begin(), classes_.end(),
                     [](const std::vector<Obj>& c) { return c.size() == 1; });
}

CompareResult compare(const WeakOrder& order, Obj a, Obj b) {
  const auto ra = order.rank(a);
  const auto rb = order.rank(b);
  if (ra < rb) return CompareResult::Better;
  if (ra > rb) return CompareResult::Worse;
  return CompareResult::Equal;
}

const WeakOrder& Profile::pref(int agent) const {
  if (agent == 1) return pref1;
  if (agent == 2) return pref2;
  throw Error("agent must be 1 or 2, got " + std::to_string(agent));
}

Obj Profile::object_by_label(const std::string& label) const {
  for (Obj o = 0; o < labels.size(); ++o) {
    if (labels[o] == label) return o;
  }
  throw ParseError("unknown object label '" + label + "'");
}

Profile make_profile(std::vector<std::string> labels, std::vector<std::vector<Obj>> classes1,
                     std::vector<std::vector<Obj>> classes2) {
  if (labels.empty()) {
    throw Error("profile: instance must contain at least one object");
  }
  std::unordered_map<std::string, Obj> seen;
  for (Obj o = 0; o < labels.size(); ++o) {
    if (labels[o].empty()) {
      throw Error("profile: object " + std::to_string(o + 1) + " has an empty label");
    }
    if (!seen.emplace(labels[o], o).second) {
      throw Error("profile: duplicate object label '" + labels[o] + "'");
    }
  }
  const std::size_t m = labels.size();
  Profile p{std::move(labels), WeakOrder(std::move(classes1), m), WeakOrder(std::move(classes2), m)};
  return p;
}

PriorityOrder build_priority_order(const Profile& profile, int agent) {
  const WeakOrder& own = profile.pref(agent);
  const WeakOrder& other = profile.pref(agent == 1 ? 2 : 1);

  PriorityOrder result;
  result.agent = agent;
  result.sequence.resize(profile.num_objects());
  for (Obj o = 0; o < result.sequence.size(); ++o) result.sequence[o] = o;

  // Own strict preference first; within an indifference class the object the
  // other agent likes less comes first; a tie for both agents falls back to
  // the canonical index, ascending for agent 1 and descending for agent 2.
  std::sort(result.sequence.begin(), result.sequence.end(), [&](Obj a, Obj b) {
    if (own.rank(a) != own.rank(b)) return own.rank(a) < own.rank(b);
    if (other.rank(a) != other.rank(b)) return other.rank(a) > other.rank(b);
    return agent == 1 ? a < b : a > b;
  });
  return result;
}

}  // namespace galloc
