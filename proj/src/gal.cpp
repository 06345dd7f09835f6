#include "galloc/gal.hpp"

#include <algorithm>
#include <cassert>

namespace galloc {

namespace {

enum class Status : std::uint8_t { Remaining, ToAgent1, ToAgent2, Pile };

// Cumulative-count EF state for the running partial assignment, updated per
// tentative placement. ef() is the per-class prefix comparison, O(k1 + k2).
// Cardinality equality holds throughout because agents always gain objects
// in pairs.
struct EfCounts {
  const WeakOrder* pref1;
  const WeakOrder* pref2;
  std::vector<std::uint32_t> own1, oth1;  // p1 and p2 under agent 1's classes
  std::vector<std::uint32_t> own2, oth2;  // p2 and p1 under agent 2's classes

  explicit EfCounts(const Profile& profile)
      : pref1(&profile.pref1),
        pref2(&profile.pref2),
        own1(profile.pref1.num_classes(), 0),
        oth1(profile.pref1.num_classes(), 0),
        own2(profile.pref2.num_classes(), 0),
        oth2(profile.pref2.num_classes(), 0) {}

  void add(int agent, Obj o) {
    if (agent == 1) {
      own1[pref1->rank(o)]++;
      oth2[pref2->rank(o)]++;
    } else {
      own2[pref2->rank(o)]++;
      oth1[pref1->rank(o)]++;
    }
  }

  void remove(int agent, Obj o) {
    if (agent == 1) {
      own1[pref1->rank(o)]--;
      oth2[pref2->rank(o)]--;
    } else {
      own2[pref2->rank(o)]--;
      oth1[pref1->rank(o)]--;
    }
  }

  bool ef() const {
    std::uint32_t cum_own = 0, cum_oth = 0;
    for (std::size_t j = 0; j < own1.size(); ++j) {
      cum_own += own1[j];
      cum_oth += oth1[j];
      if (cum_own < cum_oth) return false;
    }
    cum_own = cum_oth = 0;
    for (std::size_t j = 0; j < own2.size(); ++j) {
      cum_own += own2[j];
      cum_oth += oth2[j];
      if (cum_own < cum_oth) return false;
    }
    return true;
  }
};

constexpr Obj kNoSkip = UINT32_MAX;

class Engine {
 public:
  Engine(const Profile& profile, std::vector<Obj> seq1, std::vector<Obj> seq2, int favor)
      : profile_(profile),
        seq1_(std::move(seq1)),
        seq2_(std::move(seq2)),
        favor_(favor),
        status_(profile.num_objects(), Status::Remaining),
        counts_(profile) {}

  GalResult run() {
    std::size_t remaining = profile_.num_objects();
    int round = 0;
    while (remaining > 0) {
      ++round;
      RoundAction action;
      if (remaining == 1) {
        const Obj o = max_priority(1, kNoSkip).value();
        to_pile(o);
        action = LastToC{o};
        remaining -= 1;
      } else {
        const Obj top1 = max_priority(1, kNoSkip).value();
        const Obj top2 = max_priority(2, kNoSkip).value();
        if (top1 != top2) {
          give(1, top1);
          give(2, top2);
          action = BothPick{top1, top2};
          remaining -= 2;
        } else {
          const Obj contested = top1;
          // remaining >= 2, so each agent still has a next candidate.
          bool resolved = false;
          for (int receiver : {favor_, 3 - favor_}) {
            const int other = 3 - receiver;
            const Obj candidate = max_priority(other, contested).value();
            if (try_pair(receiver, contested, other, candidate)) {
              action = ContestedResolved{contested, receiver, candidate};
              resolved = true;
              remaining -= 2;
              break;
            }
          }
          if (!resolved) {
            to_pile(contested);
            action = ContestedToC{contested};
            remaining -= 1;
          }
        }
      }
      trace_.push_back(RoundRecord{round, action, snapshot(), contested_});
    }

    GalResult result;
    result.assignment = snapshot();
    result.contested = contested_;
    result.trace = std::move(trace_);
    result.favor = favor_;
    return result;
  }

 private:
  // Highest-priority object still in play for `agent`, ignoring `skip`.
  // The scan hint only advances past permanently removed objects.
  std::optional<Obj> max_priority(int agent, Obj skip) {
    const std::vector<Obj>& seq = agent == 1 ? seq1_ : seq2_;
    std::size_t& hint = agent == 1 ? hint1_ : hint2_;
    while (hint < seq.size() && status_[seq[hint]] != Status::Remaining) ++hint;
    for (std::size_t i = hint; i < seq.size(); ++i) {
      const Obj o = seq[i];
      if (status_[o] == Status::Remaining && o != skip) return o;
    }
    return std::nullopt;
  }

  void give(int agent, Obj o) {
    assert(status_[o] == Status::Remaining);
    status_[o] = agent == 1 ? Status::ToAgent1 : Status::ToAgent2;
    (agent == 1 ? p1_ : p2_).push_back(o);
    counts_.add(agent, o);
  }

  void to_pile(Obj o) {
    assert(status_[o] == Status::Remaining);
    status_[o] = Status::Pile;
    contested_.push_back(o);
  }

  // Tentatively places the pair; commits only if still EF w.r.t. the original
  // weak preferences.
  bool try_pair(int receiver, Obj contested, int other, Obj candidate) {
    counts_.add(receiver, contested);
    counts_.add(other, candidate);
    if (!counts_.ef()) {
      counts_.remove(receiver, contested);
      counts_.remove(other, candidate);
      return false;
    }
    status_[contested] = receiver == 1 ? Status::ToAgent1 : Status::ToAgent2;
    status_[candidate] = other == 1 ? Status::ToAgent1 : Status::ToAgent2;
    (receiver == 1 ? p1_ : p2_).push_back(contested);
    (other == 1 ? p1_ : p2_).push_back(candidate);
    return true;
  }

  Assignment snapshot() const {
    Assignment a;
    a.p1 = p1_;
    a.p2 = p2_;
    for (Obj o = 0; o < status_.size(); ++o) {
      if (status_[o] == Status::Remaining || status_[o] == Status::Pile) {
        a.unallocated.push_back(o);
      }
    }
    return a;
  }

  const Profile& profile_;
  std::vector<Obj> seq1_, seq2_;
  int favor_;
  std::vector<Status> status_;
  EfCounts counts_;
  std::size_t hint1_ = 0, hint2_ = 0;
  std::vector<Obj> p1_, p2_, contested_;
  std::vector<RoundRecord> trace_;
};

}  // namespace

GalResult run_gal(const Profile& profile, int favor) {
  if (favor != 1 && favor != 2) {
    throw Error("favor must be 1 or 2, got " + std::to_string(favor));
  }
  Engine engine(profile, build_priority_order(profile, 1).sequence,
                build_priority_order(profile, 2).sequence, favor);
  return engine.run();
}

GalResult run_simplified_al(const Profile& profile) {
  if (!profile.pref1.strict() || !profile.pref2.strict()) {
    throw Error("simplified AL requires strict preferences");
  }

  // Independent of the priority-order machinery: picks straight off the
  // preference lists and re-checks EF from scratch each attempt.
  const std::size_t m = profile.num_objects();
  std::vector<Obj> list1, list2;
  for (const auto& cls : profile.pref1.classes()) list1.push_back(cls[0]);
  for (const auto& cls : profile.pref2.classes()) list2.push_back(cls[0]);

  std::vector<bool> taken(m, false);
  Allocation p1, p2;
  std::vector<Obj> contested;
  std::vector<RoundRecord> trace;

  auto most_preferred = [&](const std::vector<Obj>& list, Obj skip) -> Obj {
    for (Obj o : list) {
      if (!taken[o] && o != skip) return o;
    }
    throw Error("internal: no unallocated object left to pick");
  };
  auto ef_with = [&](const Allocation& q1, const Allocation& q2) {
    return sd_weakly_prefers(profile.pref1, q1, q2) && sd_weakly_prefers(profile.pref2, q2, q1);
  };
  auto snapshot = [&]() {
    Assignment a{p1, p2, {}};
    for (Obj o = 0; o < m; ++o) {
      if (!taken[o] || std::find(contested.begin(), contested.end(), o) != contested.end()) {
        a.unallocated.push_back(o);
      }
    }
    return a;
  };

  std::size_t remaining = m;
  int round = 0;
  while (remaining > 0) {
    ++round;
    RoundAction action;
    if (remaining == 1) {
      const Obj o = most_preferred(list1, kNoSkip);
      taken[o] = true;
      contested.push_back(o);
      action = LastToC{o};
      remaining -= 1;
    } else {
      const Obj top1 = most_preferred(list1, kNoSkip);
      const Obj top2 = most_preferred(list2, kNoSkip);
      if (top1 != top2) {
        taken[top1] = taken[top2] = true;
        p1.push_back(top1);
        p2.push_back(top2);
        action = BothPick{top1, top2};
        remaining -= 2;
      } else {
        const Obj contested_obj = top1;
        const Obj next2 = most_preferred(list2, contested_obj);
        const Obj next1 = most_preferred(list1, contested_obj);
        Allocation q1 = p1, q2 = p2;
        q1.push_back(contested_obj);
        q2.push_back(next2);
        if (ef_with(q1, q2)) {
          taken[contested_obj] = taken[next2] = true;
          p1.push_back(contested_obj);
          p2.push_back(next2);
          action = ContestedResolved{contested_obj, 1, next2};
          remaining -= 2;
        } else {
          q1 = p1;
          q2 = p2;
          q1.push_back(next1);
          q2.push_back(contested_obj);
          if (ef_with(q1, q2)) {
            taken[contested_obj] = taken[next1] = true;
            p1.push_back(next1);
            p2.push_back(contested_obj);
            action = ContestedResolved{contested_obj, 2, next1};
            remaining -= 2;
          } else {
            taken[contested_obj] = true;
            contested.push_back(contested_obj);
            action = ContestedToC{contested_obj};
            remaining -= 1;
          }
        }
      }
    }
    trace.push_back(RoundRecord{round, action, snapshot(), contested});
  }

  GalResult result;
  result.assignment = snapshot();
  result.contested = contested;
  result.trace = std::move(trace);
  result.favor = 1;
  return result;
}

bool exists_complete_ef(const Profile& profile) { return run_gal(profile).complete(); }

}  // namespace galloc
