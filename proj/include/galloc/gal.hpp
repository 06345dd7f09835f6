#pragma once

#include <variant>
#include <vector>

#include "galloc/sd.hpp"

namespace galloc {

// One object went to each agent (distinct priority maxima).
struct BothPick {
  Obj to_agent1;
  Obj to_agent2;
  bool operator==(const BothPick&) const = default;
};

// Both priority maxima coincided; the contested object could be placed.
struct ContestedResolved {
  Obj contested;
  int receiver;      // agent that got the contested object
  Obj other_object;  // next-priority object given to the other agent
  bool operator==(const ContestedResolved&) const = default;
};

// Neither tentative placement of the contested object was EF.
struct ContestedToC {
  Obj contested;
  bool operator==(const ContestedToC&) const = default;
};

// A single remaining object always goes to the pile.
struct LastToC {
  Obj object;
  bool operator==(const LastToC&) const = default;
};

using RoundAction = std::variant<BothPick, ContestedResolved, ContestedToC, LastToC>;

struct RoundRecord {
  int round = 0;  // 1-based
  RoundAction action;
  // Snapshot after the round. p1/p2 in acquisition order; unallocated holds
  // everything not yet given to an agent (remaining objects and the pile),
  // ascending.
  Assignment state_after;
  std::vector<Obj> contested_after;  // pile in insertion order

  bool operator==(const RoundRecord&) const = default;
};

struct GalResult {
  Assignment assignment;        // p1/p2 in acquisition order; unallocated ascending
  std::vector<Obj> contested;   // pile in insertion order
  std::vector<RoundRecord> trace;
  int favor = 1;

  bool complete() const { return contested.empty(); }
  bool operator==(const GalResult&) const = default;
};

/**
 * GAL: deterministic envy-free allocation of indivisible objects between two
 * agents with weak ordinal preferences. Each round both agents take their
 * highest-priority remaining object; when the maxima coincide the contested
 * object is tentatively placed (favored agent first) and kept only if the
 * partial assignment stays EF w.r.t. the original preferences, otherwise it
 * goes to the contested pile. O(m^2).
 *
 * The outcome is EF, maximally EF, locally Pareto optimal, and complete
 * whenever a complete EF assignment exists.
 */
GalResult run_gal(const Profile& profile, int favor = 1);

// The strict-preference picking method GAL generalizes: agents pick their
// most preferred remaining object directly, with the same conflict handling.
// Requires a strict profile. On strict profiles it matches run_gal.
GalResult run_simplified_al(const Profile& profile);

// A complete EF assignment exists iff GAL's contested pile is empty. O(m^2).
bool exists_complete_ef(const Profile& profile);

}  // namespace galloc
