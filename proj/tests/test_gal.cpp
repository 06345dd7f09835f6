#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "galloc/gal.hpp"
#include "galloc/io.hpp"
#include "helpers.hpp"

using namespace galloc;
using namespace testutil;

namespace {

// Replays a trace against the previous state, checking the structural
// invariants: legal actions on unallocated objects, per-round EF with equal
// cardinalities, pile permanence, and 1-or-2 objects leaving play per round.
void check_trace(const Profile& profile, const GalResult& result) {
  std::set<Obj> allocated;
  std::vector<Obj> pile;
  std::size_t in_play = profile.num_objects();

  REQUIRE(result.trace.size() <= profile.num_objects());
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const RoundRecord& record = result.trace[i];
    REQUIRE(record.round == static_cast<int>(i + 1));

    std::vector<Obj> touched;
    bool to_pile = false;
    Obj piled = 0;
    if (const auto* both = std::get_if<BothPick>(&record.action)) {
      touched = {both->to_agent1, both->to_agent2};
    } else if (const auto* res = std::get_if<ContestedResolved>(&record.action)) {
      touched = {res->contested, res->other_object};
      REQUIRE((res->receiver == 1 || res->receiver == 2));
    } else if (const auto* c = std::get_if<ContestedToC>(&record.action)) {
      touched = {c->contested};
      to_pile = true;
      piled = c->contested;
    } else {
      const auto& last = std::get<LastToC>(record.action);
      touched = {last.object};
      to_pile = true;
      piled = last.object;
      REQUIRE(in_play == 1);
    }

    for (Obj o : touched) {
      REQUIRE(o < profile.num_objects());
      REQUIRE_FALSE(allocated.count(o));
      REQUIRE(std::find(pile.begin(), pile.end(), o) == pile.end());
    }
    REQUIRE(touched.size() == (to_pile ? 1 : 2));
    in_play -= touched.size();

    if (to_pile) {
      pile.push_back(piled);
    } else {
      for (Obj o : touched) allocated.insert(o);
    }

    // Pile permanence: previous pile is a prefix of the current one.
    REQUIRE(record.contested_after.size() == pile.size());
    REQUIRE(std::equal(pile.begin(), pile.end(), record.contested_after.begin()));

    // Snapshot matches the replayed state.
    const Assignment& state = record.state_after;
    REQUIRE(state.p1.size() + state.p2.size() == allocated.size());
    REQUIRE(state.p1.size() == state.p2.size());
    REQUIRE(is_ef(profile, state));
    validate_assignment(profile, state);
  }
  REQUIRE(in_play == 0);

  // Final result is the last snapshot plus the pile.
  REQUIRE(result.contested == pile);
  std::vector<Obj> sorted_pile = pile;
  std::sort(sorted_pile.begin(), sorted_pile.end());
  REQUIRE(result.assignment.unallocated == sorted_pile);
  if (!result.trace.empty()) {
    REQUIRE(result.assignment.p1 == result.trace.back().state_after.p1);
    REQUIRE(result.assignment.p2 == result.trace.back().state_after.p2);
  }
}

}  // namespace

TEST_CASE("example 1 runs to the complete allocation") {
  const GalResult r = run_gal(example1());
  CHECK(r.assignment.p1 == A({1, 2, 5}));
  CHECK(r.assignment.p2 == A({4, 3, 6}));
  CHECK(r.contested.empty());
  CHECK(r.complete());

  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[0].action == RoundAction{BothPick{0, 3}});
  CHECK(r.trace[0].state_after.p1 == A({1}));
  CHECK(r.trace[0].state_after.p2 == A({4}));
  CHECK(r.trace[1].action == RoundAction{BothPick{1, 2}});
  CHECK(r.trace[1].state_after.p1 == A({1, 2}));
  CHECK(r.trace[1].state_after.p2 == A({4, 3}));
  CHECK(r.trace[2].action == RoundAction{BothPick{4, 5}});
  CHECK(r.trace[2].state_after.p1 == A({1, 2, 5}));
  CHECK(r.trace[2].state_after.p2 == A({4, 3, 6}));
  for (const auto& record : r.trace) CHECK(record.contested_after.empty());
}

TEST_CASE("example 2 contests o7 and then o3") {
  const GalResult r = run_gal(example2());
  CHECK(r.assignment.p1 == A({2, 3, 6}));
  CHECK(r.assignment.p2 == A({1, 5, 4}));
  CHECK(r.contested == A({7}));
  CHECK_FALSE(r.complete());

  REQUIRE(r.trace.size() == 4);
  CHECK(r.trace[0].action == RoundAction{ContestedToC{6}});
  CHECK(r.trace[0].state_after.p1.empty());
  CHECK(r.trace[0].state_after.p2.empty());
  CHECK(r.trace[0].contested_after == A({7}));

  CHECK(r.trace[1].action == RoundAction{BothPick{1, 0}});
  CHECK(r.trace[1].state_after.p1 == A({2}));
  CHECK(r.trace[1].state_after.p2 == A({1}));

  CHECK(r.trace[2].action == RoundAction{ContestedResolved{2, 1, 4}});
  CHECK(r.trace[2].state_after.p1 == A({2, 3}));
  CHECK(r.trace[2].state_after.p2 == A({1, 5}));

  CHECK(r.trace[3].action == RoundAction{BothPick{5, 3}});
  CHECK(r.trace[3].state_after.p1 == A({2, 3, 6}));
  CHECK(r.trace[3].state_after.p2 == A({1, 5, 4}));

  check_trace(example2(), r);
}

TEST_CASE("single object goes to the pile") {
  const Profile p = make_test_profile(1, {{1}}, {{1}});
  const GalResult r = run_gal(p);
  CHECK(r.assignment.p1.empty());
  CHECK(r.assignment.p2.empty());
  CHECK(r.contested == A({1}));
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].action == RoundAction{LastToC{0}});
}

TEST_CASE("fully indifferent agents split the objects") {
  for (int m = 1; m <= 20; ++m) {
    std::vector<std::string> labels;
    std::vector<Obj> all;
    for (int i = 1; i <= m; ++i) {
      labels.push_back("o" + std::to_string(i));
      all.push_back(static_cast<Obj>(i - 1));
    }
    const Profile p = make_profile(labels, {all}, {all});
    const GalResult r = run_gal(p);
    CHECK(r.assignment.p1.size() == static_cast<std::size_t>(m / 2));
    CHECK(r.assignment.p2.size() == static_cast<std::size_t>(m / 2));
    CHECK(r.contested.size() == static_cast<std::size_t>(m % 2));
  }
}

TEST_CASE("per-round invariants hold on random profiles") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::uint32_t m = 1 + s % 10;
    const Profile p = random_profile(m, 555'000 + s, s % 4 == 0, 1 + s % m);
    for (int favor : {1, 2}) {
      const GalResult r = run_gal(p, favor);
      CHECK(r.favor == favor);
      check_trace(p, r);
      CHECK(is_ef(p, r.assignment));
      CHECK(is_lpo(p, r.assignment));
    }
  }
}

TEST_CASE("gal is deterministic") {
  const Profile p = random_profile(9, 2024, false, 4);
  const GalResult a = run_gal(p);
  const GalResult b = run_gal(p);
  CHECK(a == b);
  CHECK(result_to_json(p, a, true) == result_to_json(p, b, true));
}

TEST_CASE("favor changes the outcome but not the guarantees") {
  // Round 2 contests o3 and both tentative placements are EF, so the favored
  // agent keeps it.
  const Profile p = make_test_profile(4, {{1}, {3}, {2, 4}}, {{2}, {3}, {4}, {1}});
  const GalResult r1 = run_gal(p, 1);
  const GalResult r2 = run_gal(p, 2);
  CHECK(r1.assignment.p1 == A({1, 3}));
  CHECK(r1.assignment.p2 == A({2, 4}));
  CHECK(r2.assignment.p1 == A({1, 4}));
  CHECK(r2.assignment.p2 == A({2, 3}));
  for (const GalResult& r : {r1, r2}) {
    CHECK(is_ef(p, r.assignment));
    CHECK(is_lpo(p, r.assignment));
  }
}

TEST_CASE("simplified AL worked examples") {
  // o1 contested and infeasible either way; o4 is the last object.
  const Profile p1 = make_test_profile(4, {{1}, {2}, {3}, {4}}, {{1}, {3}, {2}, {4}});
  const GalResult r1 = run_simplified_al(p1);
  CHECK(r1.assignment.p1 == A({2}));
  CHECK(r1.assignment.p2 == A({3}));
  CHECK(r1.contested == A({1, 4}));

  // Identical strict preferences over two objects: everything is contested.
  const Profile p2 = make_test_profile(2, {{1}, {2}}, {{1}, {2}});
  const GalResult r2 = run_simplified_al(p2);
  CHECK(r2.assignment.p1.empty());
  CHECK(r2.assignment.p2.empty());
  CHECK(r2.contested == A({1, 2}));

  // Disjoint maxima each round: no conflicts, identical to run_gal.
  const Profile p3 = make_test_profile(4, {{1}, {2}, {3}, {4}}, {{3}, {4}, {1}, {2}});
  CHECK(run_simplified_al(p3) == run_gal(p3));

  const Profile weak = make_test_profile(2, {{1, 2}}, {{1}, {2}});
  CHECK_THROWS_WITH(run_simplified_al(weak),
                    Catch::Matchers::ContainsSubstring("strict"));
}

TEST_CASE("simplified AL equals gal on random strict profiles") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const std::uint32_t m = 1 + s % 10;
    const Profile p = random_profile(m, 77'000 + s, true, m);
    CHECK(run_simplified_al(p) == run_gal(p));
  }
}

TEST_CASE("exists_complete_ef") {
  CHECK(exists_complete_ef(example1()));
  CHECK_FALSE(exists_complete_ef(example2()));  // odd m

  const Profile same = make_test_profile(2, {{1}, {2}}, {{1}, {2}});
  CHECK_FALSE(exists_complete_ef(same));

  // Odd object counts can never split evenly.
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::uint32_t m = 1 + 2 * (s % 5);
    const Profile p = random_profile(m, 31 + s, false, 1 + s % m);
    CHECK_FALSE(exists_complete_ef(p));
  }
}

TEST_CASE("favor argument is validated") {
  CHECK_THROWS_AS(run_gal(example1(), 3), Error);
  CHECK_THROWS_AS(run_gal(example1(), 0), Error);
}
