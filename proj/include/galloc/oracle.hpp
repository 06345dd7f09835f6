#pragma once

#include <cstdint>
#include <functional>

#include "galloc/sd.hpp"

namespace galloc {

// Caps for the exhaustive verifiers; enumeration aborts with a BudgetError
// instead of running unbounded. The defaults keep the full oracle suite
// under minutes.
struct OracleBudget {
  std::uint32_t max_objects = 12;
  std::uint64_t max_enumerations = 10'000'000;
};

/**
 * Streams every assignment of each object to {agent 1, agent 2, unallocated}
 * (3^m total, base-3 over the canonical object order), or only those with
 * |p1| == |p2| when balanced_only. Returns the number yielded. Deterministic
 * order across runs.
 */
std::uint64_t enumerate_assignments(std::uint32_t m, bool balanced_only,
                                    const OracleBudget& budget,
                                    const std::function<void(const Assignment&)>& fn);

// Closed form sum_k C(m,k)*C(m-k,k); validated against direct enumeration in
// the test suite.
std::uint64_t balanced_assignment_count(std::uint32_t m);

// Ground-truth verifiers by exhaustive enumeration. These run the scan in
// parallel (OpenMP) when available; answers are combined by AND/OR and do not
// depend on the number of workers. The serial namespace below holds the
// definitional single-threaded references they are tested against.
bool oracle_complete_ef_exists(const Profile& profile, const OracleBudget& budget = {});
// Requires is_ef(p); true iff no EF assignment extends p componentwise.
bool oracle_is_maximal_ef(const Profile& profile, const Assignment& p,
                          const OracleBudget& budget = {});
// True iff no assignment over any object subset is EF and Pareto-dominates p.
bool oracle_no_ef_dominator(const Profile& profile, const Assignment& p,
                            const OracleBudget& budget = {});
// True iff no reallocation of exactly p's allocated objects Pareto-dominates p.
bool oracle_is_lpo(const Profile& profile, const Assignment& p, const OracleBudget& budget = {});

namespace serial {

// Single-threaded reference implementations that materialize each candidate
// assignment and evaluate it with the public predicates from sd.hpp.
bool oracle_complete_ef_exists(const Profile& profile, const OracleBudget& budget = {});
bool oracle_is_maximal_ef(const Profile& profile, const Assignment& p,
                          const OracleBudget& budget = {});
bool oracle_no_ef_dominator(const Profile& profile, const Assignment& p,
                            const OracleBudget& budget = {});
bool oracle_is_lpo(const Profile& profile, const Assignment& p, const OracleBudget& budget = {});

}  // namespace serial

}  // namespace galloc
