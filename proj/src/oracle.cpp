#include "galloc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>

#include "galloc/detail/masks.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace galloc {

using detail::ClassMasks;
using detail::Mask;
using detail::mask_of;

namespace {

constexpr std::uint32_t kMaskLimit = 62;

Mask bit(Obj o) { return Mask{1} << o; }

void check_objects(std::uint32_t m, const OracleBudget& budget) {
  if (m > budget.max_objects) {
    throw BudgetError("oracle: instance has " + std::to_string(m) +
                      " objects, budget allows at most " + std::to_string(budget.max_objects));
  }
  if (m > kMaskLimit) {
    throw BudgetError("oracle: at most " + std::to_string(kMaskLimit) + " objects supported");
  }
}

// base^exp, rejected if it exceeds the enumeration budget.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, const OracleBudget& budget) {
  std::uint64_t value = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (value > budget.max_enumerations / base) {
      throw BudgetError("oracle: enumerating " + std::to_string(base) + "^" +
                        std::to_string(exp) + " assignments exceeds budget of " +
                        std::to_string(budget.max_enumerations));
    }
    value *= base;
  }
  if (value > budget.max_enumerations) {
    throw BudgetError("oracle: enumerating " + std::to_string(value) +
                      " assignments exceeds budget of " +
                      std::to_string(budget.max_enumerations));
  }
  return value;
}

// Base-3 counter over the given object positions, maintaining the two
// allocation masks incrementally. Digit 0 = unallocated, 1 = agent 1,
// 2 = agent 2; positions[0] is the least significant digit.
class Base3Odometer {
 public:
  Base3Odometer(std::span<const Obj> positions, std::uint64_t index)
      : positions_(positions), digit_(positions.size() + 1, 0) {
    for (std::size_t i = 0; i < positions_.size(); ++i, index /= 3) {
      digit_[i] = static_cast<std::uint8_t>(index % 3);
      if (digit_[i] == 1) m1_ |= bit(positions_[i]);
      if (digit_[i] == 2) m2_ |= bit(positions_[i]);
    }
  }

  Mask mask1() const { return m1_; }
  Mask mask2() const { return m2_; }

  void advance() {
    for (std::size_t i = 0;; ++i) {
      if (i == positions_.size()) {  // sentinel; counter saturation is fine
        ++digit_[i];
        return;
      }
      const Mask b = bit(positions_[i]);
      if (digit_[i] == 0) {
        digit_[i] = 1;
        m1_ |= b;
        return;
      }
      if (digit_[i] == 1) {
        digit_[i] = 2;
        m1_ ^= b;
        m2_ |= b;
        return;
      }
      digit_[i] = 0;  // carry
      m2_ ^= b;
    }
  }

 private:
  std::span<const Obj> positions_;
  std::vector<std::uint8_t> digit_;
  Mask m1_ = 0, m2_ = 0;
};

// Scatters the low bits of `index` onto the set bits of `support`,
// lowest support bit first.
Mask deposit(std::uint64_t index, Mask support) {
  Mask out = 0;
  while (support) {
    const Mask low = support & (support - Mask{1});
    const Mask lowest_bit = support ^ low;
    if (index & 1) out |= lowest_bit;
    index >>= 1;
    support = low;
  }
  return out;
}

/**
 * Runs `kernel(lo, hi, stop)` over a partition of [0, total), in parallel
 * when OpenMP is enabled. Kernels set `stop` when they find a witness; the
 * combined answer is an OR over chunks, so it does not depend on the worker
 * count or schedule.
 */
template <typename Kernel>
bool scan_finds(std::uint64_t total, const Kernel& kernel) {
  std::atomic<bool> found{false};
  if (total == 0) return false;
#ifdef _OPENMP
#pragma omp parallel
  {
    const auto nt = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * tid / nt);
    const auto hi =
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (tid + 1) / nt);
    if (lo < hi) kernel(lo, hi, found);
  }
#else
  kernel(0, total, found);
#endif
  return found.load();
}

constexpr std::uint64_t kStopCheckBlock = 4096;

Assignment assignment_from_index(std::uint32_t m, std::uint64_t index) {
  Assignment a;
  for (Obj o = 0; o < m; ++o, index /= 3) {
    switch (index % 3) {
      case 1: a.p1.push_back(o); break;
      case 2: a.p2.push_back(o); break;
      default: a.unallocated.push_back(o); break;
    }
  }
  return a;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

void require_ef_precondition(const Profile& profile, const Assignment& p) {
  if (!is_ef(profile, p)) {
    throw Error("oracle_is_maximal_ef: assignment is not EF");
  }
}

}  // namespace

std::uint64_t enumerate_assignments(std::uint32_t m, bool balanced_only,
                                    const OracleBudget& budget,
                                    const std::function<void(const Assignment&)>& fn) {
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(3, m, budget);
  std::uint64_t yielded = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    Assignment a = assignment_from_index(m, index);
    if (balanced_only && a.p1.size() != a.p2.size()) continue;
    ++yielded;
    fn(a);
  }
  return yielded;
}

std::uint64_t balanced_assignment_count(std::uint32_t m) {
  std::uint64_t count = 0;
  for (std::uint32_t k = 0; 2 * k <= m; ++k) {
    count += binomial(m, k) * binomial(m - k, k);
  }
  return count;
}

bool oracle_complete_ef_exists(const Profile& profile, const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(2, m, budget);
  const ClassMasks cm = ClassMasks::build(profile);
  const Mask full = bit(m) - 1;  // m <= 62 enforced above

  return scan_finds(total, [&](std::uint64_t lo, std::uint64_t hi, std::atomic<bool>& stop) {
    for (std::uint64_t index = lo; index < hi;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::uint64_t block_end = std::min(hi, index + kStopCheckBlock);
      for (; index < block_end; ++index) {
        const Mask p2 = index;
        if (ef_masks(cm, full ^ p2, p2)) {
          stop.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  });
}

bool oracle_is_maximal_ef(const Profile& profile, const Assignment& p,
                          const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  require_ef_precondition(profile, p);
  const std::uint64_t total =
      checked_pow(3, static_cast<std::uint32_t>(p.unallocated.size()), budget);
  const ClassMasks cm = ClassMasks::build(profile);
  const Mask base1 = mask_of(p.p1);
  const Mask base2 = mask_of(p.p2);

  const bool extension_found =
      scan_finds(total, [&](std::uint64_t lo, std::uint64_t hi, std::atomic<bool>& stop) {
        Base3Odometer od(p.unallocated, lo);
        for (std::uint64_t index = lo; index < hi;) {
          if (stop.load(std::memory_order_relaxed)) return;
          const std::uint64_t block_end = std::min(hi, index + kStopCheckBlock);
          for (; index < block_end; ++index, od.advance()) {
            if ((od.mask1() | od.mask2()) == 0) continue;  // identity, not a strict extension
            if (ef_masks(cm, base1 | od.mask1(), base2 | od.mask2())) {
              stop.store(true, std::memory_order_relaxed);
              return;
            }
          }
        }
      });
  return !extension_found;
}

bool oracle_no_ef_dominator(const Profile& profile, const Assignment& p,
                            const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(3, m, budget);
  const ClassMasks cm = ClassMasks::build(profile);
  const Mask p1 = mask_of(p.p1);
  const Mask p2 = mask_of(p.p2);
  std::vector<Obj> all(m);
  for (Obj o = 0; o < m; ++o) all[o] = o;

  const bool dominator_found =
      scan_finds(total, [&](std::uint64_t lo, std::uint64_t hi, std::atomic<bool>& stop) {
        Base3Odometer od(all, lo);
        for (std::uint64_t index = lo; index < hi;) {
          if (stop.load(std::memory_order_relaxed)) return;
          const std::uint64_t block_end = std::min(hi, index + kStopCheckBlock);
          for (; index < block_end; ++index, od.advance()) {
            if (ef_masks(cm, od.mask1(), od.mask2()) &&
                pareto_dominates_masks(cm, od.mask1(), od.mask2(), p1, p2)) {
              stop.store(true, std::memory_order_relaxed);
              return;
            }
          }
        }
      });
  return !dominator_found;
}

bool oracle_is_lpo(const Profile& profile, const Assignment& p, const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(
      2, static_cast<std::uint32_t>(p.p1.size() + p.p2.size()), budget);
  const ClassMasks cm = ClassMasks::build(profile);
  const Mask p1 = mask_of(p.p1);
  const Mask p2 = mask_of(p.p2);
  const Mask support = p1 | p2;

  const bool improvement_found =
      scan_finds(total, [&](std::uint64_t lo, std::uint64_t hi, std::atomic<bool>& stop) {
        Mask q1 = deposit(lo, support);
        for (std::uint64_t index = lo; index < hi;) {
          if (stop.load(std::memory_order_relaxed)) return;
          const std::uint64_t block_end = std::min(hi, index + kStopCheckBlock);
          for (; index < block_end; ++index, q1 = (q1 - support) & support) {
            if (pareto_dominates_masks(cm, q1, support ^ q1, p1, p2)) {
              stop.store(true, std::memory_order_relaxed);
              return;
            }
          }
        }
      });
  return !improvement_found;
}

namespace serial {

bool oracle_complete_ef_exists(const Profile& profile, const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(2, m, budget);
  for (std::uint64_t index = 0; index < total; ++index) {
    Assignment a;
    for (Obj o = 0; o < m; ++o) {
      ((index >> o) & 1 ? a.p2 : a.p1).push_back(o);
    }
    if (is_ef(profile, a)) return true;
  }
  return false;
}

bool oracle_is_maximal_ef(const Profile& profile, const Assignment& p,
                          const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  require_ef_precondition(profile, p);
  const std::uint64_t total =
      checked_pow(3, static_cast<std::uint32_t>(p.unallocated.size()), budget);
  for (std::uint64_t index = 1; index < total; ++index) {
    Assignment q{p.p1, p.p2, {}};
    std::uint64_t rest = index;
    for (Obj o : p.unallocated) {
      switch (rest % 3) {
        case 1: q.p1.push_back(o); break;
        case 2: q.p2.push_back(o); break;
        default: q.unallocated.push_back(o); break;
      }
      rest /= 3;
    }
    if (is_ef(profile, q)) return false;
  }
  return true;
}

bool oracle_no_ef_dominator(const Profile& profile, const Assignment& p,
                            const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  const std::uint64_t total = checked_pow(3, m, budget);
  for (std::uint64_t index = 0; index < total; ++index) {
    const Assignment q = assignment_from_index(m, index);
    if (is_ef(profile, q) && pareto_dominates(profile, q, p)) return false;
  }
  return true;
}

bool oracle_is_lpo(const Profile& profile, const Assignment& p, const OracleBudget& budget) {
  const auto m = static_cast<std::uint32_t>(profile.num_objects());
  check_objects(m, budget);
  std::vector<Obj> support(p.p1);
  support.insert(support.end(), p.p2.begin(), p.p2.end());
  std::sort(support.begin(), support.end());
  const std::uint64_t total =
      checked_pow(2, static_cast<std::uint32_t>(support.size()), budget);
  for (std::uint64_t index = 0; index < total; ++index) {
    Assignment q;
    q.unallocated = p.unallocated;
    for (std::size_t i = 0; i < support.size(); ++i) {
      ((index >> i) & 1 ? q.p2 : q.p1).push_back(support[i]);
    }
    if (pareto_dominates(profile, q, p)) return false;
  }
  return true;
}

}  // namespace serial

}  // namespace galloc
