#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace galloc {

// 0-based object position; the canonical 1-based index shown to users is pos + 1.
using Obj = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance/assignment input. The message names the offending
// line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an oracle would exceed its enumeration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

enum class CompareResult { Better, Equal, Worse };

/**
 * A weak order over objects 0..m-1, stored as ordered equivalence classes,
 * most preferred first. Class ranks are precomputed per object so single
 * comparisons are O(1).
 */
class WeakOrder {
 public:
  // Validates that `classes` partitions {0..num_objects-1} with no empty class.
  WeakOrder(std::vector<std::vector<Obj>> classes, std::size_t num_objects);

  std::size_t num_objects() const { return rank_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<std::vector<Obj>>& classes() const { return classes_; }

  // 0-based index of the equivalence class containing o.
  std::uint32_t rank(Obj o) const;

  bool strict() const;  // every class a singleton

  bool prefers(Obj a, Obj b) const { return rank(a) < rank(b); }          // a > b
  bool weakly_prefers(Obj a, Obj b) const { return rank(a) <= rank(b); }  // a >= b
  bool indifferent(Obj a, Obj b) const { return rank(a) == rank(b); }

  bool operator==(const WeakOrder& other) const { return classes_ == other.classes_; }

 private:
  std::vector<std::vector<Obj>> classes_;
  std::vector<std::uint32_t> rank_;
};

CompareResult compare(const WeakOrder& order, Obj a, Obj b);

/// Two agents' weak orders over a common, canonically indexed object set.
struct Profile {
  std::vector<std::string> labels;  // canonical order = order of appearance in the instance
  WeakOrder pref1;
  WeakOrder pref2;

  std::size_t num_objects() const { return labels.size(); }
  const WeakOrder& pref(int agent) const;  // agent in {1, 2}
  const std::string& label(Obj o) const { return labels.at(o); }
  Obj object_by_label(const std::string& label) const;  // ParseError if unknown

  bool operator==(const Profile& other) const = default;
};

// Validates label uniqueness and that both orders cover the same m objects.
Profile make_profile(std::vector<std::string> labels,
                     std::vector<std::vector<Obj>> classes1,
                     std::vector<std::vector<Obj>> classes2);

/**
 * A strict total order over all objects, highest priority first. Refines the
 * owner's weak order; ties broken toward objects the other agent likes less,
 * then by canonical index (ascending for agent 1, descending for agent 2).
 */
struct PriorityOrder {
  int agent = 1;
  std::vector<Obj> sequence;

  bool operator==(const PriorityOrder& other) const = default;
};

PriorityOrder build_priority_order(const Profile& profile, int agent);

// Instance deserialization. Accepts the JSON instance format and the
// one-line-per-agent text form; serialization always emits JSON.
// Round trip: parse_profile(serialize_profile(p)) == p.
Profile parse_profile(const std::string& text);
std::string serialize_profile(const Profile& profile);

}  // namespace galloc
