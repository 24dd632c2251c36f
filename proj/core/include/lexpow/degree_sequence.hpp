#pragma once

#include <limits>
#include <string>
#include <vector>

namespace lexpow {

// A weakly increasing vector d_1 <= ... <= d_n of positive integers or
// infinity, prescribing the pure powers x_i^{d_i} (x_i^inf contributes
// nothing). Weak monotonicity forces infinite entries to form a tail.
class DegreeSequence {
 public:
  static constexpr long long kInfinity = std::numeric_limits<long long>::max();

  explicit DegreeSequence(std::vector<long long> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  long long entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<long long>& entries() const { return entries_; }
  bool is_finite(int i) const { return entries_[static_cast<std::size_t>(i)] != kInfinity; }
  bool all_finite() const;
  long long last() const { return entries_.back(); }

  // s = sum(d_i) - n; requires all entries finite.
  long long socle_degree() const;
  long long max_finite_entry() const;  // 0 when every entry is infinite

  // d̄ = (d_1, ..., d_{n-1}).
  DegreeSequence truncated() const;

  // Entrywise d_i <= e_i (sizes must match).
  bool entrywise_leq(const DegreeSequence& other) const;

  // d_i >= sum_{j<i}(d_j - 1) + 1 for all i >= 3 (the growth hypothesis;
  // recorded in reports, never enforced).
  bool grows_quickly() const;

  std::string str() const;  // "4,4,8" or "3,3,inf"

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<long long> entries_;
};

}  // namespace lexpow
