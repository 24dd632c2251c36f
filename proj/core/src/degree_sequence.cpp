#include "lexpow/degree_sequence.hpp"

#include <algorithm>

#include "lexpow/errors.hpp"

namespace lexpow {

DegreeSequence::DegreeSequence(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::malformed_input, "empty degree sequence");
  long long prev = 1;
  for (long long d : entries_) {
    if (d < 1) fail(Errc::range, "degree sequence entries must be positive");
    if (d < prev) fail(Errc::range, "degree sequence must be weakly increasing");
    prev = d;
  }
}

bool DegreeSequence::all_finite() const {
  return entries_.back() != kInfinity;  // infinite entries form a tail
}

long long DegreeSequence::socle_degree() const {
  if (!all_finite()) fail(Errc::range, "socle degree needs a finite degree sequence");
  long long s = 0;
  for (long long d : entries_) s += d - 1;
  return s;
}

long long DegreeSequence::max_finite_entry() const {
  long long best = 0;
  for (long long d : entries_) {
    if (d != kInfinity) best = std::max(best, d);
  }
  return best;
}

DegreeSequence DegreeSequence::truncated() const {
  if (entries_.size() < 2) fail(Errc::range, "cannot truncate a length-1 degree sequence");
  return DegreeSequence(std::vector<long long>(entries_.begin(), entries_.end() - 1));
}

bool DegreeSequence::entrywise_leq(const DegreeSequence& other) const {
  if (entries_.size() != other.entries_.size()) {
    fail(Errc::malformed_input, "degree sequence length mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

bool DegreeSequence::grows_quickly() const {
  long long partial = 0;  // sum_{j<i} (d_j - 1)
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i >= 2) {
      if (entries_[i] != kInfinity && entries_[i] < partial + 1) return false;
    }
    if (entries_[i] == kInfinity) break;  // the rest are infinite and trivially large
    partial += entries_[i] - 1;
  }
  return true;
}

std::string DegreeSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i] == kInfinity ? "inf" : std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace lexpow
