#pragma once

#include <string>
#include <vector>

#include "lexpow/ideal.hpp"

namespace lexpow {

enum class HFConvention { of_ideal, of_quotient };

struct Tail {
  enum class Kind { zero, constant, unspecified } kind = Kind::unspecified;
  long long value = 0;  // meaningful for Kind::constant

  static Tail zero() { return {Kind::zero, 0}; }
  static Tail constant(long long c) { return {Kind::constant, c}; }
  static Tail unspecified() { return {Kind::unspecified, 0}; }
  bool operator==(const Tail&) const = default;
};

// Hilbert function values h_0..h_D on an explicit window, plus a declared tail
// mode governing degrees beyond D.
class HilbertFunction {
 public:
  HilbertFunction(HFConvention convention, int n, std::vector<long long> values, Tail tail);

  HFConvention convention() const { return convention_; }
  int vars() const { return n_; }
  int degree_bound() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<long long>& values() const { return values_; }
  const Tail& tail() const { return tail_; }

  // Value at j, extending past the window via the tail. Throws range for
  // j > degree_bound() with an unspecified tail, or j < 0.
  long long value(int j) const;

  bool operator==(const HilbertFunction& other) const = default;

 private:
  HFConvention convention_;
  int n_;
  std::vector<long long> values_;
  Tail tail_;
};

// h_j = #(degree-j monomials not in I) for 0 <= j <= degree_bound; tail is
// zero when I contains a power of every variable and the window reaches the
// socle bound of those powers, else unspecified.
HilbertFunction hilbert_function(const MonomialIdeal& ideal, int degree_bound);

// Smallest exponent e with x_i^e in I, for each variable; empty optional if none.
std::vector<std::optional<int>> pure_power_exponents(const MonomialIdeal& ideal);

}  // namespace lexpow
