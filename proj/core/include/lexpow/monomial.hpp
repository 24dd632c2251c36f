#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lexpow {

// A monomial in n variables, stored as its exponent vector. The ambient n is
// the vector length; n = 0 (the unit monomial of the ground field) is legal
// and shows up as the base case of the x_n-decomposition.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int n);
  // x_{index+1}^e as a monomial in n variables (index is 0-based).
  static Monomial variable(int index, int n, int e = 1);

  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exponent(int index) const { return exps_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_unit() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial times_variable(int index) const;
  // Exact division; caller guarantees divisibility.
  Monomial divided_by(const Monomial& other) const;
  // Coordinatewise max(a - b, 0): the generator of the colon by `other`.
  Monomial colon_by(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  Monomial gcd_with(const Monomial& other) const;

  // Largest 0-based variable index with positive exponent; -1 for the unit.
  int max_index() const;
  int last_exponent() const { return exps_.empty() ? 0 : exps_.back(); }

  // Drop the last variable (x_n-decomposition view in n-1 variables).
  Monomial strip_last() const;
  // Re-attach a last variable with exponent e.
  Monomial append_exponent(int e) const;

  bool operator==(const Monomial& other) const = default;

  std::string str() const;  // e.g. "x1^3*x2", "1"

 private:
  std::vector<int> exps_;
};

// Lexicographic order with x_1 > x_2 > ... > x_n: u > v iff at the first index
// where the exponents differ, u has the larger one. Total on a fixed n; used
// across degrees as a plain container order.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

inline bool lex_greater(const Monomial& u, const Monomial& v) {
  return lex_compare(u, v) == std::strong_ordering::greater;
}

// All degree-j monomials in n variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(int n, int j);

}  // namespace lexpow
