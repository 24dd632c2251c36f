#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexpow/monomial.hpp"

namespace lexpow {

// A monomial ideal in canonical form: the minimal generating set (no generator
// divides another), sorted in descending lex order. The zero ideal has no
// generators; the unit ideal is generated by the unit monomial. Equality of
// ideals is equality of canonical forms.
class MonomialIdeal {
 public:
  MonomialIdeal() : n_(0) {}
  explicit MonomialIdeal(int n) : n_(n) {}

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(int n);

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  int max_gen_degree() const;  // 0 for the zero ideal

  bool operator==(const MonomialIdeal& other) const = default;

  friend MonomialIdeal normalize(std::vector<Monomial> gens, int n);

 private:
  int n_;
  std::vector<Monomial> gens_;  // canonical: minimal, lex-descending
};

// Canonical form: removes divisible (redundant) generators and duplicates,
// sorts lex-descending. Idempotent. Throws malformed_input on mixed lengths.
MonomialIdeal normalize(std::vector<Monomial> gens, int n);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
// J ⊆ I, decided on generators.
bool contains_ideal(const MonomialIdeal& ideal, const MonomialIdeal& sub);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// I : g for a single monomial g.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g);
// I : J = ∩_{g in gens(J)} (I : g). Throws undefined_colon for J = 0.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

// The degree-j monomials lying in the ideal, in descending lex order.
std::vector<Monomial> elements_of_degree(const MonomialIdeal& ideal, int j);
long long dim_of_degree(const MonomialIdeal& ideal, int j);

}  // namespace lexpow
