#pragma once

#include <vector>

#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"
#include "lexpow/monomial.hpp"

namespace lexpow {

// The k lex-largest monomials of degree j in n variables.
struct LexSegment {
  int degree;
  long long count;
  int n;

  std::vector<Monomial> monomials() const;
};

std::vector<Monomial> lex_segment(int degree, long long count, int n);

// a^<j>: the maximal value of HF(S/I; j+1) given HF(S/I; j) = a, via the j-th
// Macaulay binomial representation. Exact internally; throws range if the
// result does not fit a long long.
long long macaulay_growth(long long a, int j);

// The unique lex ideal L with HF(S/L; j) = h_j on 0..degree_bound, built
// degree by degree from lex segments. For a declared zero/constant tail the
// window must already contain every minimal generator: degree D+1 is checked
// to contribute none. Errors: infeasible_hilbert naming the first failing
// degree; insufficient_bound when the tail check fails.
MonomialIdeal lex_ideal_from_hf(const HilbertFunction& h, int degree_bound);

}  // namespace lexpow
