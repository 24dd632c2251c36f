#pragma once

// Test-only brute-force oracles, independent of the library's computation
// paths: membership is decided by exhaustive monomial enumeration only.

#include <algorithm>
#include <set>
#include <vector>

#include "lexpow/binomial.hpp"
#include "lexpow/ideal.hpp"
#include "lexpow/lex.hpp"
#include "lexpow/monomial.hpp"

namespace lexpow::testing {

// { m : deg(m) <= max_degree, m*g in I for every generator g of J },
// enumerated exhaustively.
inline std::vector<Monomial> colon_bruteforce(const MonomialIdeal& ideal,
                                              const MonomialIdeal& divisor, int max_degree) {
  std::vector<Monomial> out;
  for (int j = 0; j <= max_degree; ++j) {
    for (const Monomial& m : monomials_of_degree(ideal.vars(), j)) {
      bool all = true;
      for (const Monomial& g : divisor.gens()) {
        if (!contains(ideal, m.times(g))) {
          all = false;
          break;
        }
      }
      if (all) out.push_back(m);
    }
  }
  return out;
}

// Degree-by-degree membership agreement of two ideals up to max_degree.
inline bool agree_up_to_degree(const MonomialIdeal& a, const MonomialIdeal& b, int max_degree) {
  for (int j = 0; j <= max_degree; ++j) {
    for (const Monomial& m : monomials_of_degree(a.vars(), j)) {
      if (contains(a, m) != contains(b, m)) return false;
    }
  }
  return true;
}

// Maximal HF(S/I; j+1) over lex ideals in n variables with HF(S/I; j) = a,
// by materializing the lex segment and counting its shadow.
inline long long growth_by_segment_enumeration(long long a, int j, int n) {
  const long long full = count_monomials(n, j);
  if (a > full) return -1;  // not representable with this many variables
  std::vector<Monomial> segment = lex_segment(j, full - a, n);
  std::set<std::vector<int>> shadow;
  for (const Monomial& m : segment) {
    for (int i = 0; i < n; ++i) shadow.insert(m.times_variable(i).exponents());
  }
  return count_monomials(n, j + 1) - static_cast<long long>(shadow.size());
}

}  // namespace lexpow::testing
