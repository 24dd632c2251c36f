#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "lexpow/degree_sequence.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

enum class TableConvention { of_ideal, of_quotient, of_module };

// A finitely supported map (homological degree i, internal degree j) -> count.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  BettiTable(TableConvention convention, int n) : convention_(convention), n_(n) {}

  TableConvention convention() const { return convention_; }
  int vars() const { return n_; }
  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  long long at(int i, int j) const;
  void add(int i, int j, long long count);

  int max_homological_degree() const;  // -1 when empty
  int min_row() const;                 // min j-i; 0 when empty
  int max_row() const;                 // max j-i; -1 when empty
  int max_internal_degree() const;     // max j; -1 when empty

  // Entrywise sum, ignoring convention tags (used to assemble decompositions).
  void accumulate(const BettiTable& other);
  // Same table with every internal degree shifted by s (a twist by -s).
  BettiTable shifted(int s) const;

  bool operator==(const BettiTable& other) const = default;

 private:
  TableConvention convention_;
  int n_;
  std::map<Key, long long> entries_;  // nonzero entries only
};

// beta_{i,j}(S/I) from beta_{i,j}(I): shift the homological degree and add the
// rank-one free cover. The unit ideal gives the zero module (empty table).
BettiTable quotient_table(const BettiTable& ideal_table, bool ideal_is_unit = false);

// Classical stability: for every minimal generator u and every i < max(u),
// x_i * u / x_{max(u)} lies in the ideal (the Eliahou-Kervaire hypothesis;
// strictly stronger than x_n-stability).
bool is_stable(const MonomialIdeal& ideal);

// Eliahou-Kervaire closed form for stable ideals:
// beta_{i, deg(u)+i}(I) = sum over generators u of C(max(u)-1, i).
BettiTable ek_betti(const MonomialIdeal& ideal);

struct KoszulOptions {
  std::size_t lattice_cap = std::size_t{1} << 16;
};

// Multigraded oracle for arbitrary nonzero monomial ideals: beta_{i,b}(I) is
// the rank of the (i-1)-st reduced homology of the upper Koszul complex
// { squarefree sigma : x^{b-sigma} in I } at each lcm-lattice multidegree b,
// computed over the rationals by exact integer elimination.
BettiTable koszul_betti(const MonomialIdeal& ideal, const KoszulOptions& options = {});

// The Hilbert function of a finite-length graded vector space.
using GradedVectorSpaceHF = std::map<int, long long>;

// Betti table of V(M) over a polynomial ring in m variables:
// beta_{i, a+i} = sum_a h_a * C(m, i) (shifted Koszul resolutions of k).
BettiTable vbetti(const GradedVectorSpaceHF& hf, int m);

// beta^S(I) for a d-SPP ideal with d_n finite, via the x_n-decomposition:
// beta^S(I) = beta^S̄(I_0) + beta^S̄(V(⊕_{h=1}^{d_n-1} I_h/I_{h-1}(-h)))
//           + beta^S̄(S̄/I_{d_n-1}(-d_n)).
// Components recurse while they stay SPP for the truncated sequence, else fall
// back to the Koszul oracle; base case n = 1 is the principal ideal.
BettiTable spp_betti(const MonomialIdeal& ideal, const DegreeSequence& d,
                     const KoszulOptions& options = {});

// Macaulay-notation grid: beta_{i,j} in column i, row j-i, '-' for zero.
std::string format_table(const BettiTable& table);

// Coefficientwise check of sum_i (-1)^i beta_{i,j} t^j = HS(S/I) * (1-t)^n up
// to the table's maximal internal degree; expects an of-quotient table.
bool euler_identity_holds(const BettiTable& table, const MonomialIdeal& ideal);

}  // namespace lexpow
