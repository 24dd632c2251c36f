#pragma once

#include <string>
#include <vector>

#include "lexpow/degree_sequence.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

// The monomial complete intersection (x_1^{d_1}, ..., x_n^{d_n}); infinite
// entries contribute nothing.
MonomialIdeal power_ideal(const DegreeSequence& d);

// The unique splitting I = I_0 ⊕ I_1 x_n ⊕ I_2 x_n^2 ⊕ ... with I_h an ideal
// in n-1 variables and I_{h-1} ⊆ I_h.
struct XnDecomposition {
  std::vector<MonomialIdeal> components;  // indices 0..H

  const MonomialIdeal& component(int h) const {
    return components[static_cast<std::size_t>(h)];
  }
  int bound() const { return static_cast<int>(components.size()) - 1; }
};

XnDecomposition decompose(const MonomialIdeal& ideal, int index_bound);

// For every generator u divisible by x_n and every i < n, x_i*u/x_n lies in
// the ideal. Checking generators suffices: a general element is m*u for a
// generator u, and x_i*(m*u)/x_n is a multiple of either x_i*u/x_n (when x_n
// divides u) or of u itself (when x_n divides m).
bool is_xn_stable(const MonomialIdeal& ideal);

// ℘ ⊆ I and m_S̄ I_h ⊆ I_{h-1} for 0 < h < d_n; for d_n = inf the condition is
// checked up to the largest x_n-exponent among generators (= x_n-stability).
bool is_spp(const MonomialIdeal& ideal, const DegreeSequence& d);

// I = L + ℘ for some lex ideal L, decided by construct-then-verify: I is
// d-LPP iff it equals the unique d-LPP candidate with its Hilbert function.
bool is_lpp(const MonomialIdeal& ideal, const DegreeSequence& d);

// The unique d-LPP ideal with the given Hilbert function when it exists;
// uniqueness makes verification failure a proof of nonexistence, reported as
// Errc::nonexistence naming the first failing degree. Tail handling as in
// lex_ideal_from_hf.
MonomialIdeal lpp_from_hf(const HilbertFunction& h, const DegreeSequence& d, int degree_bound);

// One failed instance of the component-sum inequality.
struct Remark31Violation {
  std::size_t adversary_index;
  int i;
  int p;
  long long adversary_sum;
  long long lpp_sum;
};

struct Remark31Report {
  std::vector<std::string> precondition_violations;
  std::vector<Remark31Violation> violations;
  int component_window = 0;  // inequalities checked for 0 <= i <= component_window
  int degree_window = 0;     // and 0 <= p <= degree_window
  bool passed() const { return precondition_violations.empty() && violations.empty(); }
};

// Checks, against a d-LPP ideal L, that every d-SPP adversary with the same
// Hilbert function satisfies sum_{j<=i} HF(I_j; p-j) >= sum_{j<=i} HF(L_j; p-j)
// on the finite window. Precondition violations are itemized, not skipped.
Remark31Report check_remark31(const MonomialIdeal& lpp_ideal, const DegreeSequence& d,
                              const std::vector<MonomialIdeal>& adversaries);

}  // namespace lexpow
