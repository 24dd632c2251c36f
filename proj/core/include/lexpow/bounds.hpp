#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lexpow/betti.hpp"
#include "lexpow/degree_sequence.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

struct DominanceWitness {
  int i;
  int j;
  long long left;
  long long right;
};

enum class DominanceVerdict { equal, dominated, incomparable };

struct DominanceReport {
  DominanceVerdict verdict = DominanceVerdict::equal;
  std::vector<DominanceWitness> witnesses;  // entries where left > right
};

// Entrywise comparison left vs right; witnesses are exactly the entries where
// left exceeds right. Conventions and ambient n must match.
DominanceReport dominates(const BettiTable& left, const BettiTable& right);

// Bigatti-Hulett-Pardue bound: the Betti table of the lex ideal of h.
BettiTable bhp_bound(const HilbertFunction& h, int degree_bound);

// The Betti table of the d-LPP ideal of h. For d with infinite entries the
// table is computed from the minimal pure powers actually present when the
// ideal is Artinian, else by the Koszul oracle.
BettiTable lpp_bound(const HilbertFunction& h, const DegreeSequence& d, int degree_bound,
                     const KoszulOptions& options = {});

struct MainTheoremReport {
  DominanceReport dominance;
  bool degree_hypothesis_satisfied = false;  // recorded, never enforced
  MonomialIdeal lpp_ideal;
  BettiTable ideal_table{TableConvention::of_ideal, 0};
  BettiTable bound_table{TableConvention::of_ideal, 0};

  bool passed() const { return dominance.verdict != DominanceVerdict::incomparable; }
};

// beta(I) vs beta(L^d(I)) for a monomial ideal containing the power ideal of
// d; any witness is a counterexample certificate.
MainTheoremReport verify_main_theorem(const MonomialIdeal& ideal, const DegreeSequence& d,
                                      const KoszulOptions& options = {});

struct MinimalPowers {
  DegreeSequence degrees;              // sorted ascending
  std::vector<int> variable_order;     // variable_order[k] = 0-based variable of degrees[k]
};

// d_i = min{ e : x_i^e in I }, sorted ascending with the permutation recorded.
// Throws non_artinian naming the first variable with no pure power.
MinimalPowers minimal_power_sequence(const MonomialIdeal& ideal);

// Every monomial ideal I with ℘ ⊆ I and hilbert_function(I, degree_bound) = h,
// in canonical form, deterministic order, no duplicates. Requires d all
// finite; throws resource_limit (with the frontier count in the message) when
// the search exceeds `cap` emitted ideals.
void enumerate_ideals(const DegreeSequence& d, const HilbertFunction& h, int degree_bound,
                      std::size_t cap, const std::function<void(const MonomialIdeal&)>& visit);

std::vector<MonomialIdeal> enumerate_ideals(const DegreeSequence& d, const HilbertFunction& h,
                                            int degree_bound, std::size_t cap = std::size_t{1} << 20);

}  // namespace lexpow
