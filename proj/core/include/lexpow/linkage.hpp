#pragma once

#include <string>
#include <vector>

#include "lexpow/degree_sequence.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

// J = ℘ : I, the direct link of I via the pure-power complete intersection of
// d. Requires all d_i finite and ℘ ⊊ I ⊊ S strictly (containment_violation
// otherwise); double linking is an involution on this class.
MonomialIdeal link(const MonomialIdeal& ideal, const DegreeSequence& d);

// The Hilbert function of any direct link of an ideal with quotient Hilbert
// function h: j -> HF(S/℘; s-j) - h_{s-j} with s the socle degree of ℘.
HilbertFunction linked_hf(const HilbertFunction& h, const DegreeSequence& d);

struct Prop32Report {
  // Component identity J_i = ℘̄ : I_{d_n-i-1} for 0 <= i <= d_n - 1.
  std::vector<bool> component_identity;
  bool spp_of_ideal = false;
  bool spp_of_link = false;
  bool lpp_of_ideal = false;
  bool lpp_of_link = false;

  bool components_ok() const;
  bool spp_biconditional_ok() const { return spp_of_ideal == spp_of_link; }
  bool lpp_biconditional_ok() const { return lpp_of_ideal == lpp_of_link; }
  bool passed() const;
};

// Computes J = link(I, d) and verifies the component identity and the SPP/LPP
// biconditionals, each side evaluated independently.
Prop32Report check_prop32(const MonomialIdeal& ideal, const DegreeSequence& d);

}  // namespace lexpow
