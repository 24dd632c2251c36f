#pragma once

#include "lexpow/errors.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow::detail {

// Shared construction for lex_ideal_from_hf and lpp_from_hf: degree by degree,
// extend `base` (the zero ideal for pure lex, the power ideal for LPP) with
// the minimal lex segment whose union with the span so far has the dimension
// prescribed by h. pure_lex additionally demands the span itself stay inside
// the segment, so the result is exactly a lex ideal. Failures are reported
// with `infeasible` naming the first failing degree; declared zero/constant
// tails are checked at degree_bound + 1.
MonomialIdeal build_segment_ideal(const HilbertFunction& h, int degree_bound,
                                  const MonomialIdeal& base, bool pure_lex, Errc infeasible);

}  // namespace lexpow::detail
