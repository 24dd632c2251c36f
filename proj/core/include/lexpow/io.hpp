#pragma once

#include <string>
#include <string_view>

#include "lexpow/betti.hpp"
#include "lexpow/degree_sequence.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

// Ideal text grammar (UTF-8, whitespace-insensitive):
//   ring n=<int>
//   ideal: <term> (, <term>)*
// where <term> is `1` or `x<k>^<e>` factors joined by `*` (exponent 1 may be
// omitted). An empty list after `ideal:` denotes the zero ideal.
MonomialIdeal parse_ideal(std::string_view text);
std::string print_ideal(const MonomialIdeal& ideal);

// {"n": int, "gens": [[e1,...,en], ...]} with gens in canonical order.
std::string ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(std::string_view json_text);

// "1,3,6,10,12" plus tail spec "zero" | "const:<c>" | "open".
HilbertFunction parse_hf(std::string_view values_csv, std::string_view tail_spec, int n);
std::string print_hf(const HilbertFunction& h);

// "4,4,8" with "inf" allowed.
DegreeSequence parse_degrees(std::string_view csv);

// {"convention":"ideal","entries":[{"i":0,"j":4,"b":3},...]} sorted by (i, j).
std::string betti_to_json(const BettiTable& table);

}  // namespace lexpow
