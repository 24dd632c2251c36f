#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lexpow/degree_sequence.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

// Seeded, reproducible randomness. Raw mt19937_64 output is reduced by
// modulus rather than through std distributions, which are not portable
// across standard libraries; identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

// Uniform over the degree-j monomials in n variables (by unranking the
// lex-descending enumeration).
Monomial random_monomial(Rng& rng, int n, int degree);

// base, plus between 1 and max_extra_gens random monomials of degree in
// [1, max_degree], renormalized after each addition.
MonomialIdeal random_ideal_over(Rng& rng, const MonomialIdeal& base, int max_degree,
                                int max_extra_gens);

// Smallest stable (resp. x_n-stable) ideal containing the input: repeatedly
// adds the missing exchange monomials x_i*u/x_{max(u)} (resp. x_i*u/x_n, with
// the x_n-exponent capped below dn) until closed. Exchanges preserve degree
// and increase lex order, so the process terminates.
MonomialIdeal stable_closure(const MonomialIdeal& ideal);
MonomialIdeal spp_closure(const MonomialIdeal& ideal, long long dn);

// All stable ideals in n variables whose minimal generators have degree at
// most max_gen_degree (including the zero and unit ideals), enumerated
// degree-slice by degree-slice in deterministic order.
std::vector<MonomialIdeal> enumerate_stable_ideals(int n, int max_gen_degree);

// All monomial ideals containing `power` (which must be Artinian), i.e. all
// upward-closed selections of its standard monomials. include_unit controls
// whether the unit ideal is emitted.
std::vector<MonomialIdeal> enumerate_ideals_containing(const MonomialIdeal& power,
                                                       bool include_unit = true);

}  // namespace lexpow
