#include <doctest.h>

#include "lexpow/errors.hpp"
#include "lexpow/generators.hpp"
#include "lexpow/lex.hpp"
#include "oracles.hpp"

using namespace lexpow;

namespace {

Monomial m(std::vector<int> exps) { return Monomial(std::move(exps)); }

HilbertFunction quotient_hf(int n, std::vector<long long> values,
                            Tail tail = Tail::unspecified()) {
  return HilbertFunction(HFConvention::of_quotient, n, std::move(values), tail);
}

}  // namespace

TEST_CASE("lex_compare orders by the first differing exponent") {
  CHECK(lex_greater(m({2, 0}), m({1, 1})));
  CHECK(lex_greater(m({1, 0, 1}), m({0, 2, 0})));
  CHECK(lex_compare(m({1, 2}), m({1, 2})) == std::strong_ordering::equal);
}

TEST_CASE("lex_segment takes the lex-largest monomials") {
  CHECK(lex_segment(2, 2, 2) == std::vector<Monomial>{m({2, 0}), m({1, 1})});
  CHECK(lex_segment(2, 0, 3).empty());
  CHECK(lex_segment(2, 2, 3) == std::vector<Monomial>{m({2, 0, 0}), m({1, 1, 0})});
  CHECK_THROWS_AS(lex_segment(2, 7, 3), Error);
}

TEST_CASE("macaulay_growth matches lex-segment enumeration") {
  // The segment oracle stabilizes once there are enough variables.
  CHECK(testing::growth_by_segment_enumeration(3, 1, 3) == 6);
  CHECK(testing::growth_by_segment_enumeration(3, 1, 4) == 6);
  CHECK(testing::growth_by_segment_enumeration(3, 1, 5) == 6);
  CHECK(macaulay_growth(3, 1) == 6);

  CHECK(testing::growth_by_segment_enumeration(6, 2, 3) == 10);
  CHECK(testing::growth_by_segment_enumeration(6, 2, 4) == 10);
  CHECK(testing::growth_by_segment_enumeration(6, 2, 5) == 10);
  CHECK(macaulay_growth(6, 2) == 10);

  for (int j = 1; j <= 4; ++j) CHECK(macaulay_growth(1, j) == 1);
  CHECK(macaulay_growth(0, 3) == 0);

  for (long long a = 0; a <= 25; ++a) {
    for (int j = 1; j <= 4; ++j) {
      long long best = 0;
      for (int n = 2; n <= 8; ++n) {
        best = std::max(best, testing::growth_by_segment_enumeration(a, j, n));
      }
      if (a <= count_monomials(8, j)) CHECK(macaulay_growth(a, j) == best);
    }
  }
}

TEST_CASE("lex_ideal_from_hf reproduces the classic small example") {
  MonomialIdeal lex = lex_ideal_from_hf(quotient_hf(2, {1, 2, 1, 0}), 3);
  CHECK(lex == normalize({m({2, 0}), m({1, 1}), m({0, 3})}, 2));

  MonomialIdeal free_ring = lex_ideal_from_hf(quotient_hf(2, {1, 2, 3, 4}), 3);
  CHECK(free_ring.is_zero());
}

TEST_CASE("lex_ideal_from_hf rejects infeasible growth") {
  // h_1 = 2 allows h_2 at most 3 in two variables.
  CHECK_THROWS_AS(lex_ideal_from_hf(quotient_hf(2, {1, 2, 1, 2}), 3), Error);
  // Growth sharpness: the Macaulay bound itself is feasible, one more is not.
  for (long long a = 1; a <= 6; ++a) {
    const long long bound = macaulay_growth(a, 2);
    std::vector<long long> ok{1, 3, a, bound};
    std::vector<long long> broken{1, 3, a, bound + 1};
    CHECK_NOTHROW(lex_ideal_from_hf(quotient_hf(3, ok), 3));
    CHECK_THROWS_AS(lex_ideal_from_hf(quotient_hf(3, broken), 3), Error);
  }
}

TEST_CASE("declared tails demand a complete window") {
  // (1,2,1) with a zero tail needs the degree-3 generator x2^3: window too small.
  CHECK_THROWS_AS(lex_ideal_from_hf(quotient_hf(2, {1, 2, 1}, Tail::zero()), 2), Error);
  CHECK_NOTHROW(lex_ideal_from_hf(quotient_hf(2, {1, 2, 1, 0}, Tail::zero()), 3));
  // Constant tails work once the ideal has stabilized.
  MonomialIdeal line = lex_ideal_from_hf(quotient_hf(2, {1, 2, 1, 1}, Tail::constant(1)), 3);
  CHECK(line == normalize({m({2, 0}), m({1, 1})}, 2));
}

TEST_CASE("lex ideals roundtrip their Hilbert functions") {
  Rng rng(424242);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal source = random_ideal_over(rng, MonomialIdeal::zero(n), 5, 4);
    const int window = 8;
    HilbertFunction h = hilbert_function(source, window);
    MonomialIdeal lex = lex_ideal_from_hf(h, window);
    CHECK(hilbert_function(lex, window).values() == h.values());

    // Lex property: within each degree the ideal is an initial segment.
    for (int j = 0; j <= window; ++j) {
      bool seen_gap = false;
      for (const Monomial& mon : monomials_of_degree(n, j)) {
        const bool inside = contains(lex, mon);
        if (!inside) seen_gap = true;
        if (seen_gap) CHECK_FALSE(inside);
      }
    }
    // Every constructed lex ideal is stable in the classical sense as well;
    // covered in the betti tests via ek/koszul agreement.
  }
}
