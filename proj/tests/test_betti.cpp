#include <doctest.h>

#include "lexpow/betti.hpp"
#include "lexpow/errors.hpp"
#include "lexpow/generators.hpp"
#include "lexpow/hilbert.hpp"
#include "lexpow/lex.hpp"
#include "lexpow/lpp.hpp"
#include "oracles.hpp"

using namespace lexpow;

namespace {

Monomial m(std::vector<int> exps) { return Monomial(std::move(exps)); }

BettiTable table_of(TableConvention conv, int n,
                    std::vector<std::tuple<int, int, long long>> entries) {
  BettiTable t(conv, n);
  for (const auto& [i, j, b] : entries) t.add(i, j, b);
  return t;
}

}  // namespace

TEST_CASE("is_stable distinguishes the classical examples") {
  CHECK(is_stable(normalize({m({2, 0}), m({1, 1}), m({0, 2})}, 2)));
  CHECK_FALSE(is_stable(normalize({m({0, 2})}, 2)));
  // Constructed lex ideals are stable.
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal source = random_ideal_over(rng, MonomialIdeal::zero(n), 5, 4);
    HilbertFunction h = hilbert_function(source, 7);
    CHECK(is_stable(lex_ideal_from_hf(h, 7)));
  }
}

TEST_CASE("ek_betti on Koszul-sized inputs") {
  BettiTable koszul2 = ek_betti(normalize({m({1, 0}), m({0, 1})}, 2));
  CHECK(koszul2 == table_of(TableConvention::of_ideal, 2, {{0, 1, 2}, {1, 2, 1}}));

  BettiTable square = ek_betti(normalize({m({2, 0}), m({1, 1}), m({0, 2})}, 2));
  CHECK(square == table_of(TableConvention::of_ideal, 2, {{0, 2, 3}, {1, 3, 2}}));

  CHECK_THROWS_AS(ek_betti(normalize({m({0, 2})}, 2)), Error);
}

TEST_CASE("koszul_betti on complete intersections and the triangle") {
  BettiTable ci = koszul_betti(power_ideal(DegreeSequence({2, 3})));
  CHECK(ci == table_of(TableConvention::of_ideal, 2, {{0, 2, 1}, {0, 3, 1}, {1, 5, 1}}));

  BettiTable triangle =
      koszul_betti(normalize({m({1, 1, 0}), m({0, 1, 1}), m({1, 0, 1})}, 3));
  CHECK(triangle == table_of(TableConvention::of_ideal, 3, {{0, 2, 3}, {1, 3, 2}}));

  BettiTable square = koszul_betti(normalize({m({2, 0}), m({1, 1}), m({0, 2})}, 2));
  CHECK(square == ek_betti(normalize({m({2, 0}), m({1, 1}), m({0, 2})}, 2)));

  CHECK(koszul_betti(MonomialIdeal::unit(2)) ==
        table_of(TableConvention::of_ideal, 2, {{0, 0, 1}}));
  CHECK_THROWS_AS(koszul_betti(MonomialIdeal::zero(2)), Error);
}

TEST_CASE("koszul_betti honors the lattice cap") {
  KoszulOptions tiny;
  tiny.lattice_cap = 2;
  MonomialIdeal triangle = normalize({m({1, 1, 0}), m({0, 1, 1}), m({1, 0, 1})}, 3);
  CHECK_THROWS_AS(koszul_betti(triangle, tiny), Error);
}

TEST_CASE("vbetti sums shifted Koszul resolutions") {
  CHECK(vbetti({{0, 1}}, 2) ==
        table_of(TableConvention::of_module, 2, {{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  CHECK(vbetti({{3, 2}}, 1) ==
        table_of(TableConvention::of_module, 1, {{0, 3, 2}, {1, 4, 2}}));
  CHECK(vbetti({{1, 1}, {2, 1}}, 2) ==
        table_of(TableConvention::of_module, 2,
                 {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}, {1, 3, 2}, {2, 3, 1}, {2, 4, 1}}));
}

TEST_CASE("spp_betti base cases") {
  DegreeSequence d22({2, 2});
  BettiTable ci = spp_betti(power_ideal(d22), d22);
  CHECK(ci == table_of(TableConvention::of_ideal, 2, {{0, 2, 2}, {1, 4, 1}}));

  CHECK_THROWS_AS(spp_betti(normalize({m({3, 0}), m({0, 2})}, 2), d22), Error);
  CHECK_THROWS_AS(spp_betti(power_ideal(d22),
                            DegreeSequence({2, DegreeSequence::kInfinity})),
                  Error);
}

TEST_CASE("spp_betti agrees with the oracle on exhaustive two-variable SPP ideals") {
  for (const DegreeSequence& d :
       {DegreeSequence({2, 2}), DegreeSequence({2, 3}), DegreeSequence({3, 3})}) {
    for (const MonomialIdeal& ideal : enumerate_ideals_containing(power_ideal(d))) {
      if (!is_spp(ideal, d)) continue;
      BettiTable recursive = spp_betti(ideal, d);
      BettiTable oracle = koszul_betti(ideal);
      CHECK(recursive == oracle);

      // Subadditivity of the assembled decomposition: each of the three
      // summands stays entrywise below the total.
      const int dn = static_cast<int>(d.last());
      XnDecomposition parts = decompose(ideal, dn - 1);
      BettiTable first =
          parts.component(0).is_zero()
              ? BettiTable(TableConvention::of_ideal, 1)
              : koszul_betti(parts.component(0));
      for (const auto& [key, value] : first.entries()) {
        CHECK(value <= recursive.at(key.first, key.second));
      }
    }
  }
}

TEST_CASE("quotient conversion and the Euler identity") {
  MonomialIdeal ci = power_ideal(DegreeSequence({2, 2}));
  BettiTable q = quotient_table(koszul_betti(ci));
  CHECK(q == table_of(TableConvention::of_quotient, 2, {{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  CHECK(euler_identity_holds(q, ci));

  CHECK(quotient_table(BettiTable(TableConvention::of_ideal, 2), /*ideal_is_unit=*/true).empty());

  Rng rng(300);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal ideal = random_ideal_over(rng, MonomialIdeal::zero(n), 5, 4);
    if (ideal.is_zero()) continue;
    CHECK(euler_identity_holds(quotient_table(koszul_betti(ideal), ideal.is_unit()), ideal));
  }
}

TEST_CASE("vbetti dominates the quotient Betti numbers of Artinian quotients") {
  Rng rng(777);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.below(2));
    std::vector<long long> entries(static_cast<std::size_t>(n),
                                   2 + static_cast<long long>(rng.below(2)));
    DegreeSequence d(entries);
    MonomialIdeal ideal = random_ideal_over(rng, power_ideal(d), 3, 3);
    BettiTable module_table =
        quotient_table(koszul_betti(ideal), ideal.is_unit());
    HilbertFunction h = hilbert_function(ideal, static_cast<int>(d.socle_degree()));
    GradedVectorSpaceHF support;
    for (int j = 0; j < static_cast<int>(h.values().size()); ++j) {
      if (h.value(j) > 0) support[j] = h.value(j);
    }
    BettiTable bound = vbetti(support, n);
    for (const auto& [key, value] : module_table.entries()) {
      CHECK(value <= bound.at(key.first, key.second));
    }
  }
}

TEST_CASE("format_table prints the Macaulay grid") {
  BettiTable koszul2 = ek_betti(normalize({m({1, 0}), m({0, 1})}, 2));
  CHECK(format_table(koszul2) == "    0  1\n1:  2  1\n");

  BettiTable with_gap = table_of(TableConvention::of_ideal, 2, {{0, 2, 2}, {1, 5, 12}});
  CHECK(format_table(with_gap) == "     0   1\n2:   2   -\n3:   -   -\n4:   -  12\n");

  CHECK(format_table(BettiTable(TableConvention::of_ideal, 2)) == "    0\n");
}
