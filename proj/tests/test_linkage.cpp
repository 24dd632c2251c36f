#include <doctest.h>

#include "lexpow/errors.hpp"
#include "lexpow/generators.hpp"
#include "lexpow/linkage.hpp"
#include "lexpow/lpp.hpp"
#include "oracles.hpp"

using namespace lexpow;

namespace {

Monomial m(std::vector<int> exps) { return Monomial(std::move(exps)); }

}  // namespace

TEST_CASE("link of the small worked examples") {
  DegreeSequence d22({2, 2});
  MonomialIdeal self_linked = normalize({m({1, 0}), m({0, 2})}, 2);
  CHECK(link(self_linked, d22) == self_linked);

  MonomialIdeal max_ideal = normalize({m({1, 0}), m({0, 1})}, 2);
  CHECK(link(max_ideal, d22) == normalize({m({2, 0}), m({1, 1}), m({0, 2})}, 2));

  CHECK(link(normalize({m({1})}, 1), DegreeSequence({2})) == normalize({m({1})}, 1));
}

TEST_CASE("link agrees with brute-force colon membership") {
  DegreeSequence d({2, 3});
  MonomialIdeal power = power_ideal(d);
  for (const MonomialIdeal& ideal : enumerate_ideals_containing(power, /*include_unit=*/false)) {
    if (ideal == power) continue;
    MonomialIdeal linked = link(ideal, d);
    for (const Monomial& witness : testing::colon_bruteforce(power, ideal, 5)) {
      CHECK(contains(linked, witness));
    }
    for (int j = 0; j <= 5; ++j) {
      for (const Monomial& candidate : monomials_of_degree(2, j)) {
        if (!contains(linked, candidate)) continue;
        for (const Monomial& g : ideal.gens()) CHECK(contains(power, candidate.times(g)));
      }
    }
  }
}

TEST_CASE("link rejects violated strictness") {
  DegreeSequence d({2, 2});
  CHECK_THROWS_AS(link(power_ideal(d), d), Error);                       // I = ℘
  CHECK_THROWS_AS(link(normalize({m({3, 0}), m({0, 2})}, 2), d), Error); // ℘ ⊄ I
  CHECK_THROWS_AS(link(MonomialIdeal::unit(2), d), Error);               // I = S
  CHECK_THROWS_AS(link(normalize({m({1, 0}), m({0, 1})}, 2),
                       DegreeSequence({2, DegreeSequence::kInfinity})),
                  Error);  // infinite entry
}

TEST_CASE("linked_hf mirrors the worked values") {
  DegreeSequence d22({2, 2});
  HilbertFunction h(HFConvention::of_quotient, 2, {1, 1, 0}, Tail::zero());
  CHECK(linked_hf(h, d22).values() == std::vector<long long>{1, 1, 0});

  HilbertFunction point(HFConvention::of_quotient, 2, {1, 0, 0}, Tail::zero());
  CHECK(linked_hf(point, d22).values() == std::vector<long long>{1, 2, 0});

  HilbertFunction line(HFConvention::of_quotient, 1, {1, 0}, Tail::zero());
  CHECK(linked_hf(line, DegreeSequence({2})).values() == std::vector<long long>{1, 0});

  HilbertFunction toobig(HFConvention::of_quotient, 2, {1, 2, 3}, Tail::unspecified());
  CHECK_THROWS_AS(linked_hf(toobig, d22), Error);
}

TEST_CASE("check_prop32 on the worked instances") {
  DegreeSequence d22({2, 2});
  Prop32Report report = check_prop32(normalize({m({1, 0}), m({0, 1})}, 2), d22);
  CHECK(report.passed());
  CHECK(report.lpp_of_ideal);
  CHECK(report.lpp_of_link);

  // LPP ideal of h=(1,2,1,0) w.r.t. (2,3) stays LPP after linking.
  DegreeSequence d23({2, 3});
  HilbertFunction h(HFConvention::of_quotient, 2, {1, 2, 1, 0}, Tail::zero());
  MonomialIdeal lpp = lpp_from_hf(h, d23, 3);
  Prop32Report lpp_report = check_prop32(lpp, d23);
  CHECK(lpp_report.passed());
  CHECK(lpp_report.lpp_of_link);

  Prop32Report self_report = check_prop32(normalize({m({1, 0}), m({0, 2})}, 2), d22);
  CHECK(self_report.passed());
}

TEST_CASE("linkage involution and Hilbert identity under fuzz") {
  Rng rng(8080);
  const std::vector<DegreeSequence> sequences = {
      DegreeSequence({2, 2}), DegreeSequence({2, 3}), DegreeSequence({3, 3}),
      DegreeSequence({2, 2, 2}), DegreeSequence({2, 3, 4})};
  for (const DegreeSequence& d : sequences) {
    const MonomialIdeal power = power_ideal(d);
    const int socle = static_cast<int>(d.socle_degree());
    for (int t = 0; t < 40; ++t) {
      MonomialIdeal ideal = random_ideal_over(rng, power, socle, 4);
      if (ideal == power || ideal.is_unit()) continue;
      MonomialIdeal linked = link(ideal, d);
      CHECK(contains_ideal(linked, power));
      CHECK_FALSE(linked.is_unit());
      CHECK(link(linked, d) == ideal);
      CHECK(hilbert_function(linked, socle).values() ==
            linked_hf(hilbert_function(ideal, socle), d).values());
      CHECK(is_spp(ideal, d) == is_spp(linked, d));
      CHECK(is_lpp(ideal, d) == is_lpp(linked, d));
    }
  }
}
