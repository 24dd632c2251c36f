#include <doctest.h>

#include "lexpow/errors.hpp"
#include "lexpow/generators.hpp"
#include "lexpow/io.hpp"

using namespace lexpow;

namespace {

Monomial m(std::vector<int> exps) { return Monomial(std::move(exps)); }

}  // namespace

TEST_CASE("ideal grammar parses terms, powers, and the empty list") {
  MonomialIdeal parsed = parse_ideal("ring n=3\nideal: x1^3*x2, x3^4\n");
  CHECK(parsed == normalize({m({3, 1, 0}), m({0, 0, 4})}, 3));

  CHECK(parse_ideal("ring n=2\nideal:").is_zero());
  CHECK(parse_ideal("ring n=2\nideal: 1").is_unit());
  CHECK(parse_ideal("  ring   n = 2\n ideal:  x1 , x2^2 ") ==
        normalize({m({1, 0}), m({0, 2})}, 2));

  CHECK_THROWS_AS(parse_ideal("ideal: x1"), Error);
  CHECK_THROWS_AS(parse_ideal("ring n=2\nideal: x3"), Error);
  CHECK_THROWS_AS(parse_ideal("ring n=2\nideal: y1"), Error);
  CHECK_THROWS_AS(parse_ideal("ring n=2\nideal: x1,,x2"), Error);
}

TEST_CASE("print/parse roundtrip on fuzzed canonical ideals") {
  Rng rng(606);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng.below(4));
    MonomialIdeal ideal = random_ideal_over(rng, MonomialIdeal::zero(n), 6, 5);
    CHECK(parse_ideal(print_ideal(ideal)) == ideal);
    CHECK(ideal_from_json(ideal_to_json(ideal)) == ideal);
  }
}

TEST_CASE("ideal JSON echo is canonical") {
  MonomialIdeal ideal = normalize({m({0, 2}), m({2, 0}), m({1, 1})}, 2);
  CHECK(ideal_to_json(ideal) == R"({"n":2,"gens":[[2,0],[1,1],[0,2]]})");
}

TEST_CASE("hilbert function syntax") {
  HilbertFunction h = parse_hf("1,3,6,10,12", "zero", 3);
  CHECK(h.values() == std::vector<long long>{1, 3, 6, 10, 12});
  CHECK(h.tail() == Tail::zero());
  CHECK(parse_hf("1,3,6", "const:6", 3).tail() == Tail::constant(6));
  CHECK(parse_hf("1,3", "open", 3).tail() == Tail::unspecified());
  CHECK_THROWS_AS(parse_hf("1,3", "sometimes", 3), Error);
  CHECK_THROWS_AS(parse_hf("1,x", "zero", 3), Error);
  // const tail must match the final window value
  CHECK_THROWS_AS(parse_hf("1,3,6", "const:7", 3), Error);
}

TEST_CASE("degree sequence syntax") {
  CHECK(parse_degrees("4,4,8") == DegreeSequence({4, 4, 8}));
  CHECK(parse_degrees("3,3,inf") ==
        DegreeSequence({3, 3, DegreeSequence::kInfinity}));
  CHECK(parse_degrees(" 2 , 3 ") == DegreeSequence({2, 3}));
  CHECK_THROWS_AS(parse_degrees("3,2"), Error);   // not weakly increasing
  CHECK_THROWS_AS(parse_degrees("0,1"), Error);   // entries must be positive
  CHECK_THROWS_AS(parse_degrees("inf,2"), Error); // infinity must trail
}

TEST_CASE("betti JSON is sorted by homological then internal degree") {
  BettiTable t(TableConvention::of_ideal, 2);
  t.add(1, 4, 1);
  t.add(0, 2, 2);
  t.add(0, 3, 1);
  CHECK(betti_to_json(t) ==
        R"({"convention":"ideal","entries":[{"i":0,"j":2,"b":2},{"i":0,"j":3,"b":1},{"i":1,"j":4,"b":1}]})");
}
