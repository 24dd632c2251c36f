#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexpow/betti.hpp"
#include "lexpow/degree_sequence.hpp"
#include "lexpow/ideal.hpp"

namespace lexpow {

struct Counterexample {
  std::string property;
  std::string ideal;    // canonical text of the offending instance
  std::string details;  // human-readable certificate (tables, witnesses, ...)
};

struct SuiteReport {
  std::string suite;
  long long checks = 0;
  long long passes = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty() && passes == checks; }
  // Pass counts plus full counterexample certificates, serialized.
  std::string to_json() const;
  std::string summary() const;
};

// Double-link involution, the linkage Hilbert identity at every degree, and
// the Prop. 3.2 component identity + SPP/LPP biconditionals, over
// trials_per_degree_sequence seeded random Artinian ideals per d.
SuiteReport run_linkage_suite(const std::vector<DegreeSequence>& degree_sequences,
                              int trials_per_degree_sequence, std::uint64_t seed);

// ek_betti == koszul_betti over every stable ideal in n <= max_exhaustive_n
// variables with generator degrees <= max_exhaustive_degree, plus
// random_trials seeded random stable ideals in random_n variables.
SuiteReport run_betti_oracle_suite(int max_exhaustive_n, int max_exhaustive_degree,
                                   int random_n, int random_trials, std::uint64_t seed,
                                   const KoszulOptions& options = {});

// spp_betti == koszul_betti over all d-SPP ideals for the exhaustive degree
// sequences, plus seeded random SPP ideals for the fuzz sequences.
SuiteReport run_spp_oracle_suite(const std::vector<DegreeSequence>& exhaustive,
                                 const std::vector<DegreeSequence>& fuzz, int fuzz_trials,
                                 std::uint64_t seed, const KoszulOptions& options = {});

// verify_main_theorem has no witnesses, and the LPP ideal attains the
// entrywise maximum number of generators per degree (the EGH extremal
// property) over every ideal with its Hilbert function. `exhaustive` runs the
// full enumeration for each d; fuzz runs seeded random instances.
SuiteReport run_main_theorem_suite(const std::vector<DegreeSequence>& exhaustive,
                                   const std::vector<DegreeSequence>& fuzz, int fuzz_trials,
                                   std::uint64_t seed, bool check_egh = true,
                                   const KoszulOptions& options = {});

// The beta_0 extremality alone (EGH restated), exhaustively per d.
SuiteReport run_egh_suite(const std::vector<DegreeSequence>& degree_sequences);

// Betti-bound monotonicity in the degree sequence: for nested finite d <= e
// over small exhaustive instances, and for the bundled reference case with
// its two infinite sequences, lpp_bound(d) <= lpp_bound(e) <= bhp_bound.
SuiteReport run_monotonicity_suite();

}  // namespace lexpow
