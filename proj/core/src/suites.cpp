#include "lexpow/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lexpow/bounds.hpp"
#include "lexpow/errors.hpp"
#include "lexpow/gallery.hpp"
#include "lexpow/generators.hpp"
#include "lexpow/io.hpp"
#include "lexpow/lex.hpp"
#include "lexpow/linkage.hpp"
#include "lexpow/lpp.hpp"

namespace lexpow {

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = checks;
  j["passes"] = passes;
  j["failures"] = checks - passes;
  j["counterexamples"] = nlohmann::json::array();
  for (const Counterexample& c : counterexamples) {
    nlohmann::ordered_json entry;
    entry["property"] = c.property;
    entry["ideal"] = c.ideal;
    entry["details"] = c.details;
    j["counterexamples"].push_back(entry);
  }
  return j.dump(2);
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << passes << "/" << checks << " checks passed";
  if (!counterexamples.empty()) os << ", " << counterexamples.size() << " counterexample(s)";
  return os.str();
}

namespace {

void record(SuiteReport& report, bool ok, const std::string& property,
            const MonomialIdeal& ideal, const std::string& details) {
  ++report.checks;
  if (ok) {
    ++report.passes;
  } else {
    report.counterexamples.push_back({property, print_ideal(ideal), details});
  }
}

std::string witness_text(const DominanceReport& report) {
  std::ostringstream os;
  for (const DominanceWitness& w : report.witnesses) {
    os << "beta(" << w.i << "," << w.j << "): " << w.left << " > " << w.right << "; ";
  }
  return os.str();
}

// Seeded instance strictly between the power ideal and the ring; retries are
// deterministic. Returns the power ideal itself if no superset shows up, and
// the caller skips that instance.
MonomialIdeal random_strict_superset(Rng& rng, const MonomialIdeal& power, int max_degree,
                                     int max_extra) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MonomialIdeal ideal = random_ideal_over(rng, power, max_degree, max_extra);
    if (!(ideal == power)) return ideal;
  }
  return power;
}

// beta_0 row read straight off the minimal generators.
std::map<int, long long> generator_degree_counts(const MonomialIdeal& ideal) {
  std::map<int, long long> counts;
  for (const Monomial& g : ideal.gens()) ++counts[g.degree()];
  return counts;
}

}  // namespace

SuiteReport run_linkage_suite(const std::vector<DegreeSequence>& degree_sequences,
                              int trials_per_degree_sequence, std::uint64_t seed) {
  SuiteReport report;
  report.suite = "linkage";
  Rng rng(seed);
  for (const DegreeSequence& d : degree_sequences) {
    const MonomialIdeal power = power_ideal(d);
    const int socle = static_cast<int>(d.socle_degree());
    for (int t = 0; t < trials_per_degree_sequence; ++t) {
      MonomialIdeal ideal = random_strict_superset(rng, power, std::max(socle, 1), 4);
      if (ideal == power || ideal.is_unit()) continue;

      MonomialIdeal linked = link(ideal, d);
      record(report, link(linked, d) == ideal, "double-link involution", ideal,
             "link(link(I)) != I for d=" + d.str() + ", link=" + print_ideal(linked));

      HilbertFunction lhs = hilbert_function(linked, socle);
      HilbertFunction rhs = linked_hf(hilbert_function(ideal, socle), d);
      record(report, lhs.values() == rhs.values(), "linkage Hilbert identity", ideal,
             "HF(S/link) = " + print_hf(lhs) + " but the linkage identity gives " + print_hf(rhs));

      Prop32Report prop = check_prop32(ideal, d);
      std::ostringstream details;
      details << "components:";
      for (bool ok : prop.component_identity) details << (ok ? " ok" : " FAIL");
      details << "; spp " << prop.spp_of_ideal << "/" << prop.spp_of_link << "; lpp "
              << prop.lpp_of_ideal << "/" << prop.lpp_of_link;
      record(report, prop.passed(), "linkage component identity and biconditionals", ideal,
             details.str());
    }
  }
  return report;
}

SuiteReport run_betti_oracle_suite(int max_exhaustive_n, int max_exhaustive_degree, int random_n,
                                   int random_trials, std::uint64_t seed,
                                   const KoszulOptions& options) {
  SuiteReport report;
  report.suite = "betti-oracles";
  for (int n = 1; n <= max_exhaustive_n; ++n) {
    for (const MonomialIdeal& ideal : enumerate_stable_ideals(n, max_exhaustive_degree)) {
      if (ideal.is_zero()) continue;
      BettiTable closed = ek_betti(ideal);
      BettiTable oracle = koszul_betti(ideal, options);
      record(report, closed == oracle, "ek_betti == koszul_betti (exhaustive)", ideal,
             "ek:\n" + format_table(closed) + "koszul:\n" + format_table(oracle));
    }
  }
  Rng rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    MonomialIdeal seed_ideal =
        random_ideal_over(rng, MonomialIdeal::zero(random_n), /*max_degree=*/6,
                          /*max_extra_gens=*/5);
    MonomialIdeal ideal = stable_closure(seed_ideal);
    if (ideal.is_zero()) continue;
    BettiTable closed = ek_betti(ideal);
    BettiTable oracle = koszul_betti(ideal, options);
    record(report, closed == oracle, "ek_betti == koszul_betti (random)", ideal,
           "ek:\n" + format_table(closed) + "koszul:\n" + format_table(oracle));
  }
  return report;
}

SuiteReport run_spp_oracle_suite(const std::vector<DegreeSequence>& exhaustive,
                                 const std::vector<DegreeSequence>& fuzz, int fuzz_trials,
                                 std::uint64_t seed, const KoszulOptions& options) {
  SuiteReport report;
  report.suite = "spp-oracles";
  for (const DegreeSequence& d : exhaustive) {
    for (const MonomialIdeal& ideal : enumerate_ideals_containing(power_ideal(d))) {
      if (!is_spp(ideal, d)) continue;
      BettiTable recursive = spp_betti(ideal, d, options);
      BettiTable oracle = koszul_betti(ideal, options);
      record(report, recursive == oracle, "spp_betti == koszul_betti (exhaustive d=" + d.str() + ")",
             ideal, "spp:\n" + format_table(recursive) + "koszul:\n" + format_table(oracle));
    }
  }
  Rng rng(seed);
  for (const DegreeSequence& d : fuzz) {
    const MonomialIdeal power = power_ideal(d);
    const int socle = static_cast<int>(d.socle_degree());
    for (int t = 0; t < fuzz_trials; ++t) {
      MonomialIdeal ideal =
          spp_closure(random_ideal_over(rng, power, std::max(socle, 1), 4), d.last());
      if (!is_spp(ideal, d)) {
        record(report, false, "spp closure produced a d-SPP ideal", ideal, "d=" + d.str());
        continue;
      }
      BettiTable recursive = spp_betti(ideal, d, options);
      BettiTable oracle = koszul_betti(ideal, options);
      record(report, recursive == oracle, "spp_betti == koszul_betti (random d=" + d.str() + ")",
             ideal, "spp:\n" + format_table(recursive) + "koszul:\n" + format_table(oracle));
    }
  }
  return report;
}

namespace {

// EGH extremality for one instance: the LPP ideal of HF(I) has, degree by
// degree, at least as many minimal generators as I.
void check_egh_instance(SuiteReport& report, const MonomialIdeal& ideal,
                        const MonomialIdeal& lpp_ideal, const DegreeSequence& d) {
  auto ideal_counts = generator_degree_counts(ideal);
  auto lpp_counts = generator_degree_counts(lpp_ideal);
  bool ok = true;
  std::ostringstream details;
  for (const auto& [degree, count] : ideal_counts) {
    long long bound = lpp_counts.count(degree) ? lpp_counts[degree] : 0;
    if (count > bound) {
      ok = false;
      details << "degree " << degree << ": " << count << " generators > LPP's " << bound << "; ";
    }
  }
  record(report, ok, "EGH beta_0 extremality (d=" + d.str() + ")", ideal, details.str());
}

using HfCache = std::set<std::vector<long long>>;

// EGH over the whole Hilbert-function class: every ideal sharing HF(I) stays
// below the LPP generator counts. Deduplicated per Hilbert function.
void check_egh_class(SuiteReport& report, const DegreeSequence& d, const HilbertFunction& h,
                     const MonomialIdeal& lpp_ideal, HfCache& done) {
  if (!done.insert(h.values()).second) return;
  enumerate_ideals(d, h, h.degree_bound(), std::size_t{1} << 20,
                   [&](const MonomialIdeal& member) {
                     check_egh_instance(report, member, lpp_ideal, d);
                   });
}

void main_theorem_instance(SuiteReport& report, const MonomialIdeal& ideal,
                           const DegreeSequence& d, bool check_egh, HfCache& done,
                           const KoszulOptions& options) {
  MainTheoremReport result = verify_main_theorem(ideal, d, options);
  record(report, result.dominance.verdict != DominanceVerdict::incomparable,
         "Betti dominance by the LPP bound (d=" + d.str() + ")", ideal,
         witness_text(result.dominance));
  if (check_egh && d.all_finite()) {
    const int socle = static_cast<int>(d.socle_degree());
    check_egh_class(report, d, hilbert_function(ideal, socle), result.lpp_ideal, done);
  }
}

}  // namespace

SuiteReport run_main_theorem_suite(const std::vector<DegreeSequence>& exhaustive,
                                   const std::vector<DegreeSequence>& fuzz, int fuzz_trials,
                                   std::uint64_t seed, bool check_egh,
                                   const KoszulOptions& options) {
  SuiteReport report;
  report.suite = "main-theorem";
  for (const DegreeSequence& d : exhaustive) {
    HfCache done;
    for (const MonomialIdeal& ideal : enumerate_ideals_containing(power_ideal(d))) {
      main_theorem_instance(report, ideal, d, check_egh, done, options);
    }
  }
  Rng rng(seed);
  for (const DegreeSequence& d : fuzz) {
    HfCache done;
    const MonomialIdeal power = power_ideal(d);
    const int socle = static_cast<int>(d.socle_degree());
    for (int t = 0; t < fuzz_trials; ++t) {
      MonomialIdeal ideal = random_ideal_over(rng, power, std::max(socle, 1), 4);
      main_theorem_instance(report, ideal, d, check_egh, done, options);
    }
  }
  return report;
}

SuiteReport run_egh_suite(const std::vector<DegreeSequence>& degree_sequences) {
  SuiteReport report;
  report.suite = "egh";
  for (const DegreeSequence& d : degree_sequences) {
    const int socle = static_cast<int>(d.socle_degree());
    HfCache done;
    for (const MonomialIdeal& ideal : enumerate_ideals_containing(power_ideal(d))) {
      HilbertFunction h = hilbert_function(ideal, socle);
      MonomialIdeal lpp_ideal = lpp_from_hf(h, d, socle);
      check_egh_class(report, d, h, lpp_ideal, done);
    }
  }
  return report;
}

SuiteReport run_monotonicity_suite() {
  SuiteReport report;
  report.suite = "monotonicity";

  // Exhaustive nested finite pairs in two variables.
  const std::vector<std::pair<DegreeSequence, DegreeSequence>> pairs = {
      {DegreeSequence({2, 2}), DegreeSequence({2, 3})},
      {DegreeSequence({2, 3}), DegreeSequence({3, 3})},
      {DegreeSequence({2, 2}), DegreeSequence({3, 3})},
  };
  for (const auto& [d, e] : pairs) {
    const int window = static_cast<int>(e.socle_degree());
    for (const MonomialIdeal& ideal : enumerate_ideals_containing(power_ideal(d))) {
      HilbertFunction h = hilbert_function(ideal, window);
      BettiTable lower(TableConvention::of_ideal, d.size());
      BettiTable upper(TableConvention::of_ideal, d.size());
      try {
        lower = lpp_bound(h, d, window);
        upper = lpp_bound(h, e, window);
      } catch (const Error&) {
        continue;  // not comparable: one LPP ideal nonexistent
      }
      DominanceReport fine = dominates(lower, upper);
      record(report, fine.verdict != DominanceVerdict::incomparable,
             "lpp_bound(" + d.str() + ") <= lpp_bound(" + e.str() + ")", ideal,
             witness_text(fine));
      DominanceReport coarse = dominates(upper, bhp_bound(h, window));
      record(report, coarse.verdict != DominanceVerdict::incomparable,
             "lpp_bound(" + e.str() + ") <= bhp_bound", ideal, witness_text(coarse));
    }
  }

  // The bundled comparison case with its two infinite sequences.
  if (const GalleryCase* item = find_gallery_case("example-4.3")) {
    const DegreeSequence tight({3, 3, 3, DegreeSequence::kInfinity});
    const DegreeSequence loose({3, 3, 5, DegreeSequence::kInfinity});
    BettiTable tight_table = lpp_bound(item->hf, tight, item->degree_bound);
    BettiTable loose_table = lpp_bound(item->hf, loose, item->degree_bound);
    BettiTable lex_table = bhp_bound(item->hf, item->degree_bound);
    MonomialIdeal placeholder = MonomialIdeal::zero(item->n);
    DominanceReport first = dominates(tight_table, loose_table);
    record(report, first.verdict != DominanceVerdict::incomparable,
           "lpp_bound(3,3,3,inf) <= lpp_bound(3,3,5,inf)", placeholder, witness_text(first));
    DominanceReport second = dominates(loose_table, lex_table);
    record(report, second.verdict != DominanceVerdict::incomparable,
           "lpp_bound(3,3,5,inf) <= bhp_bound", placeholder, witness_text(second));
  }
  return report;
}

}  // namespace lexpow
