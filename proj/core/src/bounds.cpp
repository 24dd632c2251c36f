#include "lexpow/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lexpow/binomial.hpp"
#include "lexpow/errors.hpp"
#include "lexpow/lex.hpp"
#include "lexpow/lpp.hpp"

namespace lexpow {

DominanceReport dominates(const BettiTable& left, const BettiTable& right) {
  if (left.convention() != right.convention()) {
    fail(Errc::malformed_input, "Betti table convention mismatch");
  }
  if (left.vars() != right.vars()) fail(Errc::malformed_input, "ambient mismatch");
  DominanceReport report;
  std::set<BettiTable::Key> keys;
  for (const auto& [key, value] : left.entries()) keys.insert(key);
  for (const auto& [key, value] : right.entries()) keys.insert(key);
  bool equal = true;
  for (const auto& key : keys) {
    const long long l = left.at(key.first, key.second);
    const long long r = right.at(key.first, key.second);
    if (l != r) equal = false;
    if (l > r) report.witnesses.push_back({key.first, key.second, l, r});
  }
  report.verdict = !report.witnesses.empty() ? DominanceVerdict::incomparable
                   : equal                   ? DominanceVerdict::equal
                                             : DominanceVerdict::dominated;
  return report;
}

BettiTable bhp_bound(const HilbertFunction& h, int degree_bound) {
  return ek_betti(lex_ideal_from_hf(h, degree_bound));
}

namespace {

// Betti table of an already-constructed LPP ideal. Finite d goes straight to
// the decomposition recursion; with infinite entries, an Artinian ideal is
// re-keyed to the pure powers it actually contains, anything else goes to the
// Koszul oracle.
BettiTable betti_of_lpp(const MonomialIdeal& lpp_ideal, const DegreeSequence& d,
                        const KoszulOptions& options) {
  if (lpp_ideal.is_zero()) return BettiTable(TableConvention::of_ideal, lpp_ideal.vars());
  if (d.all_finite()) return spp_betti(lpp_ideal, d, options);
  if (!lpp_ideal.is_unit()) {
    auto powers = pure_power_exponents(lpp_ideal);
    if (std::all_of(powers.begin(), powers.end(), [](const auto& p) { return p.has_value(); })) {
      MinimalPowers minimal = minimal_power_sequence(lpp_ideal);
      if (is_spp(lpp_ideal, minimal.degrees)) return spp_betti(lpp_ideal, minimal.degrees, options);
    }
  }
  return koszul_betti(lpp_ideal, options);
}

}  // namespace

BettiTable lpp_bound(const HilbertFunction& h, const DegreeSequence& d, int degree_bound,
                     const KoszulOptions& options) {
  return betti_of_lpp(lpp_from_hf(h, d, degree_bound), d, options);
}

MainTheoremReport verify_main_theorem(const MonomialIdeal& ideal, const DegreeSequence& d,
                                      const KoszulOptions& options) {
  if (d.size() != ideal.vars()) fail(Errc::malformed_input, "degree sequence length mismatch");
  if (!contains_ideal(ideal, power_ideal(d))) {
    fail(Errc::containment_violation, "ideal does not contain the power ideal");
  }
  MainTheoremReport report;
  report.degree_hypothesis_satisfied = d.grows_quickly();

  int window;
  if (d.all_finite()) {
    window = static_cast<int>(d.socle_degree());
  } else {
    window = ideal.max_gen_degree() + ideal.vars() + 2;
  }
  HilbertFunction h = hilbert_function(ideal, window);
  report.lpp_ideal = lpp_from_hf(h, d, window);

  if (ideal.is_zero()) {
    report.ideal_table = BettiTable(TableConvention::of_ideal, ideal.vars());
  } else if (d.all_finite() && is_spp(ideal, d)) {
    report.ideal_table = spp_betti(ideal, d, options);
  } else {
    report.ideal_table = koszul_betti(ideal, options);
  }
  report.bound_table = betti_of_lpp(report.lpp_ideal, d, options);
  report.dominance = dominates(report.ideal_table, report.bound_table);
  return report;
}

MinimalPowers minimal_power_sequence(const MonomialIdeal& ideal) {
  const int n = ideal.vars();
  auto powers = pure_power_exponents(ideal);
  std::vector<std::pair<long long, int>> keyed;
  keyed.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& p = powers[static_cast<std::size_t>(i)];
    if (!p) {
      fail(Errc::non_artinian,
           "no pure power of x" + std::to_string(i + 1) + " lies in the ideal");
    }
    keyed.emplace_back(std::max(*p, 1), i);  // the unit ideal contains x_i^1
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<long long> entries;
  std::vector<int> order;
  entries.reserve(keyed.size());
  order.reserve(keyed.size());
  for (const auto& [e, i] : keyed) {
    entries.push_back(e);
    order.push_back(i);
  }
  return {DegreeSequence(std::move(entries)), std::move(order)};
}

namespace {

struct EnumerationState {
  const DegreeSequence* d;
  const HilbertFunction* h;
  int degree_bound;
  long long socle;
  MonomialIdeal power;
  std::vector<std::vector<Monomial>> standard;  // per degree 0..socle
  std::vector<long long> quotient_of_ci;        // HF(S/℘; j)
  std::size_t cap;
  std::size_t emitted = 0;
  const std::function<void(const MonomialIdeal&)>* visit;
  std::vector<Monomial> chosen;
};

void emit(EnumerationState& state) {
  if (state.emitted >= state.cap) {
    fail(Errc::resource_limit, "enumeration cap exceeded after " +
                                   std::to_string(state.emitted) + " ideals");
  }
  ++state.emitted;
  std::vector<Monomial> gens(state.power.gens());
  gens.insert(gens.end(), state.chosen.begin(), state.chosen.end());
  (*state.visit)(normalize(std::move(gens), state.power.vars()));
}

void choose_at_degree(EnumerationState& state, int j);

// Pick `needed` additional monomials from candidates[from..], in
// lexicographic combination order.
void choose_combination(EnumerationState& state, int j, const std::vector<Monomial>& candidates,
                        std::size_t from, long long needed) {
  if (needed == 0) {
    choose_at_degree(state, j + 1);
    return;
  }
  if (candidates.size() - from < static_cast<std::size_t>(needed)) return;
  for (std::size_t k = from; k + static_cast<std::size_t>(needed) <= candidates.size(); ++k) {
    state.chosen.push_back(candidates[k]);
    choose_combination(state, j, candidates, k + 1, needed - 1);
    state.chosen.pop_back();
  }
}

void choose_at_degree(EnumerationState& state, int j) {
  if (j > state.socle) {
    emit(state);
    return;
  }
  const auto& mons = state.standard[static_cast<std::size_t>(j)];
  std::vector<Monomial> optional;
  long long forced = 0;
  for (const Monomial& m : mons) {
    bool is_forced = false;
    for (const Monomial& c : state.chosen) {
      if (c.divides(m)) {
        is_forced = true;
        break;
      }
    }
    if (is_forced) {
      ++forced;
    } else {
      optional.push_back(m);
    }
  }
  if (j <= state.degree_bound) {
    const long long target = state.quotient_of_ci[static_cast<std::size_t>(j)] - state.h->value(j);
    if (target < forced || target > forced + static_cast<long long>(optional.size())) return;
    choose_combination(state, j, optional, 0, target - forced);
  } else {
    // Beyond the caller's window any upward-closed completion qualifies.
    for (long long extra = 0; extra <= static_cast<long long>(optional.size()); ++extra) {
      choose_combination(state, j, optional, 0, extra);
    }
  }
}

}  // namespace

void enumerate_ideals(const DegreeSequence& d, const HilbertFunction& h, int degree_bound,
                      std::size_t cap, const std::function<void(const MonomialIdeal&)>& visit) {
  if (!d.all_finite()) fail(Errc::range, "enumerate_ideals needs a finite degree sequence");
  if (h.vars() != d.size()) fail(Errc::malformed_input, "ambient mismatch");
  if (degree_bound < 0) fail(Errc::range, "negative degree bound");

  EnumerationState state;
  state.d = &d;
  state.h = &h;
  state.degree_bound = degree_bound;
  state.socle = d.socle_degree();
  state.power = power_ideal(d);
  state.cap = cap;
  state.visit = &visit;

  HilbertFunction ci_hf = hilbert_function(state.power, static_cast<int>(state.socle));
  for (long long j = 0; j <= state.socle; ++j) {
    state.quotient_of_ci.push_back(ci_hf.value(static_cast<int>(j)));
    std::vector<Monomial> std_mons;
    for (const Monomial& m : monomials_of_degree(d.size(), static_cast<int>(j))) {
      if (!contains(state.power, m)) std_mons.push_back(m);
    }
    state.standard.push_back(std::move(std_mons));
  }
  // Degrees past the socle carry no freedom; the requested values must vanish.
  for (int j = static_cast<int>(state.socle) + 1; j <= degree_bound; ++j) {
    if (h.value(j) != 0) return;
  }
  for (int j = 0; j <= std::min<long long>(degree_bound, state.socle); ++j) {
    if (h.value(j) > state.quotient_of_ci[static_cast<std::size_t>(j)]) return;
  }
  choose_at_degree(state, 0);
}

std::vector<MonomialIdeal> enumerate_ideals(const DegreeSequence& d, const HilbertFunction& h,
                                            int degree_bound, std::size_t cap) {
  std::vector<MonomialIdeal> out;
  enumerate_ideals(d, h, degree_bound, cap,
                   [&out](const MonomialIdeal& ideal) { out.push_back(ideal); });
  return out;
}

}  // namespace lexpow
