#include "lexpow/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lexpow/errors.hpp"
#include "lexpow/hilbert.hpp"

namespace lexpow {

Monomial random_monomial(Rng& rng, int n, int degree) {
  std::vector<Monomial> all = monomials_of_degree(n, degree);
  if (all.empty()) fail(Errc::range, "no monomials of the requested degree");
  return all[static_cast<std::size_t>(rng.below(all.size()))];
}

MonomialIdeal random_ideal_over(Rng& rng, const MonomialIdeal& base, int max_degree,
                                int max_extra_gens) {
  if (max_degree < 1 || max_extra_gens < 1) fail(Errc::range, "need positive generation bounds");
  MonomialIdeal ideal = base;
  const int extras = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra_gens)));
  for (int k = 0; k < extras; ++k) {
    const int degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
    ideal = sum(ideal, random_monomial(rng, base.vars(), degree));
  }
  return ideal;
}

namespace {

// Exchange moves preserve degree and strictly increase lex order, so repeated
// closure terminates.
MonomialIdeal exchange_closure(const MonomialIdeal& ideal, bool xn_only, long long dn) {
  MonomialIdeal current = ideal;
  const int n = ideal.vars();
  if (n <= 1) return current;
  for (;;) {
    std::vector<Monomial> missing;
    for (const Monomial& g : current.gens()) {
      const int top = xn_only ? n - 1 : g.max_index();
      if (top <= 0) continue;
      if (g.exponent(top) == 0) continue;
      if (xn_only && dn != DegreeSequence::kInfinity && g.exponent(top) >= dn) continue;
      Monomial base = g.divided_by(Monomial::variable(top, n));
      const int limit = xn_only ? n - 1 : top;
      for (int i = 0; i < limit; ++i) {
        Monomial moved = base.times_variable(i);
        if (!contains(current, moved)) missing.push_back(moved);
      }
    }
    if (missing.empty()) return current;
    std::vector<Monomial> gens(current.gens());
    gens.insert(gens.end(), missing.begin(), missing.end());
    current = normalize(std::move(gens), n);
  }
}

}  // namespace

MonomialIdeal stable_closure(const MonomialIdeal& ideal) {
  return exchange_closure(ideal, /*xn_only=*/false, DegreeSequence::kInfinity);
}

MonomialIdeal spp_closure(const MonomialIdeal& ideal, long long dn) {
  return exchange_closure(ideal, /*xn_only=*/true, dn);
}

namespace {

struct StableSliceEnumerator {
  int n = 0;
  std::vector<Monomial> mons;               // fixed degree, lex descending
  std::map<std::vector<int>, std::size_t> index_of;
  std::vector<std::vector<std::size_t>> exchange_targets;  // per monomial

  explicit StableSliceEnumerator(int n_in, int degree) : n(n_in) {
    mons = monomials_of_degree(n, degree);
    for (std::size_t k = 0; k < mons.size(); ++k) index_of[mons[k].exponents()] = k;
    exchange_targets.resize(mons.size());
    for (std::size_t k = 0; k < mons.size(); ++k) {
      const Monomial& m = mons[k];
      const int top = m.max_index();
      if (top <= 0) continue;
      Monomial base = m.divided_by(Monomial::variable(top, n));
      for (int i = 0; i < top; ++i) {
        exchange_targets[k].push_back(index_of.at(base.times_variable(i).exponents()));
      }
    }
  }

  // All stable subsets containing `forced`, in deterministic order. Targets
  // are lex-larger, hence decided before their sources in index order.
  void enumerate(const std::vector<bool>& forced,
                 const std::function<void(const std::vector<bool>&)>& yield) const {
    std::vector<bool> included(mons.size(), false);
    walk(0, forced, included, yield);
  }

 private:
  void walk(std::size_t k, const std::vector<bool>& forced, std::vector<bool>& included,
            const std::function<void(const std::vector<bool>&)>& yield) const {
    if (k == mons.size()) {
      yield(included);
      return;
    }
    bool closable = true;
    for (std::size_t target : exchange_targets[k]) {
      if (!included[target]) {
        closable = false;
        break;
      }
    }
    if (closable) {
      included[k] = true;
      walk(k + 1, forced, included, yield);
      included[k] = false;
    }
    if (!forced[k]) walk(k + 1, forced, included, yield);
  }
};

}  // namespace

std::vector<MonomialIdeal> enumerate_stable_ideals(int n, int max_gen_degree) {
  if (n < 1 || max_gen_degree < 0) fail(Errc::range, "bad enumeration bounds");
  std::vector<MonomialIdeal> out;
  std::vector<StableSliceEnumerator> levels;
  levels.reserve(static_cast<std::size_t>(max_gen_degree) + 1);
  for (int t = 0; t <= max_gen_degree; ++t) levels.emplace_back(n, t);

  std::vector<Monomial> selected;
  std::function<void(int, const std::vector<Monomial>&)> descend =
      [&](int t, const std::vector<Monomial>& previous_slice) {
        if (t > max_gen_degree) {
          out.push_back(normalize(selected, n));
          return;
        }
        const StableSliceEnumerator& level = levels[static_cast<std::size_t>(t)];
        std::vector<bool> forced(level.mons.size(), false);
        for (std::size_t k = 0; k < level.mons.size(); ++k) {
          for (const Monomial& p : previous_slice) {
            if (p.divides(level.mons[k])) {
              forced[k] = true;
              break;
            }
          }
        }
        level.enumerate(forced, [&](const std::vector<bool>& included) {
          std::vector<Monomial> slice;
          const std::size_t base = selected.size();
          for (std::size_t k = 0; k < included.size(); ++k) {
            if (included[k]) {
              slice.push_back(level.mons[k]);
              selected.push_back(level.mons[k]);
            }
          }
          descend(t + 1, slice);
          selected.resize(base);
        });
      };
  descend(0, {});
  return out;
}

std::vector<MonomialIdeal> enumerate_ideals_containing(const MonomialIdeal& power,
                                                       bool include_unit) {
  const int n = power.vars();
  long long socle = 0;
  for (const auto& p : pure_power_exponents(power)) {
    if (!p) fail(Errc::non_artinian, "enumerate_ideals_containing needs an Artinian base");
    socle += *p - 1;
  }
  // Standard monomials in decreasing degree; multiples precede their divisors.
  std::vector<Monomial> standard;
  for (long long j = socle; j >= 0; --j) {
    for (const Monomial& m : monomials_of_degree(n, static_cast<int>(j))) {
      if (!contains(power, m)) standard.push_back(m);
    }
  }
  std::vector<MonomialIdeal> out;
  std::vector<bool> included(standard.size(), false);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == standard.size()) {
      std::vector<Monomial> gens(power.gens());
      for (std::size_t i = 0; i < standard.size(); ++i) {
        if (included[i]) gens.push_back(standard[i]);
      }
      out.push_back(normalize(std::move(gens), n));
      return;
    }
    const Monomial& m = standard[k];
    bool closable = !m.is_unit() || include_unit;
    if (closable) {
      for (int i = 0; i < n && closable; ++i) {
        Monomial multiple = m.times_variable(i);
        if (contains(power, multiple)) continue;
        // Multiples are of higher degree, hence already decided.
        auto it = std::find(standard.begin(), standard.begin() + static_cast<long>(k), multiple);
        if (!included[static_cast<std::size_t>(it - standard.begin())]) closable = false;
      }
    }
    if (closable) {
      included[k] = true;
      walk(k + 1);
      included[k] = false;
    }
    walk(k + 1);
    };
  walk(0);
  return out;
}

}  // namespace lexpow
