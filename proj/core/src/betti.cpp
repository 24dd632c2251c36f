#include "lexpow/betti.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "lexpow/binomial.hpp"
#include "lexpow/errors.hpp"
#include "lexpow/lpp.hpp"

namespace lexpow {

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long count) {
  if (count < 0) fail(Errc::range, "negative Betti count");
  if (count == 0) return;
  entries_[{i, j}] += count;
}

int BettiTable::max_homological_degree() const {
  int best = -1;
  for (const auto& [key, value] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::min_row() const {
  if (entries_.empty()) return 0;
  int best = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, value] : entries_) best = std::min(best, key.second - key.first);
  return best;
}

int BettiTable::max_row() const {
  if (entries_.empty()) return -1;
  int best = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, value] : entries_) best = std::max(best, key.second - key.first);
  return best;
}

int BettiTable::max_internal_degree() const {
  int best = -1;
  for (const auto& [key, value] : entries_) best = std::max(best, key.second);
  return best;
}

void BettiTable::accumulate(const BettiTable& other) {
  for (const auto& [key, value] : other.entries_) add(key.first, key.second, value);
}

BettiTable BettiTable::shifted(int s) const {
  BettiTable out(convention_, n_);
  for (const auto& [key, value] : entries_) out.add(key.first, key.second + s, value);
  return out;
}

BettiTable quotient_table(const BettiTable& ideal_table, bool ideal_is_unit) {
  BettiTable out(TableConvention::of_quotient, ideal_table.vars());
  if (ideal_is_unit) return out;  // S/S = 0
  out.add(0, 0, 1);
  for (const auto& [key, value] : ideal_table.entries()) {
    out.add(key.first + 1, key.second, value);
  }
  return out;
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.gens()) {
    const int m = g.max_index();
    if (m <= 0) continue;
    Monomial base = g.divided_by(Monomial::variable(m, g.vars()));
    for (int i = 0; i < m; ++i) {
      if (!contains(ideal, base.times_variable(i))) return false;
    }
  }
  return true;
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) fail(Errc::not_stable, "ek_betti needs a stable ideal");
  BettiTable out(TableConvention::of_ideal, ideal.vars());
  if (ideal.is_unit()) {
    out.add(0, 0, 1);  // the free module S
    return out;
  }
  for (const Monomial& g : ideal.gens()) {
    const int m = g.max_index();  // 0-based; max(u) in 1-based terms is m+1
    const int degree = g.degree();
    for (int i = 0; i <= m; ++i) {
      out.add(i, degree + i, to_long_checked(binomial(m, i)));
    }
  }
  return out;
}

namespace {

// Rank over Q of an integer matrix by one-step fraction-free (Bareiss)
// elimination; divisions are exact.
int exact_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

using Mask = std::uint32_t;

int popcount(Mask mask) { return __builtin_popcount(mask); }

}  // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal, const KoszulOptions& options) {
  if (ideal.is_zero()) fail(Errc::range, "koszul_betti needs a nonzero ideal");
  const int n = ideal.vars();
  if (n > 31) fail(Errc::resource_limit, "koszul_betti supports at most 31 variables");
  BettiTable out(TableConvention::of_ideal, n);

  // lcm semilattice of the minimal generators.
  std::set<std::vector<int>> lattice;
  std::vector<Monomial> frontier;
  for (const Monomial& g : ideal.gens()) {
    if (lattice.insert(g.exponents()).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& b : frontier) {
      for (const Monomial& g : ideal.gens()) {
        Monomial l = b.lcm_with(g);
        if (lattice.size() >= options.lattice_cap && !lattice.contains(l.exponents())) {
          fail(Errc::resource_limit,
               "lcm lattice cap exceeded: " + std::to_string(lattice.size()) +
                   " elements with the frontier still open");
        }
        if (lattice.insert(l.exponents()).second) next.push_back(l);
      }
    }
    frontier = std::move(next);
  }

  for (const std::vector<int>& b_exps : lattice) {
    const Monomial b(b_exps);
    Mask support = 0;
    for (int i = 0; i < n; ++i) {
      if (b.exponent(i) > 0) support |= Mask{1} << i;
    }
    // Upper Koszul complex: faces grouped by cardinality.
    const int s = popcount(support);
    std::vector<std::vector<Mask>> faces(static_cast<std::size_t>(s) + 1);
    for (Mask sigma = support;; sigma = (sigma - 1) & support) {
      bool in_complex;
      if (sigma == 0) {
        in_complex = true;  // x^b lies in I for every lattice multidegree
      } else {
        std::vector<int> exps = b.exponents();
        for (int i = 0; i < n; ++i) {
          if (sigma & (Mask{1} << i)) exps[static_cast<std::size_t>(i)] -= 1;
        }
        in_complex = contains(ideal, Monomial(exps));
      }
      if (in_complex) faces[static_cast<std::size_t>(popcount(sigma))].push_back(sigma);
      if (sigma == 0) break;
    }
    for (auto& level : faces) std::sort(level.begin(), level.end());

    // rank of the reduced boundary from cardinality c to c-1.
    std::vector<int> boundary_rank(static_cast<std::size_t>(s) + 2, 0);
    for (int c = 1; c <= s; ++c) {
      const auto& domain = faces[static_cast<std::size_t>(c)];
      const auto& image = faces[static_cast<std::size_t>(c - 1)];
      if (domain.empty() || image.empty()) continue;
      std::vector<std::vector<mpz_class>> matrix(
          image.size(), std::vector<mpz_class>(domain.size(), 0));
      for (std::size_t col = 0; col < domain.size(); ++col) {
        Mask sigma = domain[col];
        int position = 0;
        for (int v = 0; v < n; ++v) {
          Mask bit = Mask{1} << v;
          if (!(sigma & bit)) continue;
          Mask tau = sigma & ~bit;
          auto it = std::lower_bound(image.begin(), image.end(), tau);
          if (it != image.end() && *it == tau) {
            matrix[static_cast<std::size_t>(it - image.begin())][col] =
                (position % 2 == 0) ? 1 : -1;
          }
          ++position;
        }
      }
      boundary_rank[static_cast<std::size_t>(c)] = exact_rank(std::move(matrix));
    }

    const int degree = b.degree();
    for (int i = 0; i <= s; ++i) {
      // dim H~_{i-1} = #faces of cardinality i - rank d_i - rank d_{i+1}
      const long long betti = static_cast<long long>(faces[static_cast<std::size_t>(i)].size()) -
                              boundary_rank[static_cast<std::size_t>(i)] -
                              boundary_rank[static_cast<std::size_t>(i) + 1];
      if (betti > 0) out.add(i, degree, betti);
    }
  }
  return out;
}

BettiTable vbetti(const GradedVectorSpaceHF& hf, int m) {
  BettiTable out(TableConvention::of_module, m);
  for (const auto& [degree, multiplicity] : hf) {
    if (multiplicity < 0) fail(Errc::range, "negative multiplicity in graded vector space");
    if (multiplicity == 0) continue;
    for (int i = 0; i <= m; ++i) {
      out.add(i, degree + i, multiplicity * to_long_checked(binomial(m, i)));
    }
  }
  return out;
}

namespace {

BettiTable principal_table(const MonomialIdeal& ideal) {
  BettiTable out(TableConvention::of_ideal, ideal.vars());
  if (!ideal.is_zero()) out.add(0, ideal.gens().front().degree(), 1);
  return out;
}

BettiTable spp_betti_impl(const MonomialIdeal& ideal, const DegreeSequence& d,
                          const KoszulOptions& options);

// Of-ideal Betti numbers of a component over its own ring: descend through the
// decomposition while it stays SPP for the truncated sequence, else call the
// oracle.
BettiTable component_betti(const MonomialIdeal& ideal, const DegreeSequence& d,
                           const KoszulOptions& options) {
  if (ideal.is_zero() || ideal.vars() <= 1) return principal_table(ideal);
  if (ideal.is_unit()) {
    BettiTable out(TableConvention::of_ideal, ideal.vars());
    out.add(0, 0, 1);
    return out;
  }
  if (d.all_finite() && is_spp(ideal, d)) return spp_betti_impl(ideal, d, options);
  return koszul_betti(ideal, options);
}

BettiTable spp_betti_impl(const MonomialIdeal& ideal, const DegreeSequence& d,
                          const KoszulOptions& options) {
  const int n = ideal.vars();
  if (n <= 1) return principal_table(ideal);
  const int dn = static_cast<int>(d.last());
  const DegreeSequence dbar = d.truncated();
  XnDecomposition parts = decompose(ideal, dn - 1);

  BettiTable out(TableConvention::of_ideal, n);
  out.accumulate(component_betti(parts.component(0), dbar, options));

  // Middle term: V of the sandwiched quotients I_h/I_{h-1}, shifted by h.
  // The differences vanish beyond max generator degree of I_h because
  // m_S̄ I_h ⊆ I_{h-1} closes the gap there.
  GradedVectorSpaceHF middle;
  for (int h = 1; h <= dn - 1; ++h) {
    const MonomialIdeal& upper = parts.component(h);
    const MonomialIdeal& lower = parts.component(h - 1);
    for (int t = 0; t <= upper.max_gen_degree(); ++t) {
      const long long diff = dim_of_degree(upper, t) - dim_of_degree(lower, t);
      if (diff < 0) fail(Errc::not_spp, "decomposition components not nested");
      if (diff > 0) middle[t + h] += diff;
    }
  }
  out.accumulate(vbetti(middle, n - 1));

  const MonomialIdeal& top = parts.component(dn - 1);
  BettiTable quotient =
      quotient_table(component_betti(top, dbar, options), top.is_unit());
  out.accumulate(quotient.shifted(dn));
  return out;
}

}  // namespace

BettiTable spp_betti(const MonomialIdeal& ideal, const DegreeSequence& d,
                     const KoszulOptions& options) {
  if (d.size() != ideal.vars()) fail(Errc::malformed_input, "degree sequence length mismatch");
  if (!d.all_finite()) fail(Errc::range, "spp_betti needs a finite degree sequence");
  if (!is_spp(ideal, d)) fail(Errc::not_spp, "spp_betti needs a d-SPP ideal");
  return spp_betti_impl(ideal, d, options);
}

std::string format_table(const BettiTable& table) {
  const int imax = std::max(table.max_homological_degree(), 0);
  const int rmin = table.min_row();
  const int rmax = table.max_row();

  std::size_t cell = 1;
  for (int i = 0; i <= imax; ++i) cell = std::max(cell, std::to_string(i).size());
  for (const auto& [key, value] : table.entries()) {
    cell = std::max(cell, std::to_string(value).size());
  }
  std::size_t label = 1;
  for (int r = rmin; r <= rmax; ++r) label = std::max(label, std::to_string(r).size());

  std::ostringstream os;
  os << std::string(label + 1, ' ');
  for (int i = 0; i <= imax; ++i) {
    std::string text = std::to_string(i);
    os << "  " << std::string(cell - text.size(), ' ') << text;
  }
  os << '\n';
  for (int r = rmin; r <= rmax; ++r) {
    std::string text = std::to_string(r);
    os << std::string(label - text.size(), ' ') << text << ':';
    for (int i = 0; i <= imax; ++i) {
      const long long value = table.at(i, r + i);
      std::string entry = value == 0 ? "-" : std::to_string(value);
      os << "  " << std::string(cell - entry.size(), ' ') << entry;
    }
    os << '\n';
  }
  return os.str();
}

bool euler_identity_holds(const BettiTable& table, const MonomialIdeal& ideal) {
  if (table.convention() != TableConvention::of_quotient) {
    fail(Errc::malformed_input, "euler_identity_holds expects an of-quotient table");
  }
  const int n = ideal.vars();
  const int max_degree = std::max(table.max_internal_degree(), 0);
  HilbertFunction h = hilbert_function(ideal, max_degree);
  for (int j = 0; j <= max_degree; ++j) {
    long long lhs = 0;
    for (const auto& [key, value] : table.entries()) {
      if (key.second == j) lhs += (key.first % 2 == 0) ? value : -value;
    }
    mpz_class rhs = 0;
    for (int k = 0; k <= std::min(j, n); ++k) {
      mpz_class term = binomial(n, k) * static_cast<long>(h.value(j - k));
      rhs += (k % 2 == 0) ? term : -term;
    }
    if (rhs != static_cast<long>(lhs)) return false;
  }
  return true;
}

}  // namespace lexpow
