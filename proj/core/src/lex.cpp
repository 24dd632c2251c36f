#include "lexpow/lex.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lexpow/binomial.hpp"
#include "lexpow/errors.hpp"
#include "segment_builder.hpp"

namespace lexpow {

std::vector<Monomial> lex_segment(int degree, long long count, int n) {
  if (degree < 0) fail(Errc::range, "negative degree");
  if (count < 0 || count_monomials_z(n, degree) < static_cast<long>(count)) {
    fail(Errc::range, "lex segment size out of range");
  }
  std::vector<Monomial> all = monomials_of_degree(n, degree);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

std::vector<Monomial> LexSegment::monomials() const { return lex_segment(degree, count, n); }

namespace {

// The j-th Macaulay representation a = sum_t C(m_t, t), t = j, j-1, ...,
// greedy from the top; the m_t come out strictly decreasing.
std::vector<std::pair<mpz_class, int>> macaulay_representation(const mpz_class& a, int j) {
  std::vector<std::pair<mpz_class, int>> rep;
  mpz_class remaining = a;
  for (int t = j; t >= 1 && remaining > 0; --t) {
    mpz_class m = t;
    while (binomial(to_long_checked(m + 1), t) <= remaining) ++m;
    rep.emplace_back(m, t);
    remaining -= binomial(to_long_checked(m), t);
  }
  return rep;
}

}  // namespace

long long macaulay_growth(long long a, int j) {
  if (a < 0) fail(Errc::range, "macaulay_growth needs a >= 0");
  if (j < 1) fail(Errc::range, "macaulay_growth needs j >= 1");
  mpz_class bumped = 0;
  for (const auto& [m, t] : macaulay_representation(mpz_class(static_cast<long>(a)), j)) {
    bumped += binomial(to_long_checked(m + 1), t + 1);
  }
  return to_long_checked(bumped);
}

namespace detail {

MonomialIdeal build_segment_ideal(const HilbertFunction& h, int degree_bound,
                                  const MonomialIdeal& base, bool pure_lex, Errc infeasible) {
  if (degree_bound < 0) fail(Errc::range, "negative degree bound");
  const int n = h.vars();
  if (base.vars() != n) fail(Errc::malformed_input, "ambient mismatch in segment construction");
  MonomialIdeal current = base;
  for (int j = 0; j <= degree_bound; ++j) {
    const long long full = count_monomials(n, j);
    const long long hj = h.value(j);
    if (hj < 0 || hj > full) {
      fail(infeasible, "Hilbert function value out of range at degree " + std::to_string(j));
    }
    const long long target = full - hj;  // prescribed ideal dimension in degree j
    const std::vector<Monomial> mons = monomials_of_degree(n, j);
    std::vector<bool> in_span(mons.size(), false);
    long long span = 0;
    for (std::size_t k = 0; k < mons.size(); ++k) {
      if (contains(current, mons[k])) {
        in_span[k] = true;
        ++span;
      }
    }
    if (span > target) {
      fail(infeasible, "no ideal of the requested kind has this Hilbert function: degree " +
                           std::to_string(j) + " already spans " + std::to_string(span) +
                           " > " + std::to_string(target));
    }
    if (pure_lex) {
      // The span must sit inside the prefix of size `target`, else the
      // quotient monomials are not the lex-smallest (Macaulay growth failed).
      for (std::size_t k = static_cast<std::size_t>(target); k < mons.size(); ++k) {
        if (in_span[k]) {
          fail(infeasible,
               "Hilbert function infeasible at degree " + std::to_string(j) +
                   " (growth from the previous degree exceeds the Macaulay bound)");
        }
      }
    }
    long long need = target - span;
    if (need > 0) {
      std::vector<Monomial> gens(current.gens());
      for (std::size_t k = 0; k < mons.size() && need > 0; ++k) {
        if (!in_span[k]) {
          gens.push_back(mons[k]);
          --need;
        }
      }
      current = normalize(std::move(gens), n);
    }
  }
  if (h.tail().kind != Tail::Kind::unspecified) {
    const int j = degree_bound + 1;
    const long long full = count_monomials(n, j);
    const long long target = full - h.value(j);
    const long long span = dim_of_degree(current, j);
    if (span > target) {
      fail(infeasible, "declared tail is impossible: degree " + std::to_string(j) +
                           " already spans " + std::to_string(span) + " > " +
                           std::to_string(target));
    }
    if (span < target) {
      fail(Errc::insufficient_bound,
           "degree bound too small: new minimal generators required at degree " +
               std::to_string(j));
    }
  }
  // Construct-then-verify: the window values must be reproduced exactly.
  HilbertFunction check = hilbert_function(current, degree_bound);
  for (int j = 0; j <= degree_bound; ++j) {
    if (check.value(j) != h.value(j)) {
      fail(infeasible, "constructed ideal fails Hilbert verification at degree " +
                           std::to_string(j));
    }
  }
  return current;
}

}  // namespace detail

MonomialIdeal lex_ideal_from_hf(const HilbertFunction& h, int degree_bound) {
  if (h.convention() != HFConvention::of_quotient) {
    fail(Errc::malformed_input, "lex_ideal_from_hf expects a quotient Hilbert function");
  }
  return detail::build_segment_ideal(h, degree_bound, MonomialIdeal::zero(h.vars()),
                                     /*pure_lex=*/true, Errc::infeasible_hilbert);
}

}  // namespace lexpow
