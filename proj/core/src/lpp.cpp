#include "lexpow/lpp.hpp"

#include <algorithm>
#include <string>

#include "lexpow/binomial.hpp"
#include "lexpow/errors.hpp"
#include "segment_builder.hpp"

namespace lexpow {

MonomialIdeal power_ideal(const DegreeSequence& d) {
  const int n = d.size();
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    if (d.is_finite(i)) {
      gens.push_back(Monomial::variable(i, n, static_cast<int>(d.entry(i))));
    }
  }
  return normalize(std::move(gens), n);
}

XnDecomposition decompose(const MonomialIdeal& ideal, int index_bound) {
  if (index_bound < 0) fail(Errc::range, "negative decomposition bound");
  if (ideal.vars() == 0) fail(Errc::range, "decomposition needs at least one variable");
  XnDecomposition out;
  out.components.reserve(static_cast<std::size_t>(index_bound) + 1);
  for (int h = 0; h <= index_bound; ++h) {
    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.gens()) {
      if (g.last_exponent() <= h) gens.push_back(g.strip_last());
    }
    out.components.push_back(normalize(std::move(gens), ideal.vars() - 1));
  }
  return out;
}

bool is_xn_stable(const MonomialIdeal& ideal) {
  const int n = ideal.vars();
  if (n <= 1) return true;
  for (const Monomial& g : ideal.gens()) {
    if (g.last_exponent() == 0) continue;
    Monomial base = g.divided_by(Monomial::variable(n - 1, n));
    for (int i = 0; i + 1 < n; ++i) {
      if (!contains(ideal, base.times_variable(i))) return false;
    }
  }
  return true;
}

bool is_spp(const MonomialIdeal& ideal, const DegreeSequence& d) {
  const int n = ideal.vars();
  if (d.size() != n) fail(Errc::malformed_input, "degree sequence length mismatch");
  if (!contains_ideal(ideal, power_ideal(d))) return false;
  if (n <= 1) return true;
  // m_S̄ I_h ⊆ I_{h-1} for 0 < h < d_n reduces to the generators with
  // x_n-exponent exactly h; for d_n = inf this is x_n-stability.
  const long long dn = d.last();
  for (const Monomial& g : ideal.gens()) {
    const int h = g.last_exponent();
    if (h == 0 || (dn != DegreeSequence::kInfinity && h >= dn)) continue;
    Monomial base = g.divided_by(Monomial::variable(n - 1, n));
    for (int i = 0; i + 1 < n; ++i) {
      if (!contains(ideal, base.times_variable(i))) return false;
    }
  }
  return true;
}

namespace {

int lpp_window(const MonomialIdeal& ideal, const DegreeSequence& d) {
  return static_cast<int>(std::max<long long>(ideal.max_gen_degree(), d.max_finite_entry())) + 1;
}

}  // namespace

bool is_lpp(const MonomialIdeal& ideal, const DegreeSequence& d) {
  if (d.size() != ideal.vars()) fail(Errc::malformed_input, "degree sequence length mismatch");
  const MonomialIdeal powers = power_ideal(d);
  if (!contains_ideal(ideal, powers)) return false;
  const int window = lpp_window(ideal, d);
  HilbertFunction h = hilbert_function(ideal, window);
  try {
    MonomialIdeal candidate = detail::build_segment_ideal(h, window, powers, /*pure_lex=*/false,
                                                          Errc::nonexistence);
    return candidate == ideal;
  } catch (const Error&) {
    return false;
  }
}

MonomialIdeal lpp_from_hf(const HilbertFunction& h, const DegreeSequence& d, int degree_bound) {
  if (h.convention() != HFConvention::of_quotient) {
    fail(Errc::malformed_input, "lpp_from_hf expects a quotient Hilbert function");
  }
  if (d.size() != h.vars()) fail(Errc::malformed_input, "degree sequence length mismatch");
  return detail::build_segment_ideal(h, degree_bound, power_ideal(d), /*pure_lex=*/false,
                                     Errc::nonexistence);
}

Remark31Report check_remark31(const MonomialIdeal& lpp_ideal, const DegreeSequence& d,
                              const std::vector<MonomialIdeal>& adversaries) {
  Remark31Report report;
  if (!is_lpp(lpp_ideal, d)) {
    report.precondition_violations.push_back("reference ideal is not d-LPP for d=" + d.str());
  }

  int component_window;
  int degree_window;
  if (d.all_finite()) {
    component_window = static_cast<int>(d.last()) - 1;
    degree_window = static_cast<int>(d.socle_degree());
  } else {
    int max_exp = 0;
    int max_deg = lpp_ideal.max_gen_degree();
    for (const Monomial& g : lpp_ideal.gens()) max_exp = std::max(max_exp, g.last_exponent());
    for (const MonomialIdeal& adversary : adversaries) {
      max_deg = std::max(max_deg, adversary.max_gen_degree());
      for (const Monomial& g : adversary.gens()) max_exp = std::max(max_exp, g.last_exponent());
    }
    component_window = max_exp + 1;
    degree_window = max_deg + component_window + 2;
  }
  report.component_window = component_window;
  report.degree_window = degree_window;

  XnDecomposition lpp_parts = decompose(lpp_ideal, component_window);
  HilbertFunction reference_hf = hilbert_function(lpp_ideal, degree_window);

  for (std::size_t a = 0; a < adversaries.size(); ++a) {
    const MonomialIdeal& adversary = adversaries[a];
    if (!is_spp(adversary, d)) {
      report.precondition_violations.push_back("adversary #" + std::to_string(a) +
                                               " is not d-SPP for d=" + d.str());
      continue;
    }
    if (hilbert_function(adversary, degree_window).values() != reference_hf.values()) {
      report.precondition_violations.push_back("adversary #" + std::to_string(a) +
                                               " has a different Hilbert function");
      continue;
    }
    XnDecomposition adv_parts = decompose(adversary, component_window);
    for (int i = 0; i <= component_window; ++i) {
      for (int p = 0; p <= degree_window; ++p) {
        long long adv_sum = 0;
        long long lpp_sum = 0;
        for (int j = 0; j <= i; ++j) {
          if (p - j < 0) continue;
          adv_sum += dim_of_degree(adv_parts.component(j), p - j);
          lpp_sum += dim_of_degree(lpp_parts.component(j), p - j);
        }
        if (adv_sum < lpp_sum) {
          report.violations.push_back({a, i, p, adv_sum, lpp_sum});
        }
      }
    }
  }
  return report;
}

}  // namespace lexpow
