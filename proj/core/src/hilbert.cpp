#include "lexpow/hilbert.hpp"

#include <numeric>

#include "lexpow/binomial.hpp"
#include "lexpow/errors.hpp"

namespace lexpow {

HilbertFunction::HilbertFunction(HFConvention convention, int n, std::vector<long long> values,
                                 Tail tail)
    : convention_(convention), n_(n), values_(std::move(values)), tail_(tail) {
  if (values_.empty()) fail(Errc::malformed_input, "Hilbert function needs at least h_0");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 0) fail(Errc::range, "negative Hilbert function value");
    if (convention_ == HFConvention::of_quotient &&
        count_monomials_z(n_, static_cast<int>(j)) < static_cast<long>(values_[j])) {
      fail(Errc::range, "quotient Hilbert function exceeds the ambient dimension at degree " +
                            std::to_string(j));
    }
  }
  if (tail_.kind == Tail::Kind::constant && values_.back() != tail_.value) {
    fail(Errc::range, "constant tail must match the last window value");
  }
}

long long HilbertFunction::value(int j) const {
  if (j < 0) fail(Errc::range, "negative degree");
  if (j < static_cast<int>(values_.size())) return values_[static_cast<std::size_t>(j)];
  switch (tail_.kind) {
    case Tail::Kind::zero:
      return 0;
    case Tail::Kind::constant:
      return tail_.value;
    case Tail::Kind::unspecified:
      fail(Errc::range, "Hilbert function not specified beyond degree " +
                            std::to_string(degree_bound()));
  }
  return 0;  // unreachable
}

std::vector<std::optional<int>> pure_power_exponents(const MonomialIdeal& ideal) {
  std::vector<std::optional<int>> powers(static_cast<std::size_t>(ideal.vars()));
  for (const Monomial& g : ideal.gens()) {
    int idx = g.max_index();
    if (idx < 0) {  // unit ideal: x_i^0 in I for every i
      for (auto& p : powers) p = p ? std::min(*p, 0) : 0;
      continue;
    }
    bool pure = true;
    for (int i = 0; i < g.vars(); ++i) {
      if (i != idx && g.exponent(i) > 0) {
        pure = false;
        break;
      }
    }
    if (!pure) continue;
    int e = g.exponent(idx);
    auto& slot = powers[static_cast<std::size_t>(idx)];
    slot = slot ? std::min(*slot, e) : e;
  }
  return powers;
}

HilbertFunction hilbert_function(const MonomialIdeal& ideal, int degree_bound) {
  if (degree_bound < 0) fail(Errc::range, "negative degree bound");
  std::vector<long long> values;
  values.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int j = 0; j <= degree_bound; ++j) {
    values.push_back(count_monomials(ideal.vars(), j) - dim_of_degree(ideal, j));
  }
  Tail tail = Tail::unspecified();
  auto powers = pure_power_exponents(ideal);
  bool artinian = true;
  long long socle_bound = 0;  // HF(S/I) vanishes beyond sum(e_i - 1)
  for (const auto& p : powers) {
    if (!p) {
      artinian = false;
      break;
    }
    socle_bound += *p - 1;
  }
  if (artinian && degree_bound >= socle_bound) tail = Tail::zero();
  return HilbertFunction(HFConvention::of_quotient, ideal.vars(), std::move(values), tail);
}

}  // namespace lexpow
