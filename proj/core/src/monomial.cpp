#include "lexpow/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "lexpow/errors.hpp"

namespace lexpow {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) fail(Errc::malformed_input, "negative exponent in monomial");
  }
}

Monomial Monomial::unit(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Monomial Monomial::variable(int index, int n, int e) {
  if (index < 0 || index >= n) fail(Errc::range, "variable index out of range");
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(index)] = e;
  return Monomial(std::move(exps));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in divides");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in times");
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::times_variable(int index) const {
  std::vector<int> exps(exps_);
  exps.at(static_cast<std::size_t>(index)) += 1;
  return Monomial(std::move(exps));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in divided_by");
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] -= other.exps_[i];
    if (exps[i] < 0) fail(Errc::range, "inexact monomial division");
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::colon_by(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in colon_by");
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(exps[i] - other.exps_[i], 0);
  return Monomial(std::move(exps));
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in lcm");
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(exps[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

Monomial Monomial::gcd_with(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) fail(Errc::malformed_input, "ambient mismatch in gcd");
  std::vector<int> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(exps[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

int Monomial::max_index() const {
  for (int i = static_cast<int>(exps_.size()) - 1; i >= 0; --i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  }
  return -1;
}

Monomial Monomial::strip_last() const {
  if (exps_.empty()) fail(Errc::range, "strip_last on a 0-variable monomial");
  return Monomial(std::vector<int>(exps_.begin(), exps_.end() - 1));
}

Monomial Monomial::append_exponent(int e) const {
  std::vector<int> exps(exps_);
  exps.push_back(e);
  return Monomial(std::move(exps));
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars()) fail(Errc::malformed_input, "ambient mismatch in lex_compare");
  for (int i = 0; i < u.vars(); ++i) {
    if (u.exponent(i) != v.exponent(i)) {
      return u.exponent(i) > v.exponent(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void emit_monomials(int remaining_vars, int remaining_degree, std::vector<int>& prefix,
                    std::vector<Monomial>& out) {
  if (remaining_vars == 1) {
    prefix.push_back(remaining_degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining_degree; e >= 0; --e) {
    prefix.push_back(e);
    emit_monomials(remaining_vars - 1, remaining_degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int j) {
  if (j < 0) fail(Errc::range, "negative degree");
  std::vector<Monomial> out;
  if (n == 0) {
    if (j == 0) out.push_back(Monomial::unit(0));
    return out;
  }
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  emit_monomials(n, j, prefix, out);
  return out;
}

}  // namespace lexpow
