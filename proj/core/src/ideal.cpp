#include "lexpow/ideal.hpp"

#include <algorithm>

#include "lexpow/errors.hpp"

namespace lexpow {

MonomialIdeal MonomialIdeal::unit(int n) {
  MonomialIdeal ideal(n);
  ideal.gens_.push_back(Monomial::unit(n));
  return ideal;
}

int MonomialIdeal::max_gen_degree() const {
  int best = 0;
  for (const Monomial& g : gens_) best = std::max(best, g.degree());
  return best;
}

MonomialIdeal normalize(std::vector<Monomial> gens, int n) {
  for (const Monomial& g : gens) {
    if (g.vars() != n) fail(Errc::malformed_input, "generator has wrong exponent length");
  }
  std::sort(gens.begin(), gens.end(), lex_greater);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : minimal) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  // A divisor of g either precedes g in lex order or divides it with equal
  // degree (impossible for distinct monomials), so one forward pass suffices.
  MonomialIdeal ideal(n);
  ideal.gens_ = std::move(minimal);
  return ideal;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.vars() != ideal.vars()) fail(Errc::malformed_input, "ambient mismatch in contains");
  for (const Monomial& g : ideal.gens()) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool contains_ideal(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  for (const Monomial& g : sub.gens()) {
    if (!contains(ideal, g)) return false;
  }
  return true;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) fail(Errc::malformed_input, "ambient mismatch in sum");
  std::vector<Monomial> gens(a.gens());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return normalize(std::move(gens), a.vars());
}

MonomialIdeal sum(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> gens(a.gens());
  gens.push_back(m);
  return normalize(std::move(gens), a.vars());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) fail(Errc::malformed_input, "ambient mismatch in intersect");
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) gens.push_back(u.lcm_with(v));
  }
  return normalize(std::move(gens), a.vars());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const Monomial& m : ideal.gens()) gens.push_back(m.colon_by(g));
  return normalize(std::move(gens), ideal.vars());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
  if (ideal.vars() != divisor.vars()) fail(Errc::malformed_input, "ambient mismatch in colon");
  if (divisor.is_zero()) fail(Errc::undefined_colon, "colon by the zero ideal");
  bool first = true;
  MonomialIdeal result;
  for (const Monomial& g : divisor.gens()) {
    MonomialIdeal part = colon(ideal, g);
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

std::vector<Monomial> elements_of_degree(const MonomialIdeal& ideal, int j) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(ideal.vars(), j)) {
    if (contains(ideal, m)) out.push_back(m);
  }
  return out;
}

long long dim_of_degree(const MonomialIdeal& ideal, int j) {
  long long count = 0;
  for (const Monomial& m : monomials_of_degree(ideal.vars(), j)) {
    if (contains(ideal, m)) ++count;
  }
  return count;
}

}  // namespace lexpow
