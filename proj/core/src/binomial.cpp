#include "lexpow/binomial.hpp"

#include <limits>

#include "lexpow/errors.hpp"

namespace lexpow {

mpz_class binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return result;
}

mpz_class count_monomials_z(int n, int j) {
  if (j < 0) return 0;
  if (n == 0) return j == 0 ? 1 : 0;
  return binomial(n - 1 + static_cast<long long>(j), j);
}

long long to_long_checked(const mpz_class& v) {
  if (!v.fits_slong_p()) fail(Errc::range, "exact value exceeds long long: " + v.get_str());
  return v.get_si();
}

long long count_monomials(int n, int j) { return to_long_checked(count_monomials_z(n, j)); }

}  // namespace lexpow
