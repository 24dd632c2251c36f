#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace lexpow {

// C(a, b) exactly; 0 when b < 0 or a < b. a, b are small but the value may not be.
mpz_class binomial(long long a, long long b);

// Number of degree-j monomials in n variables: C(n-1+j, j), with the n = 0
// corner (the field itself) handled explicitly.
mpz_class count_monomials_z(int n, int j);

// Same, narrowed to long long. Throws Errc::range on overflow.
long long count_monomials(int n, int j);

long long to_long_checked(const mpz_class& v);

}  // namespace lexpow
