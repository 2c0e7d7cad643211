#ifndef RH3_INTEGERS_HPP
#define RH3_INTEGERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rh3 {

// The platform gmpxx has no long long overloads, so every crossing between
// long long and mpz_class funnels through this widening (long is 64-bit here).
inline mpz_class to_mpz(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
  return mpz_class(static_cast<long>(v));
}

// Trial-division squarefree test. Intended for the sieve range (d up to ~10^6),
// where trial division is faster than anything clever.
bool is_squarefree(long long n);

// Factor n > 0 by trial division; returns (prime, exponent) pairs in increasing order.
std::vector<std::pair<long long, int>> factor(long long n);

// Exact p-adic valuation of n != 0.
int valuation(long long n, long long p);

// floor(cbrt(n)) for n >= 0.
long long icbrt(long long n);

// If n is a perfect cube, set root and return true.
bool is_perfect_cube(long long n, long long& root);

// floor(sqrt(n)) for n >= 0.
long long isqrt_ll(long long n);

bool is_square_ll(long long n);

}  // namespace rh3

#endif
