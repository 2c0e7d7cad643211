#ifndef RH3_GROUP_RING_HPP
#define RH3_GROUP_RING_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace rh3 {

// Element of Z[sigma]/(Phi_p(sigma)) for an odd prime p, on the power basis
// 1, sigma, ..., sigma^{p-2}. Multiplication reduces by
// sigma^{p-1} = -(1 + sigma + ... + sigma^{p-2}), so nu = 1 + sigma + ... +
// sigma^{p-1} is the zero element of the quotient.
struct GroupRingElement {
  int p = 3;
  std::vector<mpz_class> c;  // p-1 coefficients

  bool operator==(const GroupRingElement& o) const { return p == o.p && c == o.c; }
  std::string to_string() const;  // e.g. "(-1, -2)"
};

GroupRingElement gr_zero(int p);
GroupRingElement gr_one(int p);
GroupRingElement gr_sigma(int p);

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);

// omega = sigma(sigma - 1); for p = 3 this is -1 - 2 sigma and omega^2 = -3.
GroupRingElement omega(int p);
GroupRingElement omega_power(int p, int m);

// Matrix of multiplication by x on the power basis: column i holds the
// coefficients of x * sigma^i. Rows and columns are indexed 0..p-2.
std::vector<std::vector<mpz_class>> multiplication_matrix(const GroupRingElement& x);

}  // namespace rh3

#endif
