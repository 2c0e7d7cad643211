#include "rh3/group_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace rh3 {

static void check_p(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("group ring needs an odd prime p");
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0) throw std::invalid_argument("group ring needs an odd prime p");
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c[i].get_str();
  }
  os << ")";
  return os.str();
}

GroupRingElement gr_zero(int p) {
  check_p(p);
  return {p, std::vector<mpz_class>(p - 1, mpz_class(0))};
}

GroupRingElement gr_one(int p) {
  GroupRingElement x = gr_zero(p);
  x.c[0] = 1;
  return x;
}

GroupRingElement gr_sigma(int p) {
  GroupRingElement x = gr_zero(p);
  x.c[1] = 1;
  return x;
}

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.p != y.p) throw std::invalid_argument("group ring: mixed p");
  GroupRingElement z = x;
  for (size_t i = 0; i < z.c.size(); ++i) z.c[i] += y.c[i];
  return z;
}

GroupRingElement gr_sub(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.p != y.p) throw std::invalid_argument("group ring: mixed p");
  GroupRingElement z = x;
  for (size_t i = 0; i < z.c.size(); ++i) z.c[i] -= y.c[i];
  return z;
}

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.p != y.p) throw std::invalid_argument("group ring: mixed p");
  const int n = x.p - 1;
  std::vector<mpz_class> v(2 * n - 1, mpz_class(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) v[i + k] += x.c[i] * y.c[k];
  // reduce sigma^m for m >= p-1 by sigma^{p-1} = -(1 + sigma + ... + sigma^{p-2})
  for (int m = 2 * n - 2; m >= n; --m) {
    mpz_class t = v[m];
    if (t == 0) continue;
    v[m] = 0;
    for (int i = 0; i < n; ++i) v[m - n + i] -= t;
  }
  GroupRingElement z = gr_zero(x.p);
  for (int i = 0; i < n; ++i) z.c[i] = v[i];
  return z;
}

GroupRingElement omega(int p) {
  // sigma(sigma - 1) = sigma^2 - sigma
  GroupRingElement s = gr_sigma(p);
  return gr_sub(gr_mul(s, s), s);
}

GroupRingElement omega_power(int p, int m) {
  if (m < 0) throw std::invalid_argument("omega_power: m must be non-negative");
  GroupRingElement r = gr_one(p);
  GroupRingElement w = omega(p);
  for (int i = 0; i < m; ++i) r = gr_mul(r, w);
  return r;
}

std::vector<std::vector<mpz_class>> multiplication_matrix(const GroupRingElement& x) {
  const int n = x.p - 1;
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n, mpz_class(0)));
  GroupRingElement b = gr_one(x.p);
  for (int j = 0; j < n; ++j) {
    GroupRingElement col = gr_mul(x, b);
    for (int i = 0; i < n; ++i) M[i][j] = col.c[i];
    b = gr_mul(b, gr_sigma(x.p));
  }
  return M;
}

}  // namespace rh3
