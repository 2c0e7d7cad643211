#include "rh3/integers.hpp"

#include <cmath>
#include <stdexcept>

namespace rh3 {

bool is_squarefree(long long n) {
  if (n <= 0) throw std::invalid_argument("is_squarefree: n must be positive");
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

std::vector<std::pair<long long, int>> factor(long long n) {
  if (n <= 0) throw std::invalid_argument("factor: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(long long n, long long p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long isqrt_ll(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt_ll: negative input");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_ll(long long n) {
  if (n < 0) return false;
  long long r = isqrt_ll(n);
  return r * r == n;
}

long long icbrt(long long n) {
  if (n < 0) throw std::invalid_argument("icbrt: negative input");
  long long r = static_cast<long long>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && r * r * r > n) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_cube(long long n, long long& root) {
  if (n < 0) return false;
  long long r = icbrt(n);
  if (r * r * r == n) {
    root = r;
    return true;
  }
  return false;
}

}  // namespace rh3
