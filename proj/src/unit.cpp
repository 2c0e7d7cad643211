#include "rh3/unit.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "rh3/integers.hpp"

namespace rh3 {

namespace {

constexpr long long kMaxPeriodSteps = 100'000'000;

void check_real_fundamental(long long D, long long bound) {
  if (D <= 0) throw std::invalid_argument("expected a positive discriminant");
  if (D > bound) throw std::invalid_argument("discriminant beyond configured bound");
  if (is_square_ll(D)) throw std::invalid_argument("discriminant is a square");
  if (!is_fundamental_discriminant(D)) throw std::invalid_argument("discriminant not fundamental");
}

// Reduced start state for the continued fraction of (P0 + sqrt(D))/Q0 generating
// the order Z[(D mod 2 + sqrt(D))/2]: P0 the largest integer <= sqrt(D) of the
// parity of D, Q0 = 2. Purely periodic since the value is reduced.
struct CfState {
  long long P, Q, sD;
};

CfState cf_start(long long D) {
  long long sD = isqrt_ll(D);
  long long P0 = sD;
  if (((P0 - D) % 2) != 0) --P0;
  return {P0, 2, sD};
}

}  // namespace

int unit_norm_sign(long long D) {
  check_real_fundamental(D, kDefaultDiscriminantBound);
  CfState s = cf_start(D);
  long long P = s.P, Q = s.Q;
  long long steps = 0;
  while (true) {
    long long a = (P + s.sD) / Q;
    long long Pn = a * Q - P;
    long long Qn = (D - Pn * Pn) / Q;
    ++steps;
    if (steps > kMaxPeriodSteps) throw std::runtime_error("continued fraction failed to cycle");
    if (Pn == s.P && Qn == s.Q) break;
    P = Pn;
    Q = Qn;
  }
  return (steps % 2) ? -1 : 1;
}

FundamentalUnit fundamental_unit(long long D, long long bound) {
  check_real_fundamental(D, bound);
  CfState s = cf_start(D);
  long long P = s.P, Q = s.Q;
  // convergent denominators q_{i}: q_{-2} = 1, q_{-1} = 0
  mpz_class q_prev = 1, q_cur = 0;
  long long steps = 0;
  while (true) {
    long long a = (P + s.sD) / Q;
    mpz_class q_next = to_mpz(a) * q_cur + q_prev;
    q_prev = q_cur;
    q_cur = q_next;
    long long Pn = a * Q - P;
    long long Qn = (D - Pn * Pn) / Q;
    ++steps;
    if (steps > kMaxPeriodSteps) throw std::runtime_error("continued fraction failed to cycle");
    if (Pn == s.P && Qn == s.Q) break;
    P = Pn;
    Q = Qn;
  }
  // eps = q_{l-1} * (P0 + sqrt(D))/2 + q_{l-2} = (X + Y sqrt(D))/2
  mpz_class X = q_cur * to_mpz(s.P) + 2 * q_prev;
  mpz_class Y = q_cur;
  int norm = (steps % 2) ? -1 : 1;

  FundamentalUnit eps;
  eps.norm_sign = norm;
  if (X % 2 == 0 && Y % 2 == 0) {
    eps.x = X / 2;
    eps.y = Y / 2;
    eps.half = false;
    if (eps.x * eps.x - to_mpz(D) * eps.y * eps.y != norm)
      throw std::logic_error("fundamental_unit: Pell identity failed");
  } else {
    eps.x = X;
    eps.y = Y;
    eps.half = true;
    if (eps.x * eps.x - to_mpz(D) * eps.y * eps.y != 4 * norm)
      throw std::logic_error("fundamental_unit: Pell identity failed");
  }
  return eps;
}

namespace {

int mod9(const mpz_class& v) {
  mpz_class r = v % 9;
  if (r < 0) r += 9;
  return static_cast<int>(r.get_si());
}

// Multiplication in (Z/9)[w] with w^2 = sigma*w + c.
std::pair<int, int> mul9(std::pair<int, int> x, std::pair<int, int> y, int sigma, int c) {
  int a = x.first, b = x.second, d = y.first, e = y.second;
  int u = (a * d + b * e % 9 * c) % 9;
  int v = (a * e + b * d + b * e % 9 * sigma) % 9;
  return {u % 9, v % 9};
}

struct Ring9 {
  int sigma, c;
  explicit Ring9(long long D) {
    sigma = static_cast<int>(((D % 2) + 2) % 2);
    long long cc = (D - sigma) / 4;  // sigma^2 = sigma for sigma in {0,1}
    c = static_cast<int>(((cc % 9) + 9) % 9);
  }
  std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
    auto r = mul9(x, y, sigma, c);
    return {(r.first + 9) % 9, (r.second + 9) % 9};
  }
  bool is_unit(std::pair<int, int> x) const {
    // norm to Z/9: x * conj(x) with conj(w) = sigma - w
    int a = x.first, b = x.second;
    int n = (a * a + sigma * a * b - c * b * b) % 9;
    n = ((n % 9) + 9) % 9;
    return n % 3 != 0;
  }
};

}  // namespace

std::pair<int, int> residue_mod9(const FundamentalUnit& eps, long long D) {
  mpz_class X = eps.x, Y = eps.y;
  if (!eps.half) {
    X *= 2;
    Y *= 2;
  }
  int sigma = static_cast<int>(((D % 2) + 2) % 2);
  // eps = (X + Y sqrt(D))/2 and sqrt(D) = 2w - sigma, so eps = (X - sigma Y)/2 + Y w.
  mpz_class u2 = X - sigma * Y;
  if (u2 % 2 != 0) throw std::logic_error("residue_mod9: non-integral coordinate");
  return {mod9(u2 / 2), mod9(Y)};
}

bool is_cube_residue_mod9(std::pair<int, int> r, long long D) {
  if (D <= 0) throw std::invalid_argument("expected a positive discriminant");
  Ring9 ring(D);
  r = {((r.first % 9) + 9) % 9, ((r.second % 9) + 9) % 9};
  if (!ring.is_unit(r))
    throw std::invalid_argument("residue shares a factor with 3: not a unit mod 9");
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      std::pair<int, int> g{a, b};
      if (!ring.is_unit(g)) continue;
      if (ring.mul(ring.mul(g, g), g) == r) return true;
    }
  return false;
}

bool is_3_primary(const FundamentalUnit& eps, long long D) {
  return is_cube_residue_mod9(residue_mod9(eps, D), D);
}

}  // namespace rh3
