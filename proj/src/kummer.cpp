#include "rh3/kummer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rh3/integers.hpp"

namespace rh3 {

std::optional<KummerCandidate> make_candidate(long long d, long long a, long long b) {
  if (d <= 0 || d % 3 == 0 || !is_squarefree(d))
    throw std::invalid_argument("make_candidate: d must be positive, squarefree, prime to 3");
  if (a <= 0 || b <= 0) throw std::invalid_argument("make_candidate: a, b must be positive");
  if (std::gcd(a, b) != 1) return std::nullopt;
  KummerCandidate c;
  c.d = d;
  c.a = a;
  c.b = b;
  // -d = 1 (mod 4) and a, b odd: alpha = (a + b sqrt(-d))/2 is an algebraic integer.
  c.half = d % 4 == 3 && a % 2 == 1 && b % 2 == 1;
  if (c.half) {
    c.T = a;
    c.N = (a * a + d * b * b) / 4;
  } else {
    c.T = 2 * a;
    c.N = a * a + d * b * b;
  }
  long long r;
  if (!is_perfect_cube(c.N, r)) return std::nullopt;
  c.cube_root = r;
  return c;
}

std::vector<KummerCandidate> search_alpha(long long d, long long a_max, long long b_max) {
  if (a_max <= 0 || b_max <= 0) throw std::invalid_argument("search_alpha: empty box");
  std::vector<KummerCandidate> out;
  for (long long b = 1; b <= b_max; ++b)
    for (long long a = 1; a <= a_max; ++a)
      if (auto c = make_candidate(d, a, b)) out.push_back(*c);
  return out;
}

IntegerPolynomial build_sextic(const KummerCandidate& c) {
  std::vector<mpz_class> q(7, mpz_class(0));
  q[0] = to_mpz(c.N);
  q[3] = to_mpz(-c.T);
  q[6] = 1;
  return IntegerPolynomial(std::move(q));
}

namespace {

// Z[j], j^2 = -1 - j (j a primitive cube root of unity).
struct Zj {
  mpz_class u, v;  // u + v*j
};

Zj zj_mul(const Zj& x, const Zj& y) {
  // (u1 + v1 j)(u2 + v2 j) = u1 u2 - v1 v2 + (u1 v2 + v1 u2 - v1 v2) j
  mpz_class w = x.v * y.v;
  return {x.u * y.u - w, x.u * y.v + x.v * y.u - w};
}

}  // namespace

IntegerPolynomial compositum(const IntegerPolynomial& sextic) {
  if (sextic.degree() != 6 || !sextic.monic())
    throw std::invalid_argument("compositum: expected a monic sextic");
  // S(x) = Q(x + j) by Horner over Z[j][x].
  std::vector<Zj> s;
  for (int k = sextic.degree(); k >= 0; --k) {
    // s <- s*(x + j) + Q_k
    std::vector<Zj> next(s.size() + 1, Zj{0, 0});
    for (size_t i = 0; i < s.size(); ++i) {
      next[i + 1].u += s[i].u;
      next[i + 1].v += s[i].v;
      Zj t = zj_mul(s[i], Zj{0, 1});
      next[i].u += t.u;
      next[i].v += t.v;
    }
    if (next.empty()) next.push_back(Zj{0, 0});
    next[0].u += sextic.coeff(k);
    s = std::move(next);
  }
  // Conjugation j -> -1 - j: u + v j -> (u - v) - v j.
  std::vector<Zj> sbar(s.size());
  for (size_t i = 0; i < s.size(); ++i) sbar[i] = {s[i].u - s[i].v, -s[i].v};
  std::vector<Zj> prod(s.size() + sbar.size() - 1, Zj{0, 0});
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t k = 0; k < sbar.size(); ++k) {
      Zj t = zj_mul(s[i], sbar[k]);
      prod[i + k].u += t.u;
      prod[i + k].v += t.v;
    }
  std::vector<mpz_class> p(prod.size());
  for (size_t i = 0; i < prod.size(); ++i) {
    if (prod[i].v != 0) throw std::logic_error("compositum: product not conjugation-fixed");
    p[i] = prod[i].u;
  }
  return IntegerPolynomial(std::move(p));
}

PlausibilityReport plausibility_check(const IntegerPolynomial& P) {
  PlausibilityReport r;
  r.monic_degree_12 = P.degree() == 12 && P.monic();
  r.universal_coefficients = P.coeff(11) == -6 && P.coeff(10) == 21;
  if (!P.zero()) {
    IntegerPolynomial g = poly_gcd(P, derivative(P));
    r.squarefree = g.degree() == 0;
  }
  if (!r.squarefree || P.degree() <= 0) return r;

  static const long long primes[] = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73};
  for (long long q : primes) {
    if (!squarefree_mod(P, q)) continue;  // q divides disc(P); pattern undefined
    r.degree_patterns.emplace_back(q, factor_degree_pattern(P, q));
    if (r.degree_patterns.size() == 4) break;
  }
  r.patterns_uniform = !r.degree_patterns.empty();
  for (const auto& [q, pat] : r.degree_patterns)
    if (std::set<int>(pat.begin(), pat.end()).size() != 1) r.patterns_uniform = false;

  // A proper factor over Z of degree m forces a subset of every modular pattern
  // to sum to m; degrees with no such subset for some prime are excluded.
  std::vector<bool> possible(P.degree(), true);  // index m, 1 <= m < degree
  for (const auto& [q, pat] : r.degree_patterns) {
    std::vector<bool> sums(P.degree() + 1, false);
    sums[0] = true;
    for (int part : pat)
      for (int s = P.degree() - part; s >= 0; --s)
        if (sums[s]) sums[s + part] = true;
    for (int m = 1; m < P.degree(); ++m)
      if (!sums[m]) possible[m] = false;
  }
  for (int m = 1; m < P.degree(); ++m)
    if (possible[m]) r.unexcluded_factor_degrees.push_back(m);
  return r;
}

bool has_rational_prime_divisor(const KummerCandidate& c) {
  for (const auto& [l, e] : factor(c.cube_root)) {
    (void)e;
    if (c.a % l == 0 && c.b % l == 0) return true;
    // 2 can divide alpha = a + b sqrt(-d) without dividing a and b when the ring
    // of integers is Z[(1+sqrt(-d))/2], i.e. -d = 1 (mod 4) and a = b (mod 2).
    if (l == 2 && !c.half && c.d % 4 == 3 && (c.a - c.b) % 2 == 0) return true;
  }
  return false;
}

std::optional<bool> cube_root_class_is_nonprincipal(const KummerCandidate& c) {
  const long long Dm = c.d % 4 == 3 ? -c.d : -4 * c.d;
  // alpha = (T + Y sqrt(Dm))/2 on the discriminant basis.
  const long long Y = c.d % 4 == 3 ? (c.half ? c.b : 2 * c.b) : c.b;
  Form cls = principal_form(Dm);
  for (const auto& [l, e] : factor(c.cube_root)) {
    // Prime form (l, B) above l dividing alpha: B^2 = Dm (mod 4l) picks the forms
    // above l, and l | (T + Y B)/2 selects the branch containing alpha.
    std::optional<Form> pf;
    for (long long B = -2 * l + 1; B <= 2 * l && !pf; ++B) {
      if (((B * B - Dm) % (4 * l)) != 0) continue;
      long long num = c.T + Y * B;
      if (num % 2 != 0 || (num / 2) % l != 0) continue;
      pf = Form{l, B, (B * B - Dm) / (4 * l)};
    }
    if (!pf) return std::nullopt;  // l inert: rational-divisor situation
    cls = compose_definite(cls, form_power(*pf, e, Dm));
  }
  return !(cls == principal_form(Dm));
}

}  // namespace rh3
