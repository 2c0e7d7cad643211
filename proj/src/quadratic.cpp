#include "rh3/quadratic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rh3/integers.hpp"
#include "rh3/unit.hpp"

namespace rh3 {

bool is_fundamental_discriminant(long long D) {
  if (D == 0 || D == 1) return false;
  long long m = D % 4;
  if (m < 0) m += 4;
  if (m == 1) return is_squarefree(D < 0 ? -D : D);
  if (m != 0) return false;
  long long q = D / 4;
  long long qm = q % 4;
  if (qm < 0) qm += 4;
  if (qm != 2 && qm != 3) return false;
  return is_squarefree(q < 0 ? -q : q);
}

std::pair<long long, long long> discriminants(long long d) {
  if (d <= 0) throw std::invalid_argument("discriminants: d must be positive");
  if (!is_squarefree(d)) throw std::invalid_argument("discriminants: d must be squarefree");
  if (d % 3 == 0) throw std::invalid_argument("discriminants: 3 must not divide d");
  // -d mod 4 == 1  <=>  d == 3 mod 4
  long long Dm = (d % 4 == 3) ? -d : -4 * d;
  long long t = 3 * d;
  long long Dp = (t % 4 == 1) ? t : 4 * t;
  return {Dm, Dp};
}

static void check_definite(long long D, long long bound) {
  if (D >= 0) throw std::invalid_argument("expected negative discriminant");
  if (-D > bound) throw std::invalid_argument("discriminant beyond configured bound");
  if (!is_fundamental_discriminant(D)) throw std::invalid_argument("discriminant not fundamental");
}

std::vector<Form> reduced_definite_forms(long long D) {
  std::vector<Form> out;
  long long bmax = isqrt_ll((-D) / 3);
  for (long long B = 0; B <= bmax; ++B) {
    if (((B * B - D) % 4) != 0) continue;
    long long AC = (B * B - D) / 4;
    for (long long A = std::max<long long>(B, 1); A * A <= AC; ++A) {
      if (AC % A) continue;
      long long C = AC / A;
      // reduced: |B| <= A <= C with B >= 0 whenever |B| == A or A == C
      out.push_back({A, B, C});
      if (B > 0 && B < A && A < C) out.push_back({A, -B, C});
    }
  }
  return out;
}

Form principal_form(long long D) {
  long long B = ((D % 2) + 2) % 2;
  return {1, B, (B * B - D) / 4};
}

Form reduce_definite(Form f) {
  long long D = f.discriminant();
  auto normalize = [&]() {
    long long r = ((f.b % (2 * f.a)) + 2 * f.a) % (2 * f.a);
    if (r > f.a) r -= 2 * f.a;
    f.b = r;
    f.c = (f.b * f.b - D) / (4 * f.a);
  };
  normalize();
  while (f.a > f.c) {
    f = {f.c, -f.b, f.a};
    normalize();
  }
  if ((f.a == f.c || f.a == f.b || f.a == -f.b) && f.b < 0) f.b = -f.b;
  return f;
}

// g = gcd(a,b) = u*a + v*b
static long long xgcd(long long a, long long b, long long& u, long long& v) {
  long long old_r = a, r = b, old_u = 1, cu = 0, old_v = 0, cv = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * cu;
    old_u = cu;
    cu = t;
    t = old_v - q * cv;
    old_v = cv;
    cv = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  u = old_u;
  v = old_v;
  return old_r;
}

Form compose_definite(const Form& f1, const Form& f2) {
  // Cohen, Algorithm 5.4.7.
  long long a1 = f1.a, b1 = f1.b;
  long long a2 = f2.a, b2 = f2.b, c2 = f2.c;
  if (a1 > a2) {
    a1 = f2.a;
    b1 = f2.b;
    a2 = f1.a;
    b2 = f1.b;
    c2 = f1.c;
  }
  long long s = (b1 + b2) / 2;
  long long n = b2 - s;
  long long y1, d;
  if (a2 % a1 == 0) {
    y1 = 0;
    d = a1;
  } else {
    long long u, v;
    d = xgcd(a2, a1, u, v);
    y1 = u;
  }
  long long x2, y2, d1;
  if (s % d == 0) {
    x2 = 0;
    y2 = -1;
    d1 = d;
  } else {
    long long u, v;
    d1 = xgcd(s, d, u, v);
    x2 = u;
    y2 = -v;
  }
  long long v1 = a1 / d1;
  long long v2 = a2 / d1;
  long long r = ((y1 * y2 % v1) * (n % v1) % v1 - x2 * (c2 % v1) % v1) % v1;
  if (r < 0) r += v1;
  long long b3 = b2 + 2 * v2 * r;
  long long a3 = v1 * v2;
  long long c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
  return reduce_definite({a3, b3, c3});
}

Form form_power(const Form& f, long long k, long long D) {
  Form result = principal_form(D);
  Form base = reduce_definite(f);
  while (k > 0) {
    if (k & 1) result = reduce_definite(compose_definite(result, base));
    base = reduce_definite(compose_definite(base, base));
    k >>= 1;
  }
  return result;
}

long long class_number(long long D, long long bound) {
  if (D < 0) {
    check_definite(D, bound);
    return static_cast<long long>(reduced_definite_forms(D).size());
  }
  if (D <= 0 || is_square_ll(D)) throw std::invalid_argument("expected a nonsquare discriminant");
  if (D > bound) throw std::invalid_argument("discriminant beyond configured bound");
  if (!is_fundamental_discriminant(D)) throw std::invalid_argument("discriminant not fundamental");
  long long narrow = narrow_class_number(D);
  return unit_norm_sign(D) == 1 ? narrow / 2 : narrow;
}

AbelianStructure class_group_structure(long long D, long long bound) {
  check_definite(D, bound);
  std::vector<Form> forms = reduced_definite_forms(D);
  long long h = static_cast<long long>(forms.size());
  Form one = principal_form(D);
  std::vector<long long> divisors;
  for (auto [p, e] : factor(h)) {
    // lambda_k = log_p #{f : f^(p^k) = 1}; cyclic factors of order >= p^k number
    // lambda_k - lambda_{k-1}, which pins the partition.
    std::vector<int> lam(e + 2, 0);
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      long long cnt = 0;
      for (const Form& f : forms)
        if (form_power(f, pk, D) == one) ++cnt;
      int lg = 0;
      long long c = cnt;
      while (c > 1) {
        if (c % p) throw std::logic_error("class_group_structure: count not a p-power");
        c /= p;
        ++lg;
      }
      lam[k] = lg;
    }
    for (int k = 1; k <= e; ++k) {
      int atleast_k = lam[k] - lam[k - 1];
      int atleast_k1 = (k + 1 <= e) ? lam[k + 1] - lam[k] : 0;
      int mult = atleast_k - atleast_k1;
      long long q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      for (int i = 0; i < mult; ++i) divisors.push_back(q);
    }
  }
  return AbelianStructure(divisors);
}

std::vector<Form> reduced_indefinite_forms(long long D) {
  std::vector<Form> out;
  long long sD = isqrt_ll(D);
  for (long long B = 1; B <= sD; ++B) {
    if (((D - B * B) % 4) != 0) continue;
    long long M = (D - B * B) / 4;
    if (M <= 0) continue;
    for (long long a = 1; a * a <= M; ++a) {
      if (M % a) continue;
      for (long long A : {a, M / a}) {
        // sqrt(D) - B < 2A < sqrt(D) + B, exactly:
        bool lo = (2 * A + B) * (2 * A + B) > D;
        bool hi = (2 * A - B) < 0 || (2 * A - B) * (2 * A - B) < D;
        if (lo && hi) {
          long long C = (B * B - D) / (4 * A);
          out.push_back({A, B, C});
          out.push_back({-A, B, -C});
        }
        if (a * a == M) break;  // avoid the duplicate divisor pair
      }
    }
  }
  return out;
}

Form rho_indefinite(const Form& f, long long D) {
  long long c = f.c;
  long long cc = c < 0 ? -c : c;
  long long sD = isqrt_ll(D);
  long long r = ((-f.b) % (2 * cc) + 2 * cc) % (2 * cc);
  if (cc > sD) {
    if (r > cc) r -= 2 * cc;
  } else {
    // place r in (sqrt(D) - 2|c|, sqrt(D))
    while (r > sD) r -= 2 * cc;
    while (r + 2 * cc <= sD) r += 2 * cc;
  }
  return {c, r, (r * r - D) / (4 * c)};
}

long long narrow_class_number(long long D) {
  std::vector<Form> forms = reduced_indefinite_forms(D);
  std::set<Form> all(forms.begin(), forms.end());
  std::set<Form> seen;
  long long cycles = 0;
  for (const Form& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    Form g = f;
    do {
      seen.insert(g);
      g = rho_indefinite(g, D);
      if (!all.count(g)) throw std::logic_error("rho left the reduced set");
    } while (!(g == f));
  }
  return cycles;
}

}  // namespace rh3
