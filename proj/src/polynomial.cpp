#include "rh3/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rh3/integers.hpp"

namespace rh3 {

mpz_class IntegerPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[i];
}

void IntegerPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntegerPolynomial poly_add(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs.size(), b.coeffs.size()), mpz_class(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial poly_sub(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs.size(), b.coeffs.size()), mpz_class(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial poly_mul(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<mpz_class> out(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial derivative(const IntegerPolynomial& a) {
  if (a.degree() < 1) return {};
  std::vector<mpz_class> out(a.coeffs.size() - 1);
  for (size_t i = 1; i < a.coeffs.size(); ++i) out[i - 1] = mpz_class(i) * a.coeffs[i];
  return IntegerPolynomial(std::move(out));
}

mpz_class eval(const IntegerPolynomial& a, const mpz_class& x) {
  mpz_class v = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

mpz_class content(const IntegerPolynomial& a) {
  mpz_class g = 0;
  for (const auto& c : a.coeffs) {
    mpz_class ac = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ac.get_mpz_t());
  }
  return g;
}

IntegerPolynomial primitive_part(const IntegerPolynomial& a) {
  if (a.zero()) return a;
  mpz_class g = content(a);
  std::vector<mpz_class> out(a.coeffs.size());
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] = a.coeffs[i] / g;
  return IntegerPolynomial(std::move(out));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
static IntegerPolynomial pseudo_rem(IntegerPolynomial a, const IntegerPolynomial& b) {
  int db = b.degree();
  const mpz_class& lb = b.coeffs.back();
  while (!a.zero() && a.degree() >= db) {
    int da = a.degree();
    mpz_class la = a.coeffs.back();
    for (auto& c : a.coeffs) c *= lb;
    for (int i = 0; i <= db; ++i) a.coeffs[da - db + i] -= la * b.coeffs[i];
    a.normalize();
  }
  return a;
}

IntegerPolynomial poly_gcd(IntegerPolynomial a, IntegerPolynomial b) {
  if (a.zero()) std::swap(a, b);
  if (b.zero()) {
    if (a.zero()) return a;
    a = primitive_part(a);
    if (a.coeffs.back() < 0)
      for (auto& c : a.coeffs) c = -c;
    return a;
  }
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero()) {
    IntegerPolynomial r = pseudo_rem(a, b);
    if (!r.zero()) r = primitive_part(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.coeffs.back() < 0)
    for (auto& c : a.coeffs) c = -c;
  return a;
}

std::string to_polynomial_string(const IntegerPolynomial& p) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const mpz_class c = p.coeff(k);
    if (c == 0) continue;
    mpz_class m = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << m.get_str();
    } else {
      if (m != 1) os << m.get_str() << "*";
      os << "x";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

IntegerPolynomial parse_polynomial_string(const std::string& s) {
  // Terms separated by + / - at the top level; each term [m][*][x[^k]].
  std::vector<mpz_class> coeffs;
  auto add_term = [&](const mpz_class& c, int k) {
    if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, mpz_class(0));
    coeffs[k] += c;
  };
  size_t i = 0;
  const size_t n = s.size();
  auto skip_ws = [&]() {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  int sign = 1;
  if (i < n && (s[i] == '+' || s[i] == '-')) {
    sign = s[i] == '-' ? -1 : 1;
    ++i;
  }
  while (i < n) {
    skip_ws();
    std::string digits;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    skip_ws();
    if (i < n && s[i] == '*') {
      ++i;
      skip_ws();
    }
    int k = 0;
    if (i < n && s[i] == 'x') {
      ++i;
      k = 1;
      skip_ws();
      if (i < n && s[i] == '^') {
        ++i;
        skip_ws();
        std::string ed;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty()) throw std::invalid_argument("polynomial parse: missing exponent");
        k = std::stoi(ed);
      }
    }
    if (digits.empty() && k == 0) throw std::invalid_argument("polynomial parse: empty term");
    mpz_class m = digits.empty() ? mpz_class(1) : mpz_class(digits);
    add_term(sign * m, k);
    skip_ws();
    if (i >= n) break;
    if (s[i] == '+')
      sign = 1;
    else if (s[i] == '-')
      sign = -1;
    else
      throw std::invalid_argument(std::string("polynomial parse: unexpected '") + s[i] + "'");
    ++i;
  }
  return IntegerPolynomial(std::move(coeffs));
}

std::string to_coeff_list(const IntegerPolynomial& p) {
  std::ostringstream os;
  for (int k = p.degree(); k >= 0; --k) {
    if (k != p.degree()) os << ",";
    os << p.coeff(k).get_str();
  }
  return os.str();
}

IntegerPolynomial parse_coeff_list(const std::string& s) {
  std::vector<mpz_class> high_first;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    // trim
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("coefficient list: empty entry");
    high_first.emplace_back(cur.substr(b, e - b + 1));
  }
  std::vector<mpz_class> low_first(high_first.rbegin(), high_first.rend());
  return IntegerPolynomial(std::move(low_first));
}

// --- arithmetic mod a small odd prime, for degree patterns ---

namespace {

using ModPoly = std::vector<long long>;  // lowest degree first, coefficients in [0,q)

void mp_normalize(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly to_mod(const IntegerPolynomial& p, long long q) {
  ModPoly f(p.coeffs.size());
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    mpz_class r = p.coeffs[i] % to_mpz(q);
    if (r < 0) r += to_mpz(q);
    f[i] = r.get_si();
  }
  mp_normalize(f);
  return f;
}

long long inv_mod(long long a, long long q) {
  long long t = 0, newt = 1, r = q, newr = a % q;
  while (newr) {
    long long quot = r / newr;
    long long tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::logic_error("inv_mod: not invertible");
  return ((t % q) + q) % q;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long long q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  mp_normalize(out);
  return out;
}

ModPoly mp_mod(ModPoly a, const ModPoly& b, long long q) {
  long long linv = inv_mod(b.back(), q);
  while (a.size() >= b.size()) {
    long long factor = a.back() * linv % q;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * b[i]) % q + q) % q;
    mp_normalize(a);
    if (a.empty()) break;
  }
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long long q) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long long linv = inv_mod(a.back(), q);
    for (auto& c : a) c = c * linv % q;
  }
  return a;
}

ModPoly mp_powmod_x(long long e, const ModPoly& f, long long q, const ModPoly& base) {
  // base^e mod f by square and multiply
  ModPoly result{1};
  ModPoly b = mp_mod(base, f, q);
  long long k = e;
  while (k) {
    if (k & 1) result = mp_mod(mp_mul(result, b, q), f, q);
    b = mp_mod(mp_mul(b, b, q), f, q);
    k >>= 1;
  }
  return result;
}

ModPoly mp_div_exact(const ModPoly& a, const ModPoly& b, long long q) {
  // quotient of exact division
  ModPoly rem = a, quot(a.size() - b.size() + 1, 0);
  long long linv = inv_mod(b.back(), q);
  while (rem.size() >= b.size()) {
    long long factor = rem.back() * linv % q;
    size_t shift = rem.size() - b.size();
    quot[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = ((rem[shift + i] - factor * b[i]) % q + q) % q;
    mp_normalize(rem);
    if (rem.empty()) break;
  }
  if (!rem.empty()) throw std::logic_error("mp_div_exact: nonzero remainder");
  mp_normalize(quot);
  return quot;
}

}  // namespace

bool squarefree_mod(const IntegerPolynomial& p, long long q) {
  ModPoly f = to_mod(p, q);
  if (static_cast<int>(f.size()) - 1 != p.degree()) return false;  // leading coeff dropped
  ModPoly fp(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) fp[i - 1] = (i % q) * f[i] % q;
  mp_normalize(fp);
  if (fp.empty()) return false;
  return mp_gcd(f, fp, q).size() == 1;
}

std::vector<int> factor_degree_pattern(const IntegerPolynomial& p, long long q) {
  if (!squarefree_mod(p, q)) throw std::invalid_argument("degree pattern needs p squarefree mod q");
  ModPoly f = to_mod(p, q);
  long long linv = inv_mod(f.back(), q);
  for (auto& c : f) c = c * linv % q;
  std::vector<int> pattern;
  ModPoly x{0, 1};
  ModPoly h = mp_mod(x, f, q);  // x^(q^i) mod f, iterated
  int i = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    ++i;
    if (2 * i > static_cast<int>(f.size()) - 1) {
      pattern.push_back(static_cast<int>(f.size()) - 1);
      break;
    }
    h = mp_powmod_x(q, f, q, h);
    // gcd(f, h - x)
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % q + q) % q;
    mp_normalize(hx);
    ModPoly g = mp_gcd(f, hx, q);
    if (g.size() > 1) {
      int dg = static_cast<int>(g.size()) - 1;
      for (int k = 0; k < dg / i; ++k) pattern.push_back(i);
      f = mp_div_exact(f, g, q);
      if (static_cast<int>(f.size()) - 1 == 0) break;
      h = mp_mod(h, f, q);
    }
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace rh3
