#include "rh3/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "rh3/integers.hpp"

namespace rh3 {

std::vector<mpz_class> smith_normal_form_diagonal(std::vector<std::vector<mpz_class>> M) {
  const int nr = static_cast<int>(M.size());
  const int nc = nr ? static_cast<int>(M[0].size()) : 0;
  const int n = std::min(nr, nc);
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block to (t,t)
      int pi = -1, pj = -1;
      mpz_class best;
      for (int i = t; i < nr; ++i)
        for (int j = t; j < nc; ++j) {
          if (M[i][j] == 0) continue;
          mpz_class a = abs(M[i][j]);
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        // trailing block zero; diagonal from here stays zero
        for (int i = t; i < n; ++i) M[i][i] = 0;
        t = n;
        break;
      }
      std::swap(M[t], M[pi]);
      for (int i = 0; i < nr; ++i) std::swap(M[i][t], M[i][pj]);

      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (M[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[i][t].get_mpz_t(), M[t][t].get_mpz_t());
        for (int j = t; j < nc; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) clean = false;  // remainder smaller than pivot; re-pivot
      }
      for (int j = t + 1; j < nc; ++j) {
        if (M[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[t][j].get_mpz_t(), M[t][t].get_mpz_t());
        for (int i = t; i < nr; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block for the divisibility chain
      bool divides = true;
      for (int i = t + 1; i < nr && divides; ++i)
        for (int j = t + 1; j < nc && divides; ++j)
          if (M[i][j] % M[t][t] != 0) {
            for (int k = t; k < nc; ++k) M[t][k] += M[i][k];
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<mpz_class> d(n);
  for (int i = 0; i < n; ++i) d[i] = i < nr && i < nc ? mpz_class(abs(M[i][i])) : mpz_class(0);
  return d;
}

mpz_class matrix_determinant(std::vector<std::vector<mpz_class>> M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (M[t][t] == 0) {
      int s = -1;
      for (int i = t + 1; i < n; ++i)
        if (M[i][t] != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      std::swap(M[t], M[s]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) {
        M[i][j] = (M[i][j] * M[t][t] - M[i][t] * M[t][j]) / prev;
      }
    prev = M[t][t];
  }
  return sign * M[n - 1][n - 1];
}

AbelianStructure cyclic_module_structure(int p, int n) {
  if (n < 0) throw std::invalid_argument("cyclic_module_structure: n must be non-negative");
  auto M = multiplication_matrix(omega_power(p, n));
  std::vector<mpz_class> d = smith_normal_form_diagonal(std::move(M));
  std::vector<long long> inv;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (*it == 0) throw std::logic_error("cyclic_module_structure: infinite quotient");
    if (!it->fits_slong_p()) throw std::overflow_error("cyclic_module_structure: divisor too large");
    inv.push_back(it->get_si());
  }
  return structure_from_invariant_factors(inv);
}

AbelianStructure closed_form_structure(int p, int n) {
  if (n < 0) throw std::invalid_argument("closed_form_structure: n must be non-negative");
  const int a = n / (p - 1), b = n % (p - 1);
  long long pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;
  std::vector<long long> divs;
  for (int i = 0; i < b; ++i) divs.push_back(pa * p);
  for (int i = 0; i < p - 1 - b; ++i) divs.push_back(pa);
  return AbelianStructure(divs);
}

std::vector<FiltrationStep> filtration_report(int p, int n) {
  std::vector<FiltrationStep> steps;
  for (int i = 0; i <= n; ++i)
    steps.push_back({i, cyclic_module_structure(p, i), i < n ? static_cast<long long>(p) : 1});
  return steps;
}

long long subquotient_fixed_order(long long h_k, long long prod_e, long long deg,
                                  long long norm_image_order, long long lambda_index) {
  if (h_k <= 0 || prod_e <= 0 || deg <= 0 || norm_image_order <= 0 || lambda_index <= 0)
    throw std::invalid_argument("subquotient_fixed_order: inputs must be positive");
  long long num = h_k * prod_e;
  long long den = deg * norm_image_order * lambda_index;
  if (num % den != 0)
    throw std::domain_error("subquotient_fixed_order: non-integral fixed-point count");
  return num / den;
}

static bool power_of(long long q, long long p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

bool is_theorem_admissible(const AbelianStructure& s) {
  const auto& d = s.divisors();
  if (s.trivial()) return false;
  for (long long q : d)
    if (!power_of(q, 3)) return false;
  if (d.size() == 1) return d[0] == 3;  // a = 0, second factor trivial
  if (d.size() == 2) return d[0] == 3 * d[1];
  return false;
}

bool is_module_realizable(const AbelianStructure& s, int p) {
  mpz_class order = to_mpz(s.order());
  int n = 0;
  while (order % p == 0) {
    order /= p;
    ++n;
  }
  if (order != 1) return false;  // not a p-group
  return s == closed_form_structure(p, n);
}

bool riemann_hurwitz_holds(long long r_minus, long long R_minus, int p) {
  if (r_minus < 0 || R_minus < 0) throw std::invalid_argument("ranks must be non-negative");
  return R_minus - 1 == p * (r_minus - 1);
}

std::pair<GroupRingElement, bool> omega_unit_cofactor(int p) {
  GroupRingElement w = omega_power(p, p - 1);
  GroupRingElement u = gr_zero(p);
  for (size_t i = 0; i < w.c.size(); ++i) {
    if (w.c[i] % p != 0) throw std::logic_error("omega^{p-1} not divisible by p");
    u.c[i] = w.c[i] / p;
  }
  // u is a unit mod p iff its multiplication matrix is invertible mod p
  auto M = multiplication_matrix(u);
  mpz_class det = matrix_determinant(std::move(M));
  return {u, det % p != 0};
}

namespace {

// Lattice membership in the column span of a 2x2 integer matrix via Cramer.
bool in_lattice(const std::vector<std::vector<mpz_class>>& L, const mpz_class& det,
                const mpz_class& v0, const mpz_class& v1) {
  return (v0 * L[1][1] - v1 * L[0][1]) % det == 0 && (v1 * L[0][0] - v0 * L[1][0]) % det == 0;
}

// Least power 3^j with 3^j * v in the lattice; M = R/(omega^m) is killed by 3^m.
mpz_class element_order(const std::vector<std::vector<mpz_class>>& L, const mpz_class& det,
                        mpz_class v0, mpz_class v1, int m) {
  mpz_class ord = 1;
  for (int j = 0; j <= m; ++j) {
    if (in_lattice(L, det, v0, v1)) return ord;
    v0 *= 3;
    v1 *= 3;
    ord *= 3;
  }
  throw std::logic_error("element order exceeds the module exponent");
}

}  // namespace

bool span_decomposition_ok(int m) {
  if (m < 1) throw std::invalid_argument("span_decomposition_ok: m must be positive");
  auto L = multiplication_matrix(omega_power(3, m));
  mpz_class det = matrix_determinant(L);
  if (det == 0) throw std::logic_error("degenerate relation lattice");

  // generator h_m = image of 1, shift h_{m-1} = image of omega = -1 - 2 sigma
  mpz_class ord1 = element_order(L, det, 1, 0, m);
  mpz_class ordw = element_order(L, det, -1, -2, m);

  mpz_class total = ord1 * ordw, expect = 1;
  for (int i = 0; i < m; ++i) expect *= 3;
  if (total != expect) return false;

  // Cyclic groups intersect trivially iff their order-3 subgroups do; compare the
  // order-3 generators g1 = (ord1/3) * 1 and g2 = (ordw/3) * omega.
  if (ord1 == 1 || ordw == 1) return true;
  mpz_class g1_0 = ord1 / 3, g1_1 = 0;
  mpz_class g2_0 = -(ordw / 3), g2_1 = -2 * (ordw / 3);
  for (int k = 1; k <= 2; ++k)
    if (in_lattice(L, det, g1_0 - k * g2_0, g1_1 - k * g2_1)) return false;
  return true;
}

}  // namespace rh3
