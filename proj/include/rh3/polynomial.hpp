#ifndef RH3_POLYNOMIAL_HPP
#define RH3_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace rh3 {

// Dense univariate polynomial over Z, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector.
struct IntegerPolynomial {
  std::vector<mpz_class> coeffs;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { normalize(); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool zero() const { return coeffs.empty(); }
  bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  const mpz_class& operator[](size_t i) const { return coeffs[i]; }
  // Coefficient of x^i, 0 beyond the degree.
  mpz_class coeff(int i) const;
  void normalize();

  bool operator==(const IntegerPolynomial& o) const { return coeffs == o.coeffs; }
  bool operator!=(const IntegerPolynomial& o) const { return coeffs != o.coeffs; }
};

IntegerPolynomial poly_add(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial poly_sub(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial poly_mul(const IntegerPolynomial& a, const IntegerPolynomial& b);
IntegerPolynomial derivative(const IntegerPolynomial& a);
mpz_class eval(const IntegerPolynomial& a, const mpz_class& x);

mpz_class content(const IntegerPolynomial& a);
IntegerPolynomial primitive_part(const IntegerPolynomial& a);

// Gcd over Z via the primitive pseudo-remainder sequence; primitive with positive
// leading coefficient.
IntegerPolynomial poly_gcd(IntegerPolynomial a, IntegerPolynomial b);

// "x^12 - 6*x^11 + ... + 11881" (paper-style, highest degree first).
std::string to_polynomial_string(const IntegerPolynomial& p);
IntegerPolynomial parse_polynomial_string(const std::string& s);

// "1,-6,21,...,11881" (highest degree first).
std::string to_coeff_list(const IntegerPolynomial& p);
IntegerPolynomial parse_coeff_list(const std::string& s);

// Multiset of irreducible-factor degrees of p mod q (ascending), for an odd prime
// q with p mod q squarefree of full degree; distinct-degree factorization.
std::vector<int> factor_degree_pattern(const IntegerPolynomial& p, long long q);

// Whether p stays squarefree of full degree mod q (i.e. q splits no repeated
// factor off p; equivalent to q not dividing disc(p) for monic p).
bool squarefree_mod(const IntegerPolynomial& p, long long q);

}  // namespace rh3

#endif
