#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "rh3/integers.hpp"
#include "rh3/polynomial.hpp"

using namespace rh3;

namespace {

IntegerPolynomial poly(const std::vector<long long>& lowest_first) {
  std::vector<mpz_class> c;
  c.reserve(lowest_first.size());
  for (long long v : lowest_first) c.push_back(to_mpz(v));
  return IntegerPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
  IntegerPolynomial xp1 = poly({1, 1});
  IntegerPolynomial xm1 = poly({-1, 1});
  CHECK(poly_mul(xp1, xm1) == poly({-1, 0, 1}));
  CHECK(poly_add(xp1, xm1) == poly({0, 2}));
  CHECK(poly_sub(xp1, xm1) == poly({2}));
  CHECK(poly_mul(poly({}), xp1) == poly({}));
  CHECK(poly_add(poly({-1, 1}), poly({1, -1})).zero());

  IntegerPolynomial f = poly({5, -3, 0, 2});  // 2x^3 - 3x + 5
  CHECK(derivative(f) == poly({-3, 0, 6}));
  CHECK(derivative(poly({7})).zero());
  CHECK(eval(f, 2) == 2 * 8 - 3 * 2 + 5);
  CHECK(eval(f, -1) == -2 + 3 + 5);
  CHECK(eval(poly({}), 5) == 0);

  // (a+b)^2 = a^2 + 2ab + b^2 on polynomials
  IntegerPolynomial a = poly({1, 2, 3}), b = poly({-4, 0, 0, 1});
  IntegerPolynomial lhs = poly_mul(poly_add(a, b), poly_add(a, b));
  IntegerPolynomial rhs = poly_add(poly_add(poly_mul(a, a), poly_mul(b, b)),
                                   poly_mul(poly({2}), poly_mul(a, b)));
  CHECK(lhs == rhs);
}

TEST_CASE("content and gcd over Z") {
  CHECK(content(poly({3, 9, 6})) == 3);
  CHECK(primitive_part(poly({3, 9, 6})) == poly({1, 3, 2}));
  IntegerPolynomial g = poly({-1, 0, 1});  // x^2 - 1
  IntegerPolynomial f1 = poly_mul(g, poly({2, 1}));
  IntegerPolynomial f2 = poly_mul(g, poly({3, 1}));
  CHECK(poly_gcd(f1, f2) == g);
  // coprime inputs give a constant gcd
  CHECK(poly_gcd(poly({1, 1}), poly({2, 1})).degree() == 0);
  // gcd of f and f' detects the repeated factor
  IntegerPolynomial sq = poly_mul(g, g);
  CHECK(poly_gcd(sq, derivative(sq)).degree() == 2);
  // sign and content normalization: result is primitive with positive lead
  IntegerPolynomial n1 = poly_mul(poly({-2}), f1);
  CHECK(poly_gcd(n1, poly_mul(poly({6}), f2)) == g);
}

TEST_CASE("string rendering matches the printed-table style") {
  IntegerPolynomial p211 =
      parse_coeff_list("1,-6,21,-84,243,-432,1037,-1896,-204,-966,5949,4905,11881");
  CHECK(p211.degree() == 12);
  CHECK(p211.monic());
  std::string s = to_polynomial_string(p211);
  CHECK(s ==
        "x^12 - 6*x^11 + 21*x^10 - 84*x^9 + 243*x^8 - 432*x^7 + 1037*x^6 - 1896*x^5 - 204*x^4 - "
        "966*x^3 + 5949*x^2 + 4905*x + 11881");
  CHECK(parse_polynomial_string(s) == p211);
  CHECK(to_coeff_list(p211) == "1,-6,21,-84,243,-432,1037,-1896,-204,-966,5949,4905,11881");
  CHECK(parse_coeff_list(to_coeff_list(p211)) == p211);

  CHECK(to_polynomial_string(poly({0, -1})) == "-x");
  CHECK(to_polynomial_string(poly({-7})) == "-7");
  CHECK(to_polynomial_string(poly({0, 0, 1})) == "x^2");
  CHECK(to_polynomial_string(poly({5, 1})) == "x + 5");
  CHECK(parse_polynomial_string("x^2") == poly({0, 0, 1}));
  CHECK(parse_polynomial_string("- x + 3") == poly({3, -1}));
  CHECK(parse_polynomial_string("x^6 - 664*x^3 + 357911") == poly({357911, 0, 0, -664, 0, 0, 1}));
}

TEST_CASE("modular squarefree detection") {
  IntegerPolynomial g = poly({-1, 0, 1});            // (x-1)(x+1)
  CHECK(squarefree_mod(g, 5));
  CHECK(squarefree_mod(g, 3));
  IntegerPolynomial sq = poly_mul(g, g);
  CHECK_FALSE(squarefree_mod(sq, 5));
  CHECK_FALSE(squarefree_mod(sq, 7));
  // x^2 + x: squarefree mod every odd prime
  CHECK(squarefree_mod(poly({0, 1, 1}), 3));
  CHECK(squarefree_mod(poly({0, 1, 1}), 11));
  // leading coefficient divisible by q: not full degree mod q
  CHECK_FALSE(squarefree_mod(poly({1, 1, 5}), 5));
}

TEST_CASE("distinct degree factorization patterns") {
  // x^2 - 1 splits mod 5
  CHECK(factor_degree_pattern(poly({-1, 0, 1}), 5) == std::vector<int>{1, 1});
  // x^2 + 1 irreducible mod 3, split mod 5
  CHECK(factor_degree_pattern(poly({1, 0, 1}), 3) == std::vector<int>{2});
  CHECK(factor_degree_pattern(poly({1, 0, 1}), 5) == std::vector<int>{1, 1});
  // x^3 - 2: root mod 5 (3^3 = 2), no root mod 7 (cubes are 1 and 6)
  CHECK(factor_degree_pattern(poly({-2, 0, 0, 1}), 5) == std::vector<int>{1, 2});
  CHECK(factor_degree_pattern(poly({-2, 0, 0, 1}), 7) == std::vector<int>{3});
  // x^4 + 1 factors into quadratics mod every odd prime
  CHECK(factor_degree_pattern(poly({1, 0, 0, 0, 1}), 3) == std::vector<int>{2, 2});
  CHECK(factor_degree_pattern(poly({1, 0, 0, 0, 1}), 5) == std::vector<int>{2, 2});
  CHECK(factor_degree_pattern(poly({1, 0, 0, 0, 1}), 7) == std::vector<int>{2, 2});
  // requesting a pattern where the reduction is not squarefree throws
  CHECK_THROWS(factor_degree_pattern(poly_mul(poly({-1, 1}), poly({-1, 1})), 5));
  // degrees in a pattern always sum to the degree
  IntegerPolynomial p211 =
      parse_coeff_list("1,-6,21,-84,243,-432,1037,-1896,-204,-966,5949,4905,11881");
  for (long long q : {5LL, 7LL, 11LL, 13LL, 17LL}) {
    if (!squarefree_mod(p211, q)) continue;
    auto pat = factor_degree_pattern(p211, q);
    int sum = 0;
    for (int e : pat) sum += e;
    CHECK(sum == 12);
  }
}
