#include <doctest.h>

#include <stdexcept>

#include "rh3/integers.hpp"
#include "rh3/kummer.hpp"

using namespace rh3;

TEST_CASE("candidate construction") {
  auto c31 = make_candidate(31, 1, 1);
  REQUIRE(c31);
  CHECK(c31->half);
  CHECK(c31->T == 1);
  CHECK(c31->N == 8);
  CHECK(c31->cube_root == 2);

  auto c61 = make_candidate(61, 8, 1);
  REQUIRE(c61);
  CHECK_FALSE(c61->half);
  CHECK(c61->T == 16);
  CHECK(c61->N == 125);
  CHECK(c61->cube_root == 5);

  auto c211 = make_candidate(211, 17, 1);
  REQUIRE(c211);
  CHECK(c211->half);
  CHECK(c211->T == 17);
  CHECK(c211->N == 125);

  auto c2047 = make_candidate(2047, 332, 11);
  REQUIRE(c2047);
  CHECK_FALSE(c2047->half);  // a even, so no half-integral case
  CHECK(c2047->T == 664);
  CHECK(c2047->N == 357911);
  CHECK(c2047->cube_root == 71);

  CHECK_FALSE(make_candidate(31, 2, 2));   // not coprime
  CHECK_FALSE(make_candidate(31, 3, 1));   // norm 10 is no cube
  CHECK_THROWS(make_candidate(12, 1, 1));  // 3 | d
  CHECK_THROWS(make_candidate(50, 1, 1));  // not squarefree
  CHECK_THROWS(make_candidate(31, 0, 1));
}

TEST_CASE("search order: b outer ascending, a inner ascending") {
  auto hits = search_alpha(31, 10, 10);
  REQUIRE(hits.size() >= 2);
  CHECK(hits[0] == *make_candidate(31, 1, 1));
  CHECK(hits[1] == *make_candidate(31, 1, 2));  // norm 1 + 31*4 = 125

  // frozen first hits of the default box
  CHECK(search_alpha(211).front() == *make_candidate(211, 17, 1));
  CHECK(search_alpha(913).front() == *make_candidate(913, 206, 3));
  CHECK(search_alpha(970).front() == *make_candidate(970, 19, 1));
  CHECK(search_alpha(1759).front() == *make_candidate(1759, 17, 1));
  CHECK(search_alpha(2047).front() == *make_candidate(2047, 1, 1));
  CHECK(search_alpha(86942).front() == *make_candidate(86942, 557, 3));
}

TEST_CASE("sextic and compositum of the worked example") {
  auto c = make_candidate(2047, 332, 11);
  REQUIRE(c);
  IntegerPolynomial Q = build_sextic(*c);
  CHECK(to_polynomial_string(Q) == "x^6 - 664*x^3 + 357911");

  auto c211 = make_candidate(211, 17, 1);
  IntegerPolynomial P = compositum(build_sextic(*c211));
  CHECK(to_coeff_list(P) == "1,-6,21,-84,243,-432,1037,-1896,-204,-966,5949,4905,11881");
}

TEST_CASE("compositum invariants on a spread of candidates") {
  for (long long d : {31LL, 61LL, 211LL, 214LL, 913LL, 1174LL}) {
    for (const auto& c : search_alpha(d, 200, 8)) {
      IntegerPolynomial P = compositum(build_sextic(c));
      CHECK(P.degree() == 12);
      CHECK(P.monic());
      CHECK(P.coeff(11) == -6);
      CHECK(P.coeff(10) == 21);
      mpz_class v = 1 - to_mpz(c.T) + to_mpz(c.N);
      CHECK(eval(P, 0) == v * v);
    }
  }
}

TEST_CASE("degenerate compositum shows up as a repeated factor") {
  // T = 2, N = 1 is the trace and norm of alpha = 1: the sextic degenerates to
  // (x^3 - 1)^2 and the product of the two shifted copies is a square
  IntegerPolynomial sq;
  sq.coeffs = {1, 0, 0, -2, 0, 0, 1};
  IntegerPolynomial P = compositum(IntegerPolynomial(sq.coeffs));
  CHECK(P.degree() == 12);
  PlausibilityReport rep = plausibility_check(P);
  CHECK_FALSE(rep.squarefree);
  CHECK_FALSE(rep.pass());

  // T = 1, N = 1 gives the 18th cyclotomic sextic; its twelve shifted roots stay
  // distinct, so the screen keeps it (no candidate produces it: N = 1 forces d = 3)
  IntegerPolynomial cyc;
  cyc.coeffs = {1, 0, 0, -1, 0, 0, 1};
  CHECK(plausibility_check(compositum(IntegerPolynomial(cyc.coeffs))).squarefree);
}

TEST_CASE("plausibility screen on table polynomials") {
  auto c = make_candidate(211, 17, 1);
  PlausibilityReport rep = plausibility_check(compositum(build_sextic(*c)));
  CHECK(rep.monic_degree_12);
  CHECK(rep.squarefree);
  CHECK(rep.universal_coefficients);
  CHECK(rep.patterns_uniform);
  CHECK(rep.pass());
  CHECK(rep.degree_patterns.size() == 4);
  for (const auto& [q, pat] : rep.degree_patterns) {
    CHECK(q >= 5);
    int sum = 0;
    for (int e : pat) sum += e;
    CHECK(sum == 12);
    for (int e : pat) CHECK(e == pat.front());
  }
  // the Galois group has elements of order 6 acting freely, so degree 6 can
  // never be excluded by the modular screen
  bool has6 = false;
  for (int e : rep.unexcluded_factor_degrees) has6 = has6 || e == 6;
  CHECK(has6);

  // a polynomial with a repeated factor fails the squarefree clause
  IntegerPolynomial x2m1;
  x2m1.coeffs = {-1, 0, 1};
  IntegerPolynomial xp2;
  xp2.coeffs = {2, 1};
  IntegerPolynomial f = x2m1;
  for (int i = 0; i < 10; ++i) f = poly_mul(f, xp2);
  PlausibilityReport bad = plausibility_check(f);
  CHECK_FALSE(bad.squarefree);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("rational prime divisor guard stays quiet on coprime candidates") {
  for (long long d : {31LL, 211LL, 913LL}) {
    for (const auto& c : search_alpha(d, 300, 10)) CHECK_FALSE(has_rational_prime_divisor(c));
  }
}

TEST_CASE("strict non-principality of the cube root ideal") {
  // d = 211: norm 125, the ideal above 5 has class of order 3 in h = 3
  auto c211 = make_candidate(211, 17, 1);
  auto r211 = cube_root_class_is_nonprincipal(*c211);
  REQUIRE(r211.has_value());
  CHECK(*r211);

  // d = 31: norm 8, the prime above 2 generates the class group of order 3
  auto c31 = make_candidate(31, 1, 1);
  auto r31 = cube_root_class_is_nonprincipal(*c31);
  REQUIRE(r31.has_value());
  CHECK(*r31);
}
