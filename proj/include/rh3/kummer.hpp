#ifndef RH3_KUMMER_HPP
#define RH3_KUMMER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rh3/polynomial.hpp"
#include "rh3/quadratic.hpp"

namespace rh3 {

// A Kummer generator alpha of k- = Q(sqrt(-d)) with perfect-cube norm:
// alpha = (a + b*sqrt(-d))/2 when half is set (possible only for -d = 1 mod 4
// with a, b odd), else alpha = a + b*sqrt(-d). T and N are the trace and norm
// of alpha, and cube_root^3 = N.
struct KummerCandidate {
  long long d = 0;
  long long a = 0, b = 0;
  bool half = false;
  long long T = 0, N = 0;
  long long cube_root = 0;

  bool operator==(const KummerCandidate& o) const {
    return d == o.d && a == o.a && b == o.b && half == o.half;
  }
};

// Builds the candidate for (d, a, b) when gcd(a,b) = 1 and the norm is a perfect
// cube; empty otherwise. Throws when d is not positive, squarefree and prime to 3
// or when a, b are not positive.
std::optional<KummerCandidate> make_candidate(long long d, long long a, long long b);

// All candidates in the box 1 <= a <= a_max, 1 <= b <= b_max, enumerated with b
// in the outer loop and a in the inner loop; the first entry is the canonical
// candidate. Callers that rely on the class-number condition of the sieve must
// check it themselves; only the cheap conditions on d are enforced here, since
// the out-of-hypothesis examples are searched through the same box.
std::vector<KummerCandidate> search_alpha(long long d, long long a_max = 1000,
                                          long long b_max = 100);

// Q(x) = x^6 - T x^3 + N, the minimal-polynomial candidate of a cube root of alpha.
IntegerPolynomial build_sextic(const KummerCandidate& c);

// P(x) = Res_y(y^2 + y + 1, Q(x + y)), the degree-12 minimal-polynomial candidate
// of beta - j where Q(beta) = 0 and j is a primitive cube root of unity. Computed
// as Q(x + j) * conj(Q(x + j)) over Z[j]; always monic of degree 12. A degenerate
// (non-primitive) compositum shows up as a repeated factor, i.e. the squarefree
// clause of plausibility_check fails; callers skip such candidates.
IntegerPolynomial compositum(const IntegerPolynomial& sextic);

struct PlausibilityReport {
  bool monic_degree_12 = false;
  bool squarefree = false;             // gcd(P, P') constant over Z
  bool universal_coefficients = false; // -6 at x^11 and 21 at x^10
  // Factorization degree patterns of P modulo small primes where P stays
  // squarefree, ascending within each pattern.
  std::vector<std::pair<long long, std::vector<int>>> degree_patterns;
  // P generates a Galois field when it is what the construction intends, so each
  // pattern must consist of equal parts (the Frobenius order); a mixed pattern
  // certifies a defective candidate.
  bool patterns_uniform = false;
  // Proper factor degrees not excluded by the subset-sum screen across the tested
  // primes; empty means the patterns alone prove irreducibility.
  std::vector<int> unexcluded_factor_degrees;

  bool pass() const { return monic_degree_12 && squarefree && universal_coefficients && patterns_uniform; }
};

// Sanity report for a compositum output. No certified irreducibility claim: the
// modular patterns only screen for visible defects.
PlausibilityReport plausibility_check(const IntegerPolynomial& P);

// True when a rational prime divides alpha as an algebraic integer. Given
// gcd(a,b) = 1 this is impossible (odd primes would divide both a and b, and the
// half-integral cases rule out 2), so the scan asserts it stays false; the test
// is kept explicit as a guard for relaxed inputs.
bool has_rational_prime_divisor(const KummerCandidate& c);

// Strict form of the requirement that (alpha) = a^3 for a NON-principal
// ideal a: computes the form class of a from the prime forms above each prime of
// cube_root and checks it against the principal class. Off the default scan path;
// exposed so the approximation (gcd + cube test) can be audited. Returns empty
// when some prime of cube_root is inert (a rational divisor situation that the
// candidate invariants already exclude).
std::optional<bool> cube_root_class_is_nonprincipal(const KummerCandidate& c);

}  // namespace rh3

#endif
