#ifndef RH3_QUADRATIC_HPP
#define RH3_QUADRATIC_HPP

#include <utility>
#include <vector>

#include "rh3/abelian.hpp"

namespace rh3 {

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  long long a = 0, b = 0, c = 0;
  long long discriminant() const { return b * b - 4 * a * c; }
  bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Form& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

inline constexpr long long kDefaultDiscriminantBound = 10'000'000;

bool is_fundamental_discriminant(long long D);

// Field discriminants of k- = Q(sqrt(-d)) and k+ = Q(sqrt(3d)) for squarefree d
// with 3 not dividing d. Throws otherwise.
std::pair<long long, long long> discriminants(long long d);

// Class number of the (fundamental) discriminant D. For D < 0 this counts reduced
// positive definite forms. For D > 0 it counts cycles of reduced indefinite forms
// (the narrow class number) and halves when the fundamental unit has norm +1, so
// the result is the ordinary class number.
long long class_number(long long D, long long bound = kDefaultDiscriminantBound);

// Elementary divisors of the form class group, D < 0 fundamental. Enumerates all
// reduced forms and counts solutions of f^(p^k) = 1 under composition; the counts
// determine the abelian isomorphism type.
AbelianStructure class_group_structure(long long D, long long bound = kDefaultDiscriminantBound);

// --- form-level primitives (exposed for tests and the ideal-class helpers) ---

std::vector<Form> reduced_definite_forms(long long D);
Form reduce_definite(Form f);
Form principal_form(long long D);
// Gauss composition of definite forms. Cohen, Algorithm 5.4.7.
Form compose_definite(const Form& f, const Form& g);
Form form_power(const Form& f, long long k, long long D);

std::vector<Form> reduced_indefinite_forms(long long D);
// Reduction step along a cycle of reduced indefinite forms.
Form rho_indefinite(const Form& f, long long D);
long long narrow_class_number(long long D);

}  // namespace rh3

#endif
