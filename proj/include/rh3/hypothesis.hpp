#ifndef RH3_HYPOTHESIS_HPP
#define RH3_HYPOTHESIS_HPP

#include <optional>

#include "rh3/abelian.hpp"
#include "rh3/quadratic.hpp"
#include "rh3/unit.hpp"

namespace rh3 {

// Everything the sieve knows about one d: the pair of quadratic fields
// k- = Q(sqrt(-d)), k+ = Q(sqrt(3d)), their class data, and the sieve verdicts.
//
// Sieve conditions on d:
//   squarefree_ok:    d squarefree and prime to 3
//   congruence_ok:    d = 1 (mod 3)
//   class_number_ok:  3 does not divide h+, and 3 divides h- exactly once
// The structural conditions on the cubic Kummer extension K (cyclic over the
// biquadratic field, correct ramification) hold by construction once a candidate
// alpha is found; the pipeline records that in kummer_ok.
struct FieldDossier {
  long long d = 0;
  bool squarefree_ok = false;
  bool congruence_ok = false;
  bool class_number_ok = false;
  std::optional<bool> kummer_ok;

  std::optional<long long> D_minus, D_plus;
  std::optional<long long> h_minus, h_plus;
  std::optional<AbelianStructure> cl_minus_structure;
  std::optional<FundamentalUnit> eps;

  bool passes_sieve() const { return squarefree_ok && congruence_ok && class_number_ok; }
};

// Fills the dossier for d. Class data is computed only when d is squarefree and
// prime to 3 (the discriminants are undefined otherwise).
FieldDossier hypothesis_check(long long d, long long bound = kDefaultDiscriminantBound);

}  // namespace rh3

#endif
