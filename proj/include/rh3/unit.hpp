#ifndef RH3_UNIT_HPP
#define RH3_UNIT_HPP

#include <utility>

#include <gmpxx.h>

#include "rh3/quadratic.hpp"

namespace rh3 {

// Fundamental unit eps > 1 of the real quadratic order of discriminant D:
// eps = x + y*sqrt(D), or (x + y*sqrt(D))/2 when half is set.
// Then x^2 - D y^2 = 4*norm_sign if half, else norm_sign; y >= 1.
struct FundamentalUnit {
  mpz_class x, y;
  bool half = false;
  int norm_sign = 1;
};

// Computed from the purely periodic continued fraction of (b0 + sqrt(D))/2 with
// b0 = D mod 2 adjusted below sqrt(D); the convergents over one minimal period
// give the unit, and the period parity gives the norm.
FundamentalUnit fundamental_unit(long long D, long long bound = kDefaultDiscriminantBound);

// Norm of the fundamental unit (+1 or -1) from the period parity alone, without
// building the convergents. Used by the ordinary-class-number correction.
int unit_norm_sign(long long D);

// Residue of eps in O_D/9O_D on the basis (1, w), w = (sigma + sqrt(D))/2 with
// sigma = D mod 2; components in [0,9).
std::pair<int, int> residue_mod9(const FundamentalUnit& eps, long long D);

// Whether a residue lies in the subgroup of cubes of (O_D/9O_D)^x. Throws if the
// residue is not invertible (a unit always is; anything else is corrupted input).
bool is_cube_residue_mod9(std::pair<int, int> r, long long D);

// eps is 3-primary iff its residue mod 9 is a cube in (O_D/9O_D)^x, i.e. the cubic
// Kummer extension it generates is unramified above 3.
bool is_3_primary(const FundamentalUnit& eps, long long D);

}  // namespace rh3

#endif
