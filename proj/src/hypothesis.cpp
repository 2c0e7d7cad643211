#include "rh3/hypothesis.hpp"

#include <stdexcept>

#include "rh3/integers.hpp"

namespace rh3 {

FieldDossier hypothesis_check(long long d, long long bound) {
  if (d <= 0) throw std::invalid_argument("hypothesis_check: d must be positive");
  FieldDossier out;
  out.d = d;
  out.squarefree_ok = (d % 3 != 0) && is_squarefree(d);
  out.congruence_ok = (d % 3 == 1);
  if (!out.squarefree_ok) return out;

  auto [Dm, Dp] = discriminants(d);
  out.D_minus = Dm;
  out.D_plus = Dp;
  out.h_plus = class_number(Dp, bound);
  out.h_minus = class_number(Dm, bound);
  out.cl_minus_structure = class_group_structure(Dm, bound);
  out.eps = fundamental_unit(Dp, bound);
  out.class_number_ok =
      (*out.h_plus % 3 != 0) && (*out.h_minus % 3 == 0) && (*out.h_minus % 9 != 0);
  return out;
}

}  // namespace rh3
