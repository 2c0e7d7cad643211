#ifndef RH3_MODULE_HPP
#define RH3_MODULE_HPP

#include <utility>
#include <vector>

#include "rh3/abelian.hpp"
#include "rh3/group_ring.hpp"

namespace rh3 {

// Diagonal of the Smith normal form of a square integer matrix, entries
// non-negative with d1 | d2 | ... . Destroys its working copy only.
std::vector<mpz_class> smith_normal_form_diagonal(std::vector<std::vector<mpz_class>> M);

// Exact integer determinant (fraction-free elimination).
mpz_class matrix_determinant(std::vector<std::vector<mpz_class>> M);

// Isomorphism type of R/(omega^n) over R = Z_p[sigma]/(Phi_p), from the Smith
// normal form of the (p-1)x(p-1) relation matrix of multiplication by omega^n
// on the power basis.
AbelianStructure cyclic_module_structure(int p, int n);

// The closed form (p^{a+1})^b x (p^a)^{p-1-b} with n = a(p-1) + b, 0 <= b <= p-2.
// cyclic_module_structure must always agree with this.
AbelianStructure closed_form_structure(int p, int n);

struct FiltrationStep {
  int index = 0;                 // i, with M_i the kernel of omega^i
  AbelianStructure structure;    // M_i = R/(omega^i)
  long long quotient_order = 0;  // #(M_{i+1}/M_i): p below the top, 1 at i = n
};

// The filtration M_0 <= M_1 <= ... <= M_n = M of M = R/(omega^n); each
// successive quotient below the top has order exactly p.
std::vector<FiltrationStep> filtration_report(int p, int n);

// #(M_{i+1}/M_i)^G = (h_k * prod_e) / (deg * norm_image_order * lambda_index);
// throws std::domain_error unless the quotient is a positive integer. With one
// ramified prime this reduces to 3 / norm_image_order.
long long subquotient_fixed_order(long long h_k, long long prod_e, long long deg,
                                  long long norm_image_order, long long lambda_index);

// The structures the nonexistence theorem permits for the full class group:
// exactly [3^{a+1}, 3^a] for some a >= 0 (with [3] the a = 0 case).
bool is_theorem_admissible(const AbelianStructure& s);

// The structures a cyclic R-module allows at all: s = cyclic_module_structure(p, n)
// for some n. This is the algebraic constraint alone; arithmetic excludes the
// even-n (balanced) shapes from occurring as class groups.
bool is_module_realizable(const AbelianStructure& s, int p);

// The p-rank analogue of the Riemann-Hurwitz genus formula:
// R_minus - 1 = p * (r_minus - 1).
bool riemann_hurwitz_holds(long long r_minus, long long R_minus, int p);

// omega^{p-1} = p * u in Z[sigma]/(Phi_p); returns u and whether u is a unit
// modulo p (its multiplication matrix stays invertible mod p).
std::pair<GroupRingElement, bool> omega_unit_cofactor(int p);

// For p = 3: in M = R/(omega^m) the images of 1 and omega span M as a direct sum
// of two cyclic Z-modules (the generator and its omega-shift); checks that their
// Z-orders multiply to 3^m and that their spans intersect trivially.
bool span_decomposition_ok(int m);

}  // namespace rh3

#endif
