#pragma once

// Published closed-form statements, transcribed as stated so that computed
// values can be compared against them. Nothing here is derived from the
// computational modules.

#include <cstdint>
#include <vector>

#include "modunits/eta_transform.hpp"
#include "modunits/exact_linalg.hpp"

namespace modunits::closed {

// Order of eta(p^k tau) at a cusp of level p^m on X_0(p^n).
Rational eta_order_prime_power(std::int64_t p, int n, int k, int m);

// Case table for the leading coefficient of generator `gen` (0 = f, k+1 = g_k)
// at the cusp of level p^m, with sqrt(p*) = e((p-1)/8) sqrt(p).
LeadingCoeff leading_coefficient_table(std::int64_t p, int n, int gen, int m);

Integer det_V(std::int64_t p, int n);              // 24(n+1)/(p-1,12)
Integer det_M_times_24(std::int64_t p, int n);     // (ab)^n p^{e(n)}, e = (n-1)(3n-1)/4 or n(3n-4)/4
Integer det_U(std::int64_t p, int n);              // prod phi((p^i, p^{n-i}))
Rational vmu_last_row_sum(std::int64_t p, int n);  // (n+1) p^{n-1} (p+1) / 24

// Lower-triangular Delta matrix: -[[a',0,..],[1,1,0,..],[1,2,1,..],...,[1,2,..,2,1]].
IntMatrix delta_matrix(std::int64_t p, int n);

// Z/2 for n = 1; otherwise the even/odd products of Z/(2p^i).
AbelianGroup generalized_torsion(std::int64_t p, int n);

// 4abc with a = (p-1)(q+1)/24, b = (p+1)(q-1)/24, c = (p-1)(q-1)/24.
Integer class_number_pq(std::int64_t p, std::int64_t q);

// Magnitudes of the leading coefficients of f_1, f_2, f_3 at P_0..P_3.
std::vector<std::vector<LeadingCoeff>> pq_magnitude_table(std::int64_t p, std::int64_t q);

}  // namespace modunits::closed
