#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modunits/eta_quotient.hpp"
#include "modunits/eta_transform.hpp"
#include "modunits/exact_linalg.hpp"
#include "modunits/modular_curve.hpp"

namespace modunits {

// Level p^n: Lambda = Z^n with coordinate 0 the exponent of p at P_0 and
// coordinate i (1 <= i < n) the exponent of sqrt(p*) at P_i.
// Level pq: Lambda = Z^6, coordinates (p-exponent, q-exponent) at P_0, P_1, P_2.

/// Lambda coordinate of a leading-coefficient ratio at cusp index i of level p^n.
/// Root-of-unity parts are dropped; throws std::logic_error when the value is not
/// in Lambda_i (a foreign prime, or an odd p-power at the rational cusp P_0).
Integer reduce_to_lambda(const LeadingCoeff& value, std::int64_t p, int i);

/// Delta in the bases (div f, div g_0, ..., div g_{n-2}) -> Lambda, one row per
/// generator, computed from the leading coefficients at all cusps. Entry (r, i)
/// is the Lambda coordinate of LC_r(P_i) / LC_r(P_n). Throws ScopeError for p < 5.
IntMatrix delta_matrix(std::int64_t p, int n);

/// Lambda / Delta(P(p^n)).
AbelianGroup delta_cokernel(std::int64_t p, int n);

/// Kernel of D/span(B) -> Lambda (x) Q/Z, x -> x B^{-1} Delta mod Lambda, where
/// the rows of B (k x k, nonsingular) span the principal lattice inside D = Z^k
/// and Delta (k x r) gives their Lambda images.
struct SnakeResult {
  AbelianGroup kernel;
  AbelianGroup image;             // image of C in Lambda (x) Q/Z
  IntMatrix preimage_lattice;     // {x in Z^k : x B^{-1} Delta integral}, Hermite basis
};
SnakeResult snake_kernel(const IntMatrix& B, const IntMatrix& Delta);

struct DeltaKernelAnalysis {
  Integer a_prime;
  Integer smallest_b;           // least b | a' with b * lambda in the image of D
  AbelianGroup kernel_psi;      // cyclic of order a' / smallest_b
  SnakeResult generic;          // same kernel via snake_kernel
  AbelianGroup class_group;
};
DeltaKernelAnalysis analyze_delta_kernel(std::int64_t p, int n);

/// Kernel of C(p^n) -> Lambda (x) Q/Z from the psi test. Expected trivial.
AbelianGroup delta_kernel_on_cuspidal(std::int64_t p, int n);

/// Roots of unity of the residue fields of P_0..P_{n-1}: sum Z/(2 p^{min(i, n-i)}).
AbelianGroup mu_contribution(std::int64_t p, int n);

struct TorsionResult {
  AbelianGroup group;
  Integer order;
  bool conditional = false;          // assumes J_0(N)(Q)_Tor = C(N)
  AbelianGroup kernel;
  AbelianGroup mu_part;
  bool extension_resolved = true;    // false: only the order of `group` is certain
  bool up_to_2_torsion = false;
  std::string statement;
};

TorsionResult generalized_torsion(std::int64_t p, int n);

/// The class of E (x) 1/m in Lambda (x) Q/Z, given m E = div(h) and coeffs[j] =
/// LC(h) at the cusp of level p^j, j = 0..n. Component i is the Lambda coordinate
/// of LC(P_n)/LC(P_i), divided by m.
std::vector<QmodZ> evaluate_delta_class(const CuspDivisor& E, const Integer& m, const EtaQuotient& h,
                                        const std::vector<LeadingCoeff>& coeffs, std::int64_t p, int n);

/// Coordinates of a divisor of X_0(pq) in the basis D_1 = P_0 - P_3, D_2 = P_1 - P_3,
/// D_3 = P_2 - P_3 (P_0, P_1, P_2, P_3 of level 1, p, q, pq).
std::vector<Integer> pq_coordinates(const CuspDivisor& E, std::int64_t p, std::int64_t q);

/// 3 x 6 matrix of Delta on div f_1, div f_2, div f_3 (same orientation as delta_matrix).
IntMatrix pq_delta_matrix(std::int64_t p, std::int64_t q);

struct PqKernelAnalysis {
  SnakeResult snake;
  AbelianGroup class_group;
  Integer c;
  bool generated_by_d1_d2_d3 = false;  // D_1 - D_2 - D_3 lies in the kernel and has order c in C(pq)
};
PqKernelAnalysis analyze_pq_kernel(std::int64_t p, std::int64_t q);

TorsionResult pq_delta_kernel(std::int64_t p, std::int64_t q);

struct SplitInjectionReport {
  std::int64_t p = 0;
  int m = 0;
  Integer p_star;                  // (-1)^{(p-1)/2} p
  std::string kernel_note;         // the order-2 kernel {0, p* (x) 1/2}
  std::vector<std::string> notes;
};
SplitInjectionReport split_injection_scope(std::int64_t p, int m);

}  // namespace modunits
