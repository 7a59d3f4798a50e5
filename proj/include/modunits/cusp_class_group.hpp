#pragma once

#include <cstdint>
#include <vector>

#include "modunits/eta_quotient.hpp"
#include "modunits/exact_linalg.hpp"
#include "modunits/modular_curve.hpp"

namespace modunits {

/// C(N) = D(N) / (span of eta-unit divisors).
struct ClassGroupResult {
  std::int64_t N = 1;
  AbelianGroup group;
  Integer order;
  std::vector<CuspDivisor> generator_divisors;  // divisors spanning the principal lattice used
  // True when the eta lattice is known to be all of P(N): N = p^n with p >= 5,
  // or N = pq with p == q == 1 mod 12. Otherwise `group` is only an upper bound.
  bool certified = false;
};

/// The (n+1)x(n+1) matrices of the prime-power index computation.
/// M24(i, j) = 24 * ord of eta(p^i tau) at cusps of level p^j,
/// U = diag(phi((p^i, p^{n-i}))), V rows = exponent vectors of f, g_0..g_{n-2}, then all ones.
struct OrderMatrices {
  std::int64_t p = 0;
  int n = 0;
  IntMatrix M24;
  IntMatrix U;
  IntMatrix V;

  // V * M24 * U; its first n rows are 24 * lambda-weighted divisors of f, g_k
  // in cusp order (P_0, ..., P_n).
  IntMatrix VMU24() const { return V * M24 * U; }
};

ClassGroupResult class_group(std::int64_t p, int n);
AbelianGroup ling_structure(std::int64_t p, int n);
ClassGroupResult class_group_pq(std::int64_t p, std::int64_t q);
OrderMatrices order_matrices(std::int64_t p, int n);

/// Exponent vectors (rows, indexed by the ascending divisors of N) forming a
/// basis of the lattice of eta quotients satisfying all four Ligozat conditions.
IntMatrix ligozat_exponent_lattice(std::int64_t N);

/// Divisors of the basis of ligozat_exponent_lattice(N).
std::vector<CuspDivisor> eta_unit_divisor_lattice(std::int64_t N);

/// C(N) computed against the full Ligozat eta lattice. certified as documented above.
ClassGroupResult class_group_of_level(std::int64_t N);

/// Rows are the cuspidal_coordinates of the given divisors.
IntMatrix coordinate_matrix(const std::vector<CuspDivisor>& divisors);

/// True iff the two lists span the same sublattice of D(N).
bool same_lattice(const std::vector<CuspDivisor>& a, const std::vector<CuspDivisor>& b);

}  // namespace modunits
