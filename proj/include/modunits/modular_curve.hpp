#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modunits/exact_linalg.hpp"

namespace modunits {

/// The closed point Q_d of X_0(N) for a positive divisor d of N.
///
/// All Galois-conjugate complex cusps of level d are represented by this one
/// record; `degree` is their number.
struct Cusp {
  std::int64_t level_N = 1;
  std::int64_t d = 1;
  std::int64_t residue_conductor = 1;  // m = gcd(d, N/d); residue field Q(zeta_m)
  std::int64_t degree = 1;             // phi(m)
  std::int64_t width = 1;              // N / gcd(d^2, N)
};

// One cusp per positive divisor of N, ascending by level.
std::vector<Cusp> cusps(std::int64_t N);
Cusp cusp_of_level(std::int64_t N, std::int64_t d);

/// Divisor supported on the cusps of X_0(N): level d -> coefficient of Q_d.
///
/// Coefficients are rational so that orders of arbitrary eta products can be
/// stored before integrality is checked; elements of D(N) are integral of degree 0.
class CuspDivisor {
 public:
  CuspDivisor() = default;
  explicit CuspDivisor(std::int64_t N);
  CuspDivisor(std::int64_t N, const std::map<std::int64_t, Rational>& coefficients);

  std::int64_t level() const { return N_; }
  Rational coefficient(std::int64_t d) const;
  void set_coefficient(std::int64_t d, const Rational& value);
  // Nonzero coefficients only.
  const std::map<std::int64_t, Rational>& coefficients() const { return coeffs_; }

  // sum_d coeff(d) * phi(gcd(d, N/d))
  Rational degree() const;
  bool is_integral() const;
  bool is_zero() const { return coeffs_.empty(); }
  // Integral and of degree 0.
  bool in_cuspidal_group() const;

  CuspDivisor operator+(const CuspDivisor& other) const;
  CuspDivisor operator-(const CuspDivisor& other) const;
  CuspDivisor operator*(const Rational& k) const;
  bool operator==(const CuspDivisor& other) const = default;

  // "-5*Q(1) + 5*Q(11)", ascending level
  std::string to_string() const;

 private:
  void check_level(std::int64_t d) const;
  std::int64_t N_ = 1;
  std::map<std::int64_t, Rational> coeffs_;
};

/// Coordinates of E in D(N) with respect to the basis Q_d - phi(gcd(d,N/d)) Q_N,
/// d | N, d != N (ascending d). These are simply the coefficients at Q_d.
std::vector<Integer> cuspidal_coordinates(const CuspDivisor& E);
CuspDivisor from_cuspidal_coordinates(std::int64_t N, const std::vector<Integer>& coords);

/// D_i = P_i - phi((p^i, p^{n-i})) P_n for i = 0..n-1, with P_i the cusp of level p^i.
std::vector<CuspDivisor> divisor_basis(std::int64_t p, int n);

/// Embedding of D(p^n) into the sum-zero lattice of Z^{n+1}:
/// lambda(D_i) = -phi_i e_0 + phi_i e_{i+1}, phi_i = phi((p^i, p^{n-i})).
/// Coordinate 0 therefore carries P_n and coordinate i+1 carries P_i, each
/// weighted by the cusp degree.
std::vector<Integer> lambda_embedding(const CuspDivisor& E, std::int64_t p, int n);

}  // namespace modunits
