#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modunits/eta_quotient.hpp"
#include "modunits/exact_linalg.hpp"

namespace modunits {

/// e^{2 pi i x} for x in Q/Z.
using UnitPhase = QmodZ;

/// zeta * prod_p p^{v_p / 2}: a root of unity times a square root of a
/// positive rational number. Closed under products and inverses.
class LeadingCoeff {
 public:
  LeadingCoeff() = default;
  explicit LeadingCoeff(UnitPhase phase, std::map<std::int64_t, Integer> half_exponents = {});

  static LeadingCoeff one() { return LeadingCoeff(); }
  // p^{v/2}
  static LeadingCoeff prime_power(std::int64_t p, const Integer& half_exponent);
  // The twisted square root e^{2 pi i (p-1)/8} sqrt(p).
  static LeadingCoeff sqrt_p_star(std::int64_t p);

  const UnitPhase& phase() const { return phase_; }
  const std::map<std::int64_t, Integer>& half_exponents() const { return half_; }
  Integer half_exponent(std::int64_t p) const;

  LeadingCoeff operator*(const LeadingCoeff& other) const;
  LeadingCoeff operator/(const LeadingCoeff& other) const { return *this * other.inverse(); }
  LeadingCoeff inverse() const;
  LeadingCoeff pow(const Integer& k) const;
  bool operator==(const LeadingCoeff& other) const = default;

  // Same value up to a root of unity.
  bool same_magnitude(const LeadingCoeff& other) const { return half_ == other.half_; }
  std::complex<double> to_complex() const;
  // "e(3/8)*5^(-1/2)", "1", "5^(-3)"
  std::string to_string() const;

 private:
  UnitPhase phase_;
  std::map<std::int64_t, Integer> half_;
};

/// 2x2 integer matrix (a b; c d) acting by Moebius transformations.
struct SigmaMatrix {
  Integer a, b, c, d;

  Integer determinant() const { return a * d - b * c; }
  // sigma(infinity) = a/c, or nullopt when c = 0 (the cusp at infinity itself).
  std::optional<Rational> image_of_infinity() const;
  bool operator==(const SigmaMatrix& other) const = default;
  std::string to_string() const;
};

/// Jacobi symbol (a/b); b must be odd and positive.
int jacobi_symbol(const Integer& a, const Integer& b);

/// Multiplier of eta under gamma = (a b; c d) in SL2(Z):
///   c > 0:  eta(gamma tau) = e(phase) * sqrt((c tau + d)/i) * eta(tau)  (principal branch)
///   c = 0:  eta(tau + b/d) = e(phase) * eta(tau)  (no automorphy factor)
/// c < 0 is rejected since the principal-branch square root has no uniform multiplier there.
UnitPhase eta_multiplier(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// Same multiplier computed from the Dedekind-sum formula (c > 0 only); an
/// independent cross-check of eta_multiplier.
UnitPhase eta_multiplier_dedekind(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// s(h, k) = sum_{r=1}^{k-1} ((r/k)) ((hr/k)), k > 0, gcd(h, k) = 1, via reciprocity.
Rational dedekind_sum(const Integer& h, const Integer& k);

/// Cusp representatives alpha_m = 1/p^m (2m >= n) or -1/p^m (2m < n) and
///   sigma_m = (1 0; p^m 1)           if 2m >= n,
///   sigma_m = (-p^{n-m} -1; p^n 0)   if 2m < n.
SigmaMatrix sigma_matrix(std::int64_t p, int n, int m);

/// Level pq: the Atkin-Lehner type normalizer (m' -b; pq d m') with d m' + b m = 1,
/// m' = pq/m, mapping infinity to 1/m. m must be one of 1, p, q, pq.
SigmaMatrix pq_sigma_matrix(std::int64_t p, std::int64_t q, std::int64_t m);

/// Smallest h > 0 with sigma T^h sigma^{-1} in Gamma_0(N).
Integer sigma_width(const SigmaMatrix& sigma, std::int64_t N);

/// h(sigma tau) = coeff * q^order + higher terms, q = e^{2 pi i tau}.
struct LeadingTerm {
  LeadingCoeff coeff;
  Rational order;
};

/// Exact leading term of a weight-0 eta quotient composed with sigma.
/// Throws std::invalid_argument if sum r_delta != 0 or det sigma <= 0.
LeadingTerm leading_term(const EtaQuotient& h, const SigmaMatrix& sigma);

/// Leading coefficient of h (level p^n) at the cusp of level p^m w.r.t. the
/// uniformizer e^{2 pi i sigma_m^{-1} tau}. Throws ScopeError if m is out of range.
LeadingCoeff leading_coefficient(const EtaQuotient& h, std::int64_t p, int n, int m);

/// Rows f_1, f_2, f_3; columns the cusps of level 1, p, q, pq (using pq_sigma_matrix).
std::vector<std::vector<LeadingCoeff>> pq_leading_coefficients(std::int64_t p, std::int64_t q);

/// Truncated-product eta(tau) = q^{1/24} prod_{k <= terms} (1 - q^k); Im tau > 0.
/// Stops early once |q^k| < 1e-18.
std::complex<double> eta_numeric(std::complex<double> tau, int terms = 200);

struct NumericValue {
  std::complex<double> value;
  double error_estimate = 0;  // size of the first neglected q-power term
};

/// h(sigma(iY)) * q^{-order} with q = e^{-2 pi Y}. Each eta factor is first
/// moved to the standard fundamental domain by an exact rational reduction, so
/// large orders cause no cancellation problems. Requires Y >= 4, terms >= 50.
NumericValue numeric_leading_coefficient(const EtaQuotient& h, const SigmaMatrix& sigma, const Rational& order,
                                         double Y = 8.0, int terms = 200);

}  // namespace modunits
