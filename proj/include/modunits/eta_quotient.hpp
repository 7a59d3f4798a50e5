#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modunits/exact_linalg.hpp"
#include "modunits/modular_curve.hpp"

namespace modunits {

/// prod_{delta | N} eta(delta tau)^{r_delta}, stored as its exponent vector.
class EtaQuotient {
 public:
  EtaQuotient() = default;
  explicit EtaQuotient(std::int64_t N);
  EtaQuotient(std::int64_t N, const std::map<std::int64_t, Integer>& exponents);

  // Parses "eta(1)^-6 * eta(5)^6"; "1" is the empty product. Whitespace is ignored,
  // exponents may be written ^k, ^-k or ^(k), a missing exponent means 1.
  static EtaQuotient parse(const std::string& text, std::int64_t N);

  std::int64_t level() const { return N_; }
  Integer exponent(std::int64_t delta) const;
  // Nonzero exponents only, ascending delta.
  const std::map<std::int64_t, Integer>& exponents() const { return exps_; }
  void set_exponent(std::int64_t delta, const Integer& r);

  // Exponent vector over all divisors of N (ascending), zeros included.
  std::vector<Integer> exponent_vector() const;
  static EtaQuotient from_exponent_vector(std::int64_t N, const std::vector<Integer>& r);

  EtaQuotient operator*(const EtaQuotient& other) const;
  EtaQuotient pow(const Integer& k) const;
  EtaQuotient inverse() const { return pow(-1); }
  bool operator==(const EtaQuotient& other) const = default;

  // Canonical text form, ascending delta: "eta(1)^-6 * eta(5)^6".
  std::string to_string() const;

 private:
  void check_divisor(std::int64_t delta) const;
  std::int64_t N_ = 1;
  std::map<std::int64_t, Integer> exps_;
};

/// The four conditions for an eta quotient to be a modular function on X_0(N).
struct LigozatReport {
  bool weight_zero = false;      // sum r_delta = 0
  bool rational_square = false;  // prod delta^{r_delta} is a square in Q
  bool cusp_infinity = false;    // sum r_delta delta == 0 mod 24
  bool cusp_zero = false;        // sum r_delta N/delta == 0 mod 24
  Integer exponent_sum;
  Integer delta_sum;
  Integer codelta_sum;

  bool valid() const { return weight_zero && rational_square && cusp_infinity && cusp_zero; }
  std::string describe() const;
};

class LigozatError : public std::invalid_argument {
 public:
  LigozatError(const std::string& what, LigozatReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const LigozatReport& report() const { return report_; }

 private:
  LigozatReport report_;
};

LigozatReport check_modular_function(const EtaQuotient& h);

/// a_N(d, delta) = (N / gcd(d, N/d)) * gcd(d, delta)^2 / (d delta); the order of
/// eta(delta tau) at a cusp of level d is a_N(d, delta) / 24.
Rational eta_order_coefficient(std::int64_t N, std::int64_t d, std::int64_t delta);

/// sum_delta r_delta a_N(d, delta) / 24, for any exponent vector.
Rational order_at_cusp(const EtaQuotient& h, std::int64_t d);

/// Divisor of a Ligozat-valid eta quotient. Throws LigozatError if any condition
/// fails and std::logic_error if the summed orders are not integral.
CuspDivisor divisor(const EtaQuotient& h);

/// f = (eta(p tau)/eta(tau))^{24/(p-1,12)} followed by
/// g_k = eta(p^{k+2} tau)/eta(p^k tau) for k = 0..n-2. Requires p >= 5 prime.
std::vector<EtaQuotient> prime_power_generators(std::int64_t p, int n);

/// f_1 = eta(1)eta(q)/(eta(p)eta(pq)), f_2 = eta(1)eta(p)/(eta(q)eta(pq)),
/// f_3 = eta(1)eta(pq)/(eta(p)eta(q)), for distinct primes p == q == 1 mod 12.
std::vector<EtaQuotient> pq_generators(std::int64_t p, std::int64_t q);

/// gcd of the integer cusp orders s_0..s_n of div(h).
Integer gcd_of_divisor_coefficients(const EtaQuotient& h);

}  // namespace modunits
