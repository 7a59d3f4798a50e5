#include "modunits/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "modunits/numtheory.hpp"

namespace modunits::closed {

namespace {

Integer pw(std::int64_t p, long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

Integer small_a(std::int64_t p) { return (p - 1) / std::gcd(p - 1, std::int64_t{12}); }
Integer small_b(std::int64_t p) { return (p + 1) / std::gcd(p + 1, std::int64_t{12}); }

}  // namespace

Rational eta_order_prime_power(std::int64_t p, int n, int k, int m) {
  long e;
  if (2 * m >= n)
    e = k <= m ? k : 2 * m - k;
  else
    e = m <= k ? n - k : n + k - 2 * m;
  return make_rational(pw(p, e), 24);
}

LeadingCoeff leading_coefficient_table(std::int64_t p, int n, int gen, int m) {
  const Integer ab = small_a(p) * small_b(p);
  const Integer a_prime = 12 / std::gcd(p - 1, std::int64_t{12});
  const LeadingCoeff inv_sqrt_p_star = LeadingCoeff::sqrt_p_star(p).inverse();
  const LeadingCoeff inv_p = LeadingCoeff::prime_power(p, -2);
  auto e = [](const Rational& x) { return LeadingCoeff(QmodZ(x)); };
  if (2 * m >= n) {
    if (gen == 0) return LeadingCoeff::one();
    const int k = gen - 1;
    if (k <= m - 2) return LeadingCoeff::one();
    if (k == m - 1) return e(make_rational(p - 1, 4)) * e(make_rational(-ab, p)) * inv_sqrt_p_star;
    return e(make_rational(-ab, pw(p, k + 2 - m))) * inv_p;
  }
  if (gen == 0) {
    if (m == 0) return LeadingCoeff::prime_power(p, -2 * a_prime);
    return e(make_rational(-small_a(p), pw(p, m)));
  }
  const int k = gen - 1;
  if (k >= m) return inv_p;
  if (k == m - 1) return e(make_rational(ab, p)) * inv_sqrt_p_star;
  return e(make_rational(ab, pw(p, m - k)));
}

Integer det_V(std::int64_t p, int n) { return Integer(24 * (n + 1)) / std::gcd(p - 1, std::int64_t{12}); }

Integer det_M_times_24(std::int64_t p, int n) {
  const long e = n % 2 == 1 ? static_cast<long>(n - 1) * (3 * n - 1) / 4 : static_cast<long>(n) * (3 * n - 4) / 4;
  Integer ab_n;
  const Integer ab = small_a(p) * small_b(p);
  mpz_pow_ui(ab_n.get_mpz_t(), ab.get_mpz_t(), static_cast<unsigned long>(n));
  return ab_n * pw(p, e);
}

Integer det_U(std::int64_t p, int n) {
  Integer prod = 1;
  for (int i = 0; i <= n; ++i) prod *= euler_phi(ipow(p, static_cast<unsigned>(std::min(i, n - i))));
  return prod;
}

Rational vmu_last_row_sum(std::int64_t p, int n) {
  return make_rational(Integer(n + 1) * pw(p, n - 1) * (p + 1), 24);
}

IntMatrix delta_matrix(std::int64_t p, int n) {
  const std::size_t dim = static_cast<std::size_t>(n);
  IntMatrix D(dim, dim);
  D(0, 0) = -Integer(12 / std::gcd(p - 1, std::int64_t{12}));
  for (std::size_t r = 1; r < dim; ++r) {
    D(r, 0) = -1;
    for (std::size_t j = 1; j < r; ++j) D(r, j) = -2;
    D(r, r) = -1;
  }
  return D;
}

AbelianGroup generalized_torsion(std::int64_t p, int n) {
  std::vector<Integer> orders;
  auto add = [&](int i) { orders.push_back(2 * pw(p, i)); };
  if (n == 1) return AbelianGroup::cyclic(2);
  if (n % 2 == 0) {
    for (int i = 0; i <= n / 2 - 1; ++i) add(i);
    for (int i = 1; i <= n / 2; ++i) add(i);
  } else {
    for (int i = 0; i <= (n - 1) / 2; ++i) add(i);
    for (int i = 1; i <= (n - 1) / 2; ++i) add(i);
  }
  return AbelianGroup::from_cyclic_orders(orders);
}

Integer class_number_pq(std::int64_t p, std::int64_t q) {
  const Integer a = Integer((p - 1) * (q + 1)) / 24;
  const Integer b = Integer((p + 1) * (q - 1)) / 24;
  const Integer c = Integer((p - 1) * (q - 1)) / 24;
  return 4 * a * b * c;
}

std::vector<std::vector<LeadingCoeff>> pq_magnitude_table(std::int64_t p, std::int64_t q) {
  const LeadingCoeff one = LeadingCoeff::one();
  const LeadingCoeff P = LeadingCoeff::prime_power(p, 2), Q = LeadingCoeff::prime_power(q, 2);
  return {{P, one, P, one}, {Q, Q, one, one}, {one, one, one, one}};
}

}  // namespace modunits::closed
