#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "modunits/closed_forms.hpp"
#include "modunits/errors.hpp"
#include "modunits/eta_transform.hpp"
#include "modunits/numtheory.hpp"

using namespace modunits;

namespace {

// Random (a b; c d) in SL2(Z) with c > 0.
SigmaMatrix random_unimodular(std::mt19937_64& rng, long bound = 400) {
  std::uniform_int_distribution<long> cs(1, bound), ds(-bound, bound);
  for (;;) {
    const long c = cs(rng);
    const long d = ds(rng);
    if (std::gcd(c, d) != 1) continue;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(d).get_mpz_t(), Integer(c).get_mpz_t());
    // s d + t c = 1, so (s -t; c d) has determinant 1.
    return {s, -t, Integer(c), Integer(d)};
  }
}

}  // namespace

TEST_CASE("jacobi symbol") {
  CHECK(jacobi_symbol(1, 1) == 1);
  CHECK(jacobi_symbol(3, 7) == -1);
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(5, 15) == 0);
  CHECK_THROWS(jacobi_symbol(3, 8));
}

TEST_CASE("eta multiplier examples") {
  CHECK(eta_multiplier(1, 1, 0, 1) == QmodZ(1, 24));
  CHECK(eta_multiplier(0, -1, 1, 0).is_zero());
  CHECK_THROWS(eta_multiplier(0, 1, -1, 0));
}

TEST_CASE("multiplier is a 24th root of unity and matches the Dedekind-sum form") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_unimodular(rng);
    REQUIRE(g.determinant() == 1);
    const auto eps = eta_multiplier(g.a, g.b, g.c, g.d);
    CHECK(24 % eps.order() == 0);
    CHECK(eps == eta_multiplier_dedekind(g.a, g.b, g.c, g.d));
  }
}

TEST_CASE("dedekind sums") {
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(0, 1) == 0);
  // s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 - 1/4
  CHECK(dedekind_sum(5, 7) + dedekind_sum(7, 5) == make_rational(5 * 5 + 7 * 7 + 1, 12 * 35) - Rational(1, 4));
}

TEST_CASE("sigma matrices") {
  CHECK(sigma_matrix(5, 2, 1) == SigmaMatrix{1, 0, 5, 1});
  CHECK(sigma_matrix(5, 2, 0) == SigmaMatrix{-25, -1, 25, 0});
  for (std::int64_t p : {5, 13})
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto s = sigma_matrix(p, n, m);
        const Rational pm = ipow(p, static_cast<unsigned>(m));
        const Rational alpha = 2 * m >= n ? 1 / pm : -1 / pm;
        const auto img = s.image_of_infinity();
        REQUIRE(img.has_value());
        CHECK(*img == alpha);
        CHECK(sigma_width(s, ipow(p, static_cast<unsigned>(n))) == 1);
      }
  CHECK_THROWS_AS(sigma_matrix(5, 2, 3), ScopeError);
  for (std::int64_t m : {1, 13, 37, 481}) CHECK(pq_sigma_matrix(13, 37, m).determinant() > 0);
}

TEST_CASE("leading coefficient values") {
  const auto f = prime_power_generators(5, 2);
  CHECK(leading_coefficient(f[0], 5, 2, 1) == LeadingCoeff::one());
  CHECK(leading_coefficient(f[0], 5, 2, 0) == LeadingCoeff::prime_power(5, -6));
  CHECK(leading_coefficient(f[0], 5, 2, 0).to_string() == "5^(-3)");
  const auto g0 = leading_coefficient(f[1], 5, 2, 1);
  CHECK(g0 == LeadingCoeff(QmodZ(-1, 5)) / LeadingCoeff::sqrt_p_star(5));
  CHECK(g0.to_string() == "e(3/10)*5^(-1/2)");
}

TEST_CASE("leading coefficients are multiplicative") {
  for (std::int64_t p : {5, 7, 13})
    for (int n = 1; n <= 4; ++n) {
      const auto g = prime_power_generators(p, n);
      for (int m = 0; m <= n; ++m)
        for (std::size_t i = 0; i < g.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) {
            const auto prod = g[i] * g[j].pow(-2);
            CHECK(leading_coefficient(prod, p, n, m) ==
                  leading_coefficient(g[i], p, n, m) * leading_coefficient(g[j], p, n, m).pow(-2));
          }
    }
}

TEST_CASE("leading orders agree with the cusp orders") {
  for (std::int64_t p : {5, 13})
    for (int n = 1; n <= 4; ++n) {
      const std::int64_t N = ipow(p, static_cast<unsigned>(n));
      for (const auto& h : prime_power_generators(p, n))
        for (int m = 0; m <= n; ++m)
          CHECK(leading_term(h, sigma_matrix(p, n, m)).order ==
                order_at_cusp(h, ipow(p, static_cast<unsigned>(m))));
      for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= n; ++m)
          CHECK(order_at_cusp(EtaQuotient(N, {{ipow(p, static_cast<unsigned>(k)), 1}}),
                              ipow(p, static_cast<unsigned>(m))) == closed::eta_order_prime_power(p, n, k, m));
    }
}

TEST_CASE("numeric eta") {
  const auto a = eta_numeric({0, 1}, 50);
  const auto b = eta_numeric({0, 1}, 400);
  CHECK(std::abs(a - b) < 1e-15);
  CHECK(a.real() == doctest::Approx(0.7682254223).epsilon(1e-9));
  CHECK(std::abs(a.imag()) < 1e-15);
}

TEST_CASE("transformation law holds numerically") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.6, 2.0);
  for (int i = 0; i < 50; ++i) {
    // Small c, d keep Im(g tau) away from 0, where the product converges slowly.
    const auto g = random_unimodular(rng, 6);
    const std::complex<double> tau{x(rng), y(rng)};
    const std::complex<double> ct = g.c.get_d() * tau + g.d.get_d();
    const std::complex<double> gtau = (g.a.get_d() * tau + g.b.get_d()) / ct;
    const auto eps = eta_multiplier(g.a, g.b, g.c, g.d);
    const std::complex<double> rhs = std::polar(1.0, 2 * M_PI * eps.value().get_d()) *
                                     std::sqrt(ct / std::complex<double>(0, 1)) * eta_numeric(tau, 2000);
    CHECK(std::abs(eta_numeric(gtau, 100000) - rhs) < 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("numeric oracle matches the exact leading coefficient") {
  for (std::int64_t p : {5, 13})
    for (int n = 1; n <= 3; ++n)
      for (const auto& h : prime_power_generators(p, n))
        for (int m = 0; m <= n; ++m) {
          const auto s = sigma_matrix(p, n, m);
          const auto lt = leading_term(h, s);
          const auto num = numeric_leading_coefficient(h, s, lt.order);
          const auto exact = lt.coeff.to_complex();
          CHECK(std::abs(num.value - exact) < 1e-8 * std::max(1.0, std::abs(exact)));
        }
}

TEST_CASE("pq table magnitudes") {
  const auto t = pq_leading_coefficients(13, 37);
  const auto closed_t = closed::pq_magnitude_table(13, 37);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(t[r][c].same_magnitude(closed_t[r][c]));
  for (std::size_t c = 0; c < 4; ++c) CHECK(t[2][c].half_exponents().empty());
}
