#include "doctest.h"
#include "modunits/eta_quotient.hpp"

using namespace modunits;

TEST_CASE("Ligozat conditions") {
  const auto f5 = EtaQuotient(5, {{1, -6}, {5, 6}});
  const auto rep = check_modular_function(f5);
  CHECK(rep.valid());
  CHECK(rep.delta_sum == 24);
  CHECK(rep.codelta_sum == -24);

  CHECK(check_modular_function(EtaQuotient(1)).valid());

  const auto bad = check_modular_function(EtaQuotient(2, {{1, 1}, {2, -1}}));
  CHECK(bad.weight_zero);
  CHECK_FALSE(bad.cusp_infinity);
  CHECK(bad.delta_sum == -1);
  CHECK_FALSE(bad.valid());

  // 2^-1 3^-1 6 is a square, 2^-1 is not.
  const auto nonsquare = check_modular_function(EtaQuotient(6, {{1, 1}, {2, -1}, {3, -1}, {6, 1}}));
  CHECK(nonsquare.weight_zero);
  CHECK(nonsquare.rational_square);
  CHECK(check_modular_function(EtaQuotient(6, {{1, 1}, {2, -1}})).rational_square == false);
}

TEST_CASE("orders at cusps") {
  CHECK(order_at_cusp(EtaQuotient(25, {{1, 1}}), 5) == Rational(1, 24));
  CHECK(order_at_cusp(EtaQuotient(25, {{25, 1}}), 5) == Rational(1, 24));
  CHECK(order_at_cusp(EtaQuotient(25, {{5, 1}}), 1) == Rational(5, 24));
  CHECK(eta_order_coefficient(25, 5, 1) == 1);
}

TEST_CASE("divisors of eta quotients") {
  CHECK(divisor(EtaQuotient(5, {{1, -6}, {5, 6}})) == CuspDivisor(5, {{5, 1}, {1, -1}}));
  CHECK(divisor(EtaQuotient(11, {{1, -12}, {11, 12}})) == CuspDivisor(11, {{11, 5}, {1, -5}}));
  CHECK_THROWS_AS(divisor(EtaQuotient(2, {{1, 1}, {2, -1}})), LigozatError);
}

TEST_CASE("generators") {
  const auto g = prime_power_generators(5, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == EtaQuotient(125, {{1, -6}, {5, 6}}));
  CHECK(g[1] == EtaQuotient(125, {{1, -1}, {25, 1}}));
  CHECK(g[2] == EtaQuotient(125, {{5, -1}, {125, 1}}));
  for (const auto& h : g) CHECK(check_modular_function(h).valid());

  const auto g13 = prime_power_generators(13, 1);
  REQUIRE(g13.size() == 1);
  CHECK(g13[0].exponent(13) == 2);

  CHECK_THROWS(prime_power_generators(3, 2));
}

TEST_CASE("pq generators") {
  for (auto [q, c] : {std::pair<std::int64_t, long>{37, 18}, {61, 30}}) {
    const auto f = pq_generators(13, q);
    REQUIRE(f.size() == 3);
    const std::int64_t N = 13 * q;
    // div f_3 = c (D_1 - D_2 - D_3) = c (P_0 - P_1 - P_2 + P_3)
    CHECK(divisor(f[2]) == CuspDivisor(N, {{1, c}, {13, -c}, {q, -c}, {N, c}}));
  }
}

TEST_CASE("parsing and printing") {
  const auto h = EtaQuotient::parse("eta(1)^-6 * eta(5)^6", 5);
  CHECK(h == EtaQuotient(5, {{1, -6}, {5, 6}}));
  CHECK(h.to_string() == "eta(1)^-6 * eta(5)^6");
  CHECK(EtaQuotient::parse(h.to_string(), 5) == h);
  CHECK(EtaQuotient::parse(" eta( 5 )^(2)*eta(1)", 5) == EtaQuotient(5, {{1, 1}, {5, 2}}));
  CHECK(EtaQuotient::parse("1", 7) == EtaQuotient(7));
  CHECK_THROWS_AS(EtaQuotient::parse("eta(3)^2", 5), std::invalid_argument);
  CHECK_THROWS_AS(EtaQuotient::parse("eta(5)^", 5), std::invalid_argument);
  CHECK_THROWS_AS(EtaQuotient::parse("zeta(5)", 5), std::invalid_argument);
}

TEST_CASE("gcd of divisor coefficients") {
  CHECK(gcd_of_divisor_coefficients(prime_power_generators(11, 1)[0]) == 5);
  const auto g25 = prime_power_generators(5, 2);
  CHECK(gcd_of_divisor_coefficients(g25[0] * g25[1]) == 1);
  const auto g169 = prime_power_generators(13, 2);
  for (int c = -2; c <= 2; ++c) CHECK(gcd_of_divisor_coefficients(g169[0] * g169[1].pow(c)) == 1);
}
