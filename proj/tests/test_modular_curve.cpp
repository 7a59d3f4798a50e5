#include <numeric>

#include "doctest.h"
#include "modunits/modular_curve.hpp"
#include "modunits/numtheory.hpp"

using namespace modunits;

TEST_CASE("number of cusps is sum of phi(gcd(d, N/d))") {
  for (std::int64_t N = 1; N <= 200; ++N) {
    std::int64_t expected = 0;
    for (auto d : divisors(N)) expected += euler_phi(std::gcd(d, N / d));
    std::int64_t total_degree = 0, width_sum = 0;
    for (const auto& c : cusps(N)) {
      total_degree += c.degree;
      width_sum += c.degree * c.width;
    }
    CHECK(total_degree == expected);
    // Widths of all complex cusps add up to the index of Gamma_0(N).
    CHECK(width_sum == gamma0_index(N));
  }
}

TEST_CASE("cusp records for N = 25") {
  const auto cs = cusps(25);
  REQUIRE(cs.size() == 3);
  CHECK(cs[1].d == 5);
  CHECK(cs[1].degree == 4);
  CHECK(cs[1].residue_conductor == 5);
  CHECK(cs[0].width == 25);
  CHECK(cs[2].width == 1);
  CHECK_THROWS(cusp_of_level(25, 3));
}

TEST_CASE("divisor arithmetic") {
  CuspDivisor a(25, {{1, 1}, {25, -1}});
  CuspDivisor b(25, {{5, 1}, {25, -4}});
  CHECK(a.in_cuspidal_group());
  CHECK(b.in_cuspidal_group());
  CHECK((a + b).degree() == 0);
  CHECK((a - a).is_zero());
  CHECK((a * Rational(1, 2)).is_integral() == false);
  CHECK(CuspDivisor(25, {{5, 1}}).degree() == 4);
  CHECK(CuspDivisor(11, {{11, 5}, {1, -5}}).to_string() == "-5*Q(1) + 5*Q(11)");
}

TEST_CASE("divisor basis") {
  const auto b1 = divisor_basis(5, 1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == CuspDivisor(5, {{1, 1}, {5, -1}}));

  const auto b2 = divisor_basis(5, 2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == CuspDivisor(25, {{1, 1}, {25, -1}}));
  CHECK(b2[1] == CuspDivisor(25, {{5, 1}, {25, -4}}));
}

TEST_CASE("cuspidal coordinates round trip") {
  const CuspDivisor E(125, {{1, 2}, {5, -1}, {25, 3}, {125, -2 + 4 - 3 * 4}});
  REQUIRE(E.in_cuspidal_group());
  const auto c = cuspidal_coordinates(E);
  CHECK(c == std::vector<Integer>{2, -1, 3});
  CHECK(from_cuspidal_coordinates(125, c) == E);
}

TEST_CASE("lambda embedding") {
  const auto b = divisor_basis(5, 2);
  CHECK(lambda_embedding(b[0], 5, 2) == std::vector<Integer>{-1, 1, 0});
  CHECK(lambda_embedding(b[1], 5, 2) == std::vector<Integer>{-4, 0, 4});
  CHECK(lambda_embedding(CuspDivisor(25), 5, 2) == std::vector<Integer>{0, 0, 0});
  CHECK_THROWS_AS(lambda_embedding(CuspDivisor(25, {{1, 1}}), 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(lambda_embedding(CuspDivisor(5, {{1, 1}, {5, -1}}), 5, 2), std::invalid_argument);
}
