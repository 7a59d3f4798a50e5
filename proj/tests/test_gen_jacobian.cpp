#include <numeric>

#include "doctest.h"
#include "modunits/closed_forms.hpp"
#include "modunits/cusp_class_group.hpp"
#include "modunits/errors.hpp"
#include "modunits/gen_jacobian.hpp"
#include "modunits/numtheory.hpp"

using namespace modunits;

TEST_CASE("Delta matrix examples") {
  CHECK(delta_matrix(5, 3) == -IntMatrix{{3, 0, 0}, {1, 1, 0}, {1, 2, 1}});
  CHECK(delta_matrix(13, 1) == IntMatrix{{-1}});
  for (std::int64_t p : {5, 7, 11, 13})
    for (int n = 1; n <= 5; ++n) {
      const IntMatrix D = delta_matrix(p, n);
      CHECK(D == closed::delta_matrix(p, n));
      const Integer a_prime = 12 / std::gcd(p - 1, std::int64_t{12});
      CHECK(abs(D.determinant()) == a_prime);
    }
  CHECK_THROWS_AS(delta_matrix(3, 2), ScopeError);
}

TEST_CASE("Delta cokernel") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(delta_cokernel(5, n) == AbelianGroup::cyclic(3));
    CHECK(delta_cokernel(13, n).is_trivial());
    CHECK(delta_cokernel(7, n) == AbelianGroup::cyclic(2));
  }
}

TEST_CASE("injectivity on the cuspidal class group") {
  CHECK(delta_kernel_on_cuspidal(5, 2).is_trivial());
  CHECK(delta_kernel_on_cuspidal(13, 3).is_trivial());
  for (std::int64_t p : {5, 7, 11, 13})
    for (int n = 1; n <= 4; ++n) {
      const auto an = analyze_delta_kernel(p, n);
      CHECK(an.generic.kernel == an.kernel_psi);
      CHECK(an.class_group.order() == an.generic.kernel.order() * an.generic.image.order());
    }
}

TEST_CASE("snake kernel on a toy example") {
  // D = Z, principal lattice 4Z, Delta(4) = 2: kernel Z/2, image Z/2.
  const auto r = snake_kernel(IntMatrix{{4}}, IntMatrix{{2}});
  CHECK(r.kernel == AbelianGroup::cyclic(2));
  CHECK(r.image == AbelianGroup::cyclic(2));
}

TEST_CASE("roots of unity of the residue fields") {
  CHECK(mu_contribution(5, 1) == AbelianGroup::cyclic(2));
  CHECK(mu_contribution(5, 2) == AbelianGroup::from_cyclic_orders({2, 10}));
  CHECK(mu_contribution(5, 3) == AbelianGroup::from_cyclic_orders({2, 10, 10}));
}

TEST_CASE("generalized Jacobian torsion") {
  const auto t1 = generalized_torsion(5, 1);
  CHECK(t1.group == AbelianGroup::cyclic(2));
  CHECK_FALSE(t1.conditional);
  CHECK(t1.statement == "Z/2 (unconditional)");
  CHECK(generalized_torsion(5, 2).group == AbelianGroup::from_cyclic_orders({2, 10}));
  CHECK(generalized_torsion(5, 3).group == AbelianGroup::from_cyclic_orders({2, 10, 10}));
  for (std::int64_t p : {5, 7, 13})
    for (int n = 1; n <= 5; ++n) CHECK(generalized_torsion(p, n).group == closed::generalized_torsion(p, n));
}

TEST_CASE("class of a single divisor") {
  const auto f = prime_power_generators(11, 1)[0];
  std::vector<LeadingCoeff> lc;
  for (int j = 0; j <= 1; ++j) lc.push_back(leading_coefficient(f, 11, 1, j));
  const CuspDivisor E(11, {{11, 1}, {1, -1}});
  const auto cls = evaluate_delta_class(E, 5, f, lc, 11, 1);
  REQUIRE(cls.size() == 1);
  CHECK_FALSE(cls[0].is_zero());
  CHECK(cls[0].order() == 5);

  const auto principal = evaluate_delta_class(E * Rational(5), 1, f, lc, 11, 1);
  CHECK(principal[0].is_zero());
  CHECK_THROWS_AS(evaluate_delta_class(E, 4, f, lc, 11, 1), std::invalid_argument);
}

TEST_CASE("evaluated classes agree with the Delta matrix route") {
  for (std::int64_t p : {5, 7, 13})
    for (int n = 1; n <= 3; ++n) {
      const auto gens = prime_power_generators(p, n);
      std::vector<CuspDivisor> divs;
      for (const auto& g : gens) divs.push_back(divisor(g));
      const IntMatrix B = coordinate_matrix(divs);
      const RationalMatrix W = RationalMatrix(B).inverse() * RationalMatrix(delta_matrix(p, n));
      const auto basis = divisor_basis(p, n);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto x = cuspidal_coordinates(basis[k]);
        Integer m = 1;
        std::optional<std::vector<Integer>> c;
        for (;; ++m) {
          std::vector<Integer> mx;
          for (const auto& v : x) mx.push_back(m * v);
          if ((c = express_in_basis(B, mx))) break;
        }
        EtaQuotient h(ipow(p, static_cast<unsigned>(n)));
        for (std::size_t r = 0; r < gens.size(); ++r) h = h * gens[r].pow((*c)[r]);
        std::vector<LeadingCoeff> lc;
        for (int j = 0; j <= n; ++j) lc.push_back(leading_coefficient(h, p, n, j));
        const auto cls = evaluate_delta_class(basis[k], m, h, lc, p, n);
        for (int i = 0; i < n; ++i) {
          Rational w = 0;
          for (std::size_t r = 0; r < x.size(); ++r) w += x[r] * W(r, static_cast<std::size_t>(i));
          CHECK(cls[static_cast<std::size_t>(i)] == -QmodZ(w));
        }
      }
    }
}

TEST_CASE("level pq kernel") {
  for (auto [q, c] : {std::pair<std::int64_t, long>{37, 18}, {61, 30}, {73, 36}}) {
    const auto an = analyze_pq_kernel(13, q);
    CHECK(an.snake.kernel == AbelianGroup::cyclic(c));
    CHECK(an.c == c);
    CHECK(an.generated_by_d1_d2_d3);
    CHECK(an.class_group.order() == closed::class_number_pq(13, q));
    const auto t = pq_delta_kernel(13, q);
    CHECK(t.mu_part == AbelianGroup::from_cyclic_orders({2, 2, 2}));
    CHECK(t.order == 8 * c);
    CHECK(t.up_to_2_torsion);
  }
}

TEST_CASE("split injection scope") {
  const auto r5 = split_injection_scope(5, 1);
  CHECK(r5.p_star == 5);
  CHECK(split_injection_scope(7, 2).p_star == -7);
  CHECK(r5.kernel_note.find("5 (x) 1/2") != std::string::npos);
  CHECK_THROWS_AS(split_injection_scope(2, 1), ScopeError);
}
