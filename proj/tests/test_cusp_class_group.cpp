#include <numeric>

#include "doctest.h"
#include "modunits/cusp_class_group.hpp"
#include "modunits/numtheory.hpp"

using namespace modunits;

TEST_CASE("closed-form structure examples") {
  CHECK(ling_structure(7, 2) == AbelianGroup::cyclic(2));
  CHECK(ling_structure(13, 2) == AbelianGroup::cyclic(7));
  CHECK(ling_structure(5, 1).is_trivial());
}

TEST_CASE("computed class groups") {
  CHECK(class_group(11, 1).group == AbelianGroup::cyclic(5));
  CHECK(class_group(5, 3).group == AbelianGroup::cyclic(25));
  const auto r = class_group(5, 4);
  CHECK(r.group == AbelianGroup::from_cyclic_orders({25, 125}));
  CHECK(r.order == 3125);
  CHECK(r.certified);
  CHECK_THROWS(class_group(3, 2));
}

TEST_CASE("computation agrees with the closed form") {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19})
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(class_group(p, n).group == ling_structure(p, n));
    }
}

TEST_CASE("level pq") {
  const auto r = class_group_pq(13, 61);
  CHECK(r.order == 130200);
  CHECK(r.certified);
  CHECK(class_group_pq(13, 37).group == AbelianGroup::from_cyclic_orders({6, 4788}));
}

TEST_CASE("order matrices") {
  for (std::int64_t p : {5, 7, 13})
    for (int n = 1; n <= 4; ++n) {
      const auto m = order_matrices(p, n);
      Integer prod = 1;
      for (int i = 0; i <= n; ++i) {
        const std::int64_t pi = ipow(p, static_cast<unsigned>(i));
        prod *= euler_phi(std::gcd(pi, ipow(p, static_cast<unsigned>(n)) / pi));
      }
      CHECK(m.U.determinant() == prod);

      // The first n rows of VMU/24 are the lambda images of the generator
      // divisors, with P_n moved from the last to the first coordinate.
      const IntMatrix vmu = m.VMU24();
      const auto gens = prime_power_generators(p, n);
      for (int r = 0; r < n; ++r) {
        const auto lam = lambda_embedding(divisor(gens[static_cast<std::size_t>(r)]), p, n);
        CHECK(vmu(static_cast<std::size_t>(r), static_cast<std::size_t>(n)) == 24 * lam[0]);
        for (int i = 0; i < n; ++i)
          CHECK(vmu(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) == 24 * lam[static_cast<std::size_t>(i) + 1]);
      }

      // Lattice index through the bordered determinant.
      std::vector<Integer> extra;
      IntMatrix vecs(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1);
      for (int r = 0; r < n; ++r)
        for (int j = 0; j <= n; ++j) vecs(r, j) = vmu(r, j);
      for (int j = 0; j <= n; ++j) extra.push_back(vmu(n, j));
      Integer scale = 1;
      for (int r = 0; r < n; ++r) scale *= 24;
      CHECK(bordered_lattice_index(vecs, extra) == class_group(p, n).order * scale * prod);
    }
}

TEST_CASE("Ligozat lattices") {
  const auto d11 = eta_unit_divisor_lattice(11);
  REQUIRE(d11.size() == 1);
  CHECK(same_lattice(d11, {CuspDivisor(11, {{11, 5}, {1, -5}})}));

  std::vector<CuspDivisor> gen25;
  for (const auto& h : prime_power_generators(5, 2)) gen25.push_back(divisor(h));
  CHECK(eta_unit_divisor_lattice(25).size() == 2);
  CHECK(same_lattice(eta_unit_divisor_lattice(25), gen25));

  const auto big = eta_unit_divisor_lattice(13 * 37);
  CHECK(big.size() == 3);
  std::vector<CuspDivisor> with_f = big;
  for (const auto& h : pq_generators(13, 37)) with_f.push_back(divisor(h));
  CHECK(same_lattice(big, with_f));
}

TEST_CASE("class group of an arbitrary level") {
  const auto r = class_group_of_level(11);
  CHECK(r.group == AbelianGroup::cyclic(5));
  CHECK(r.certified);
  CHECK_FALSE(class_group_of_level(12).certified);
  CHECK(class_group_of_level(125).group == class_group(5, 3).group);
}
