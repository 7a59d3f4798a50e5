#include <random>

#include "doctest.h"
#include "modunits/exact_linalg.hpp"

using namespace modunits;

namespace {

// gcd of all k x k minors, the k-th determinantal divisor.
Integer determinantal_divisor(const IntMatrix& A, std::size_t k) {
  Integer g = 0;
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::size_t> rs(k), cs(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t limit) {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (idx[i] + idx.size() - i < limit) {
        ++idx[i];
        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = A(rs[i], cs[j]);
      Integer d = minor.determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cs, n));
  } while (next(rs, m));
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = entry(rng);
  return A;
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  auto snf = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(snf.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(snf.P * IntMatrix{{2, 4}, {6, 8}} * snf.Q == snf.D);

  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));

  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.D == IntMatrix(2, 3));
  CHECK(zero.rank() == 0);
}

TEST_CASE("smith diagonal agrees with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix A = random_matrix(rng, r, c, 30);
    const auto snf = smith_normal_form(A);
    CHECK(snf.P * A * snf.Q == snf.D);
    const auto diag = snf.diagonal();
    Integer running = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      running *= diag[k - 1];
      CHECK(running == determinantal_divisor(A, k));
    }
  }
}

TEST_CASE("abelian groups normalize to invariant factors") {
  auto g = AbelianGroup::from_cyclic_orders({4, 6, 1});
  CHECK(g.invariant_factors() == std::vector<Integer>{2, 12});
  CHECK(g.order() == 24);
  CHECK(g.to_string() == "Z/2 x Z/12");
  CHECK(AbelianGroup::from_cyclic_orders({1, 1}).is_trivial());
  CHECK(AbelianGroup().to_string() == "0");
  CHECK(AbelianGroup::direct_sum(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3)) == AbelianGroup::cyclic(6));
}

TEST_CASE("quotient structure") {
  const IntMatrix std2 = IntMatrix::identity(2);
  CHECK(quotient_structure(std2, IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup::cyclic(6));
  CHECK(quotient_structure(std2, IntMatrix{{2, 0}, {0, 2}}).invariant_factors() == std::vector<Integer>{2, 2});
  CHECK(quotient_structure(std2, IntMatrix{{1, 1}, {0, 1}}).is_trivial());
  CHECK_THROWS_AS(quotient_structure(std2, IntMatrix{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_structure(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("bordered lattice index") {
  // (1,-1,0), (0,1,-1) span the whole sum-zero lattice of Z^3.
  const std::vector<Integer> ones{1, 1, 1};
  CHECK(bordered_lattice_index(IntMatrix{{1, -1, 0}, {0, 1, -1}}, ones) == 1);
  CHECK(bordered_lattice_index(IntMatrix{{2, -2, 0}, {0, 3, -3}}, ones) == 6);
}

TEST_CASE("bordered index matches quotient structure on random sublattices") {
  std::mt19937_64 rng(11);
  int compared = 0;
  while (compared < 50) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix coords = random_matrix(rng, n, n, 9);
    if (coords.determinant() == 0) continue;
    // Rows of `coords` in the basis e_{i+1} - e_0 of the sum-zero lattice.
    IntMatrix vecs(n, n + 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        vecs(r, i + 1) = coords(r, i);
        vecs(r, 0) -= coords(r, i);
      }
    std::vector<Integer> extra(n + 1);
    Integer s = 0;
    for (auto& x : extra) {
      x = static_cast<long>(rng() % 7) + 1;
      s += x;
    }
    const Integer index = bordered_lattice_index(vecs, extra);
    CHECK(index == quotient_structure(IntMatrix::identity(n), coords).order());
    ++compared;
  }
}

TEST_CASE("hermite basis, kernels and membership") {
  const IntMatrix H = hermite_row_basis(IntMatrix{{2, 4}, {3, 6}, {0, 0}});
  CHECK(H.rows() == 1);
  CHECK(H == IntMatrix{{1, 2}});

  const IntMatrix A{{1, 2}, {2, 4}, {0, 1}};
  const IntMatrix K = integer_left_kernel(A);
  REQUIRE(K.rows() == 1);
  const IntMatrix zero = K * A;
  CHECK(zero == IntMatrix(1, 2));

  const std::vector<Integer> v{3, 6};
  auto c = express_in_basis(IntMatrix{{1, 2}}, v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 3);
  const std::vector<Integer> w{1, 3};
  CHECK_FALSE(express_in_basis(IntMatrix{{1, 2}}, w).has_value());
}

TEST_CASE("rational inverse and Q/Z arithmetic") {
  const RationalMatrix A(IntMatrix{{2, 1}, {0, 3}});
  const RationalMatrix inv = A.inverse();
  CHECK(inv.common_denominator() == 6);
  CHECK((A * inv).scaled_to_integer(1) == IntMatrix::identity(2));
  CHECK_THROWS_AS(RationalMatrix(IntMatrix{{1, 2}, {2, 4}}).inverse(), std::invalid_argument);

  CHECK(QmodZ(7, 4) == QmodZ(3, 4));
  CHECK((QmodZ(1, 3) + QmodZ(2, 3)).is_zero());
  CHECK((-QmodZ(1, 5)).value() == Rational(4, 5));
  CHECK(QmodZ(5, 12).order() == 12);
}
