#include "modunits/cusp_class_group.hpp"

#include <numeric>
#include <stdexcept>

#include "modunits/errors.hpp"
#include "modunits/numtheory.hpp"

namespace modunits {

namespace {

void require_prime_at_least_5(std::int64_t p) {
  if (!is_prime(p) || p < 5)
    throw ScopeError("the prime-power results need a prime p >= 5 (got p = " + std::to_string(p) + ")");
}

}  // namespace

IntMatrix coordinate_matrix(const std::vector<CuspDivisor>& divisors) {
  if (divisors.empty()) throw std::invalid_argument("coordinate_matrix: empty list");
  std::vector<std::vector<Integer>> rows;
  for (const auto& E : divisors) rows.push_back(cuspidal_coordinates(E));
  return IntMatrix::from_rows(rows, rows.front().size());
}

bool same_lattice(const std::vector<CuspDivisor>& a, const std::vector<CuspDivisor>& b) {
  return hermite_row_basis(coordinate_matrix(a)) == hermite_row_basis(coordinate_matrix(b));
}

ClassGroupResult class_group(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  if (n < 1) throw std::invalid_argument("class_group: n must be >= 1");
  std::vector<std::vector<Integer>> ambient, sub;
  for (const auto& D : divisor_basis(p, n)) ambient.push_back(lambda_embedding(D, p, n));
  ClassGroupResult res;
  res.N = ipow(p, static_cast<unsigned>(n));
  for (const auto& h : prime_power_generators(p, n)) {
    res.generator_divisors.push_back(divisor(h));
    sub.push_back(lambda_embedding(res.generator_divisors.back(), p, n));
  }
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  res.group = quotient_structure(IntMatrix::from_rows(ambient, dim), IntMatrix::from_rows(sub, dim));
  res.order = res.group.order();
  res.certified = true;
  return res;
}

AbelianGroup ling_structure(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  if (n < 1) throw std::invalid_argument("ling_structure: n must be >= 1");
  const Integer a = (p - 1) / std::gcd(p - 1, std::int64_t{12});
  const Integer b = (p + 1) / std::gcd(p + 1, std::int64_t{12});
  std::vector<Integer> orders;
  for (int i = 0; i < n; ++i) orders.push_back(a);
  for (int i = 0; i + 1 < n; ++i) orders.push_back(b);
  auto p_power = [p](int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
  };
  const int lo1 = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  const int lo2 = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
  for (int i = lo1; i <= n - 2; ++i) orders.push_back(p_power(i));
  for (int i = lo2; i <= n - 1; ++i) orders.push_back(p_power(i));
  return AbelianGroup::from_cyclic_orders(orders);
}

ClassGroupResult class_group_pq(std::int64_t p, std::int64_t q) {
  const auto gens = pq_generators(p, q);
  ClassGroupResult res;
  res.N = p * q;
  for (const auto& h : gens) res.generator_divisors.push_back(divisor(h));
  res.group = quotient_structure(IntMatrix::identity(3), coordinate_matrix(res.generator_divisors));
  res.order = res.group.order();
  res.certified = true;
  return res;
}

OrderMatrices order_matrices(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  if (n < 1) throw std::invalid_argument("order_matrices: n must be >= 1");
  const std::int64_t N = ipow(p, static_cast<unsigned>(n));
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  OrderMatrices om{p, n, IntMatrix(dim, dim), IntMatrix(dim, dim), IntMatrix(dim, dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    const std::int64_t pi = ipow(p, static_cast<unsigned>(i));
    om.U(i, i) = euler_phi(std::gcd(pi, N / pi));
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational a = eta_order_coefficient(N, ipow(p, static_cast<unsigned>(j)), pi);
      if (a.get_den() != 1) throw std::logic_error("order_matrices: non-integral a_N");
      om.M24(i, j) = a.get_num();
    }
  }
  const auto gens = prime_power_generators(p, n);
  const auto divs = divisors(N);  // p^0, ..., p^n
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t j = 0; j < dim; ++j) om.V(r, j) = gens[r].exponent(divs[j]);
  for (std::size_t j = 0; j < dim; ++j) om.V(dim - 1, j) = 1;
  return om;
}

IntMatrix ligozat_exponent_lattice(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("ligozat_exponent_lattice: N must be >= 1");
  const auto divs = divisors(N);
  const auto primes = factorize(N);
  const std::size_t k = divs.size();

  // Columns: sum r = 0, sum r*delta == 0 (24), sum r*N/delta == 0 (24), and
  // sum r*v_l(delta) == 0 (2) for each prime l | N.
  std::vector<std::vector<Integer>> columns;
  std::vector<long> moduli;
  std::vector<Integer> col(k);
  for (std::size_t i = 0; i < k; ++i) col[i] = 1;
  columns.push_back(col), moduli.push_back(0);
  for (std::size_t i = 0; i < k; ++i) col[i] = divs[i];
  columns.push_back(col), moduli.push_back(24);
  for (std::size_t i = 0; i < k; ++i) col[i] = N / divs[i];
  columns.push_back(col), moduli.push_back(24);
  for (const auto& [l, e] : primes) {
    (void)e;
    for (std::size_t i = 0; i < k; ++i) {
      int v = 0;
      for (std::int64_t d = divs[i]; d % l == 0; d /= l) ++v;
      col[i] = v;
    }
    columns.push_back(col), moduli.push_back(2);
  }

  std::size_t slack = 0;
  for (long m : moduli)
    if (m != 0) ++slack;
  IntMatrix A(k + slack, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) A(i, j) = columns[j][i];
  std::size_t extra = k;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (moduli[j] != 0) A(extra++, j) = moduli[j];

  const IntMatrix kernel = integer_left_kernel(A);
  IntMatrix projected(kernel.rows(), k);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) projected(i, j) = kernel(i, j);
  return hermite_row_basis(projected);
}

std::vector<CuspDivisor> eta_unit_divisor_lattice(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("eta_unit_divisor_lattice: N must be >= 2");
  const IntMatrix basis = ligozat_exponent_lattice(N);
  std::vector<CuspDivisor> out;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    out.push_back(divisor(EtaQuotient::from_exponent_vector(N, basis.row(i))));
  return out;
}

ClassGroupResult class_group_of_level(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("class_group_of_level: N must be >= 2");
  ClassGroupResult res;
  res.N = N;
  res.generator_divisors = eta_unit_divisor_lattice(N);
  const std::size_t rank = divisors(N).size() - 1;
  res.group = quotient_structure(IntMatrix::identity(rank), coordinate_matrix(res.generator_divisors));
  res.order = res.group.order();

  const auto f = factorize(N);
  if (f.size() == 1) {
    res.certified = f.begin()->first >= 5;
  } else if (f.size() == 2) {
    auto it = f.begin();
    const auto [p, ep] = *it++;
    const auto [q, eq] = *it;
    res.certified = ep == 1 && eq == 1 && p % 12 == 1 && q % 12 == 1;
  }
  return res;
}

}  // namespace modunits
