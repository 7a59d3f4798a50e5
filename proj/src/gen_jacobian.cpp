#include "modunits/gen_jacobian.hpp"

#include <numeric>
#include <stdexcept>

#include "modunits/cusp_class_group.hpp"
#include "modunits/errors.hpp"
#include "modunits/numtheory.hpp"

namespace modunits {

namespace {

void require_prime_at_least_5(std::int64_t p) {
  if (!is_prime(p) || p < 5)
    throw ScopeError("the generalized Jacobian results need a prime p >= 5 (got p = " + std::to_string(p) + ")");
}

Integer a_prime_of(std::int64_t p) { return 12 / std::gcd(p - 1, std::int64_t{12}); }

Integer half_of(const Integer& v, const char* where) {
  if (mpz_odd_p(v.get_mpz_t())) throw std::logic_error(std::string(where) + ": odd prime power at a rational cusp");
  return v / 2;
}

}  // namespace

Integer reduce_to_lambda(const LeadingCoeff& value, std::int64_t p, int i) {
  for (const auto& [prime, v] : value.half_exponents())
    if (prime != p) throw std::logic_error("reduce_to_lambda: prime " + std::to_string(prime) + " is not in Lambda");
  const Integer v = value.half_exponent(p);
  return i == 0 ? half_of(v, "reduce_to_lambda") : v;
}

IntMatrix delta_matrix(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  const auto gens = prime_power_generators(p, n);
  IntMatrix D(gens.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const LeadingCoeff base = leading_coefficient(gens[r], p, n, n);
    for (int i = 0; i < n; ++i)
      D(r, static_cast<std::size_t>(i)) = reduce_to_lambda(leading_coefficient(gens[r], p, n, i) / base, p, i);
  }
  return D;
}

AbelianGroup delta_cokernel(std::int64_t p, int n) {
  return quotient_structure(IntMatrix::identity(static_cast<std::size_t>(n)), delta_matrix(p, n));
}

SnakeResult snake_kernel(const IntMatrix& B, const IntMatrix& Delta) {
  const std::size_t k = B.rows(), r = Delta.cols();
  if (B.cols() != k || Delta.rows() != k) throw std::invalid_argument("snake_kernel: shape mismatch");
  const RationalMatrix W = RationalMatrix(B).inverse() * RationalMatrix(Delta);
  const Integer den = W.common_denominator();
  const IntMatrix Wi = W.scaled_to_integer(den);

  // x Wi + den y = 0  <=>  x W integral
  IntMatrix A(k + r, r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) A(i, j) = Wi(i, j);
  for (std::size_t j = 0; j < r; ++j) A(k + j, j) = den;
  const IntMatrix ker = integer_left_kernel(A);
  IntMatrix proj(ker.rows(), k);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) proj(i, j) = ker(i, j);

  SnakeResult out;
  out.preimage_lattice = hermite_row_basis(proj);
  out.kernel = quotient_structure(out.preimage_lattice, B);
  out.image = quotient_structure(IntMatrix::identity(k), out.preimage_lattice);
  return out;
}

DeltaKernelAnalysis analyze_delta_kernel(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  DeltaKernelAnalysis out;
  out.a_prime = a_prime_of(p);
  const ClassGroupResult cg = class_group(p, n);
  out.class_group = cg.group;
  const IntMatrix B = coordinate_matrix(cg.generator_divisors);
  const IntMatrix Delta = delta_matrix(p, n);

  // b * e_0 = x Delta^{-1}... in D coordinates: x = b e_0 Delta^{-1} B
  const RationalMatrix row0 = RationalMatrix(Delta).inverse() * RationalMatrix(B);
  out.smallest_b = out.a_prime;
  for (auto b : divisors(out.a_prime.get_si())) {
    bool integral = true;
    for (std::size_t j = 0; j < row0.cols() && integral; ++j) {
      Rational v = row0(0, j) * b;
      v.canonicalize();
      integral = v.get_den() == 1;
    }
    if (integral) {
      out.smallest_b = b;
      break;
    }
  }
  out.kernel_psi = AbelianGroup::cyclic(out.a_prime / out.smallest_b);
  out.generic = snake_kernel(B, Delta);
  return out;
}

AbelianGroup delta_kernel_on_cuspidal(std::int64_t p, int n) { return analyze_delta_kernel(p, n).kernel_psi; }

AbelianGroup mu_contribution(std::int64_t p, int n) {
  if (!is_prime(p) || p == 2) throw ScopeError("mu_contribution needs an odd prime p");
  if (n < 1) throw std::invalid_argument("mu_contribution: n must be >= 1");
  std::vector<Integer> orders;
  for (int i = 0; i < n; ++i) orders.push_back(2 * Integer(ipow(p, static_cast<unsigned>(std::min(i, n - i)))));
  return AbelianGroup::from_cyclic_orders(orders);
}

TorsionResult generalized_torsion(std::int64_t p, int n) {
  require_prime_at_least_5(p);
  TorsionResult res;
  res.kernel = delta_kernel_on_cuspidal(p, n);
  res.mu_part = mu_contribution(p, n);
  res.conditional = n >= 2;
  if (res.kernel.is_trivial()) {
    res.group = res.mu_part;
  } else {
    res.group = AbelianGroup::direct_sum(res.mu_part, res.kernel);
    res.extension_resolved = false;
  }
  res.order = res.mu_part.order() * res.kernel.order();
  res.statement = res.group.to_string() + (res.conditional ? " (conditional on J_0(N)(Q)_Tor = C(N))" : " (unconditional)");
  if (!res.extension_resolved) res.statement += "; extension not resolved, order only";
  return res;
}

std::vector<QmodZ> evaluate_delta_class(const CuspDivisor& E, const Integer& m, const EtaQuotient& h,
                                        const std::vector<LeadingCoeff>& coeffs, std::int64_t p, int n) {
  if (m <= 0) throw std::invalid_argument("evaluate_delta_class: m must be positive");
  if (coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("evaluate_delta_class: need one leading coefficient per cusp");
  if (!(divisor(h) == E * Rational(m)))
    throw std::invalid_argument("evaluate_delta_class: div(h) != m E");
  std::vector<QmodZ> out;
  for (int i = 0; i < n; ++i) {
    const Integer coord = reduce_to_lambda(coeffs[static_cast<std::size_t>(n)] / coeffs[static_cast<std::size_t>(i)], p, i);
    out.emplace_back(make_rational(coord, m));
  }
  return out;
}

// ---------------------------------------------------------------- level pq

std::vector<Integer> pq_coordinates(const CuspDivisor& E, std::int64_t p, std::int64_t q) {
  if (E.level() != p * q) throw std::invalid_argument("pq_coordinates: wrong level");
  std::vector<Integer> out;
  for (auto d : {std::int64_t{1}, p, q}) {
    const Rational c = E.coefficient(d);
    if (c.get_den() != 1) throw std::invalid_argument("pq_coordinates: non-integral divisor");
    out.push_back(c.get_num());
  }
  return out;
}

IntMatrix pq_delta_matrix(std::int64_t p, std::int64_t q) {
  const auto table = pq_leading_coefficients(p, q);
  IntMatrix D(3, 6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t i = 0; i < 3; ++i) {
      const LeadingCoeff ratio = table[r][i] / table[r][3];
      for (const auto& [prime, v] : ratio.half_exponents())
        if (prime != p && prime != q) throw std::logic_error("pq_delta_matrix: unexpected prime");
      D(r, 2 * i) = half_of(ratio.half_exponent(p), "pq_delta_matrix");
      D(r, 2 * i + 1) = half_of(ratio.half_exponent(q), "pq_delta_matrix");
    }
  }
  return D;
}

PqKernelAnalysis analyze_pq_kernel(std::int64_t p, std::int64_t q) {
  const ClassGroupResult cg = class_group_pq(p, q);
  PqKernelAnalysis out;
  out.class_group = cg.group;
  out.c = Integer((p - 1) * (q - 1)) / 24;
  std::vector<std::vector<Integer>> rows;
  for (const auto& E : cg.generator_divisors) rows.push_back(pq_coordinates(E, p, q));
  const IntMatrix B = IntMatrix::from_rows(rows, 3);
  out.snake = snake_kernel(B, pq_delta_matrix(p, q));

  // D_1 - D_2 - D_3: in the kernel, and of order c modulo the principal lattice.
  const std::vector<Integer> x = {1, -1, -1};
  const bool in_kernel = express_in_basis(out.snake.preimage_lattice, x).has_value();
  Integer order = 0;
  for (Integer k = 1; k <= out.snake.kernel.order(); ++k) {
    std::vector<Integer> kx = {k, -k, -k};
    if (express_in_basis(B, kx)) {
      order = k;
      break;
    }
  }
  out.generated_by_d1_d2_d3 = in_kernel && out.snake.kernel.is_cyclic() && order == out.snake.kernel.order();
  return out;
}

TorsionResult pq_delta_kernel(std::int64_t p, std::int64_t q) {
  const PqKernelAnalysis an = analyze_pq_kernel(p, q);
  TorsionResult res;
  res.kernel = an.snake.kernel;
  res.mu_part = AbelianGroup::from_cyclic_orders({2, 2, 2});
  res.order = res.kernel.order() * res.mu_part.order();
  res.group = AbelianGroup::cyclic(res.order);
  res.conditional = true;
  res.extension_resolved = false;
  res.up_to_2_torsion = true;
  res.statement = "order " + res.order.get_str() + "; cyclic of order " + res.order.get_str() +
                  " up to 2-torsion (extension of the kernel by (Z/2)^3 not resolved)";
  return res;
}

SplitInjectionReport split_injection_scope(std::int64_t p, int m) {
  if (!is_prime(p) || p < 3) throw ScopeError("split_injection_scope needs an odd prime p");
  if (m < 1) throw std::invalid_argument("split_injection_scope: m must be >= 1");
  SplitInjectionReport rep;
  rep.p = p;
  rep.m = m;
  rep.p_star = (p % 4 == 1) ? Integer(p) : Integer(-p);
  const std::string field = "Q(zeta_" + std::to_string(p) + (m > 1 ? "^" + std::to_string(m) : "") + ")";
  rep.kernel_note = "ker[Q^x (x) Q/Z -> " + field + "^x (x) Q/Z] = {0, " + rep.p_star.get_str() + " (x) 1/2}";
  rep.notes = {
      "classes are reduced to Lambda only along x -> p (x) x (rational cusp) and x -> sqrt(p*) (x) x",
      "the reduction discards root-of-unity factors of leading coefficients and nothing else",
      "conclusions about 2-torsion depend on the choice of sqrt(p*) and of the uniformizers",
  };
  return rep;
}

}  // namespace modunits
