#include "modunits/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace modunits {

std::map<std::int64_t, int> factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
  std::map<std::int64_t, int> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    result = result / p * (p - 1);
  }
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_below(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; k < bound; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && std::abs(result) > std::numeric_limits<std::int64_t>::max() / std::abs(base))
      throw std::overflow_error("ipow overflow");
    result *= base;
  }
  return result;
}

std::int64_t gamma0_index(std::int64_t N) {
  std::int64_t index = N;
  for (const auto& [p, e] : factorize(N)) {
    (void)e;
    index = index / p * (p + 1);
  }
  return index;
}

PrimePower as_prime_power(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("level " + std::to_string(N) + " is not a prime power");
  auto f = factorize(N);
  if (f.size() != 1) throw std::invalid_argument("level " + std::to_string(N) + " is not a prime power");
  return {f.begin()->first, f.begin()->second};
}

}  // namespace modunits
