#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace modunits {

// Small-integer helpers for levels, cusp data and divisors of N.
// Levels handled here stay far below 2^62, so std::int64_t is used throughout.

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending
std::map<std::int64_t, int> factorize(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_below(std::int64_t bound);

// Throws std::overflow_error if the result does not fit.
std::int64_t ipow(std::int64_t base, unsigned exponent);

// Index of Gamma_0(N) in SL_2(Z): N * prod_{l | N} (1 + 1/l).
std::int64_t gamma0_index(std::int64_t N);

struct PrimePower {
  std::int64_t p;
  int n;
};
// Returns {p, n} when N = p^n with n >= 1, otherwise throws std::invalid_argument.
PrimePower as_prime_power(std::int64_t N);

}  // namespace modunits
