#include "modunits/modular_curve.hpp"

#include <numeric>
#include <stdexcept>

#include "modunits/numtheory.hpp"

namespace modunits {

Cusp cusp_of_level(std::int64_t N, std::int64_t d) {
  if (N < 1 || d < 1 || N % d != 0)
    throw std::invalid_argument("no cusp of level " + std::to_string(d) + " on X_0(" + std::to_string(N) + ")");
  Cusp c;
  c.level_N = N;
  c.d = d;
  c.residue_conductor = std::gcd(d, N / d);
  c.degree = euler_phi(c.residue_conductor);
  // gcd(d^2, N) = d * gcd(d, N/d), which avoids forming d^2.
  c.width = N / (d * c.residue_conductor);
  return c;
}

std::vector<Cusp> cusps(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("cusps: N must be >= 1");
  std::vector<Cusp> out;
  for (auto d : divisors(N)) out.push_back(cusp_of_level(N, d));
  return out;
}

CuspDivisor::CuspDivisor(std::int64_t N) : N_(N) {
  if (N < 1) throw std::invalid_argument("CuspDivisor: level must be >= 1");
}

CuspDivisor::CuspDivisor(std::int64_t N, const std::map<std::int64_t, Rational>& coefficients)
    : CuspDivisor(N) {
  for (const auto& [d, c] : coefficients) set_coefficient(d, c);
}

void CuspDivisor::check_level(std::int64_t d) const {
  if (d < 1 || N_ % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a cusp level of X_0(" + std::to_string(N_) + ")");
}

Rational CuspDivisor::coefficient(std::int64_t d) const {
  check_level(d);
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void CuspDivisor::set_coefficient(std::int64_t d, const Rational& value) {
  check_level(d);
  if (value == 0)
    coeffs_.erase(d);
  else
    coeffs_[d] = value;
}

Rational CuspDivisor::degree() const {
  Rational deg = 0;
  for (const auto& [d, c] : coeffs_) deg += c * Rational(euler_phi(std::gcd(d, N_ / d)));
  return deg;
}

bool CuspDivisor::is_integral() const {
  for (const auto& [d, c] : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool CuspDivisor::in_cuspidal_group() const { return is_integral() && degree() == 0; }

CuspDivisor CuspDivisor::operator+(const CuspDivisor& other) const {
  if (other.N_ != N_) throw std::invalid_argument("CuspDivisor: level mismatch");
  CuspDivisor out = *this;
  for (const auto& [d, c] : other.coeffs_) out.set_coefficient(d, out.coefficient(d) + c);
  return out;
}

CuspDivisor CuspDivisor::operator-(const CuspDivisor& other) const { return *this + other * Rational(-1); }

CuspDivisor CuspDivisor::operator*(const Rational& k) const {
  CuspDivisor out(N_);
  for (const auto& [d, c] : coeffs_) out.set_coefficient(d, c * k);
  return out;
}

std::string CuspDivisor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    Rational mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += modunits::to_string(mag) + "*";
    s += "Q(" + std::to_string(d) + ")";
    first = false;
  }
  return s;
}

std::vector<Integer> cuspidal_coordinates(const CuspDivisor& E) {
  if (!E.in_cuspidal_group())
    throw std::invalid_argument("divisor " + E.to_string() + " is not an integral degree-0 cuspidal divisor");
  std::vector<Integer> out;
  for (auto d : divisors(E.level())) {
    if (d == E.level()) continue;
    out.push_back(E.coefficient(d).get_num());
  }
  return out;
}

CuspDivisor from_cuspidal_coordinates(std::int64_t N, const std::vector<Integer>& coords) {
  const auto divs = divisors(N);
  if (coords.size() + 1 != divs.size()) throw std::invalid_argument("from_cuspidal_coordinates: wrong length");
  CuspDivisor E(N);
  Integer top = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    E.set_coefficient(divs[i], Rational(coords[i]));
    top -= coords[i] * euler_phi(std::gcd(divs[i], N / divs[i]));
  }
  E.set_coefficient(N, Rational(top));
  return E;
}

std::vector<CuspDivisor> divisor_basis(std::int64_t p, int n) {
  if (!is_prime(p) || n < 1) throw std::invalid_argument("divisor_basis: need p prime and n >= 1");
  const std::int64_t N = ipow(p, static_cast<unsigned>(n));
  std::vector<CuspDivisor> out;
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = ipow(p, static_cast<unsigned>(i));
    CuspDivisor D(N);
    D.set_coefficient(d, 1);
    D.set_coefficient(N, -euler_phi(std::gcd(d, N / d)));
    out.push_back(D);
  }
  return out;
}

std::vector<Integer> lambda_embedding(const CuspDivisor& E, std::int64_t p, int n) {
  const std::int64_t N = ipow(p, static_cast<unsigned>(n));
  if (E.level() != N) throw std::invalid_argument("lambda_embedding: divisor is not on X_0(p^n)");
  if (!E.in_cuspidal_group())
    throw std::invalid_argument("lambda_embedding: " + E.to_string() + " is not in D(p^n)");
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1, Integer(0));
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = ipow(p, static_cast<unsigned>(i));
    const Integer weighted = E.coefficient(d).get_num() * euler_phi(std::gcd(d, N / d));
    v[static_cast<std::size_t>(i) + 1] = weighted;
    v[0] -= weighted;
  }
  return v;
}

}  // namespace modunits
