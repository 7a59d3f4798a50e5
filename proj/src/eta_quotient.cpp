#include "modunits/eta_quotient.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "modunits/errors.hpp"
#include "modunits/numtheory.hpp"

namespace modunits {

EtaQuotient::EtaQuotient(std::int64_t N) : N_(N) {
  if (N < 1) throw std::invalid_argument("EtaQuotient: level must be >= 1");
}

EtaQuotient::EtaQuotient(std::int64_t N, const std::map<std::int64_t, Integer>& exponents)
    : EtaQuotient(N) {
  for (const auto& [delta, r] : exponents) set_exponent(delta, r);
}

void EtaQuotient::check_divisor(std::int64_t delta) const {
  if (delta < 1 || N_ % delta != 0)
    throw std::invalid_argument("eta(" + std::to_string(delta) + ") is not defined at level " + std::to_string(N_) +
                                " (delta must divide N)");
}

Integer EtaQuotient::exponent(std::int64_t delta) const {
  check_divisor(delta);
  auto it = exps_.find(delta);
  return it == exps_.end() ? Integer(0) : it->second;
}

void EtaQuotient::set_exponent(std::int64_t delta, const Integer& r) {
  check_divisor(delta);
  if (r == 0)
    exps_.erase(delta);
  else
    exps_[delta] = r;
}

std::vector<Integer> EtaQuotient::exponent_vector() const {
  std::vector<Integer> out;
  for (auto d : divisors(N_)) out.push_back(exponent(d));
  return out;
}

EtaQuotient EtaQuotient::from_exponent_vector(std::int64_t N, const std::vector<Integer>& r) {
  const auto divs = divisors(N);
  if (r.size() != divs.size()) throw std::invalid_argument("from_exponent_vector: wrong length");
  EtaQuotient h(N);
  for (std::size_t i = 0; i < r.size(); ++i) h.set_exponent(divs[i], r[i]);
  return h;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
  if (other.N_ != N_) throw std::invalid_argument("EtaQuotient: level mismatch in product");
  EtaQuotient out = *this;
  for (const auto& [delta, r] : other.exps_) out.set_exponent(delta, out.exponent(delta) + r);
  return out;
}

EtaQuotient EtaQuotient::pow(const Integer& k) const {
  EtaQuotient out(N_);
  for (const auto& [delta, r] : exps_) out.set_exponent(delta, r * k);
  return out;
}

std::string EtaQuotient::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [delta, r] : exps_) {
    if (!s.empty()) s += " * ";
    s += "eta(" + std::to_string(delta) + ")";
    if (r != 1) s += "^" + r.get_str();
  }
  return s;
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& context) {
  if (s.empty()) throw std::invalid_argument("malformed eta quotient '" + context + "': missing integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed eta quotient '" + context + "': bad integer '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("malformed eta quotient '" + context + "': bad integer '" + s + "'");
  return v;
}

}  // namespace

EtaQuotient EtaQuotient::parse(const std::string& text, std::int64_t N) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s),
               [](unsigned char c) { return !std::isspace(c); });
  EtaQuotient h(N);
  if (s == "1") return h;
  if (s.empty()) throw std::invalid_argument("malformed eta quotient: empty expression");
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('*', start);
    if (end == std::string::npos) end = s.size();
    const std::string factor = s.substr(start, end - start);
    if (factor.rfind("eta(", 0) != 0) throw std::invalid_argument("malformed eta quotient '" + text + "': expected eta(d)");
    const std::size_t close = factor.find(')');
    if (close == std::string::npos) throw std::invalid_argument("malformed eta quotient '" + text + "': missing ')'");
    const std::int64_t delta = parse_int(factor.substr(4, close - 4), text);
    std::string rest = factor.substr(close + 1);
    std::int64_t r = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw std::invalid_argument("malformed eta quotient '" + text + "': expected '^'");
      rest = rest.substr(1);
      if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') throw std::invalid_argument("malformed eta quotient '" + text + "': missing ')'");
        rest = rest.substr(1, rest.size() - 2);
      }
      r = parse_int(rest, text);
    }
    h.set_exponent(delta, h.exponent(delta) + r);
    start = end + 1;
  }
  return h;
}

// ---------------------------------------------------------------- Ligozat

std::string LigozatReport::describe() const {
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  return std::string("(1) sum r = ") + exponent_sum.get_str() + " [" + mark(weight_zero) + "]; " +
         "(2) prod delta^r square [" + mark(rational_square) + "]; " + "(3) sum r*delta = " + delta_sum.get_str() +
         " [" + mark(cusp_infinity) + "]; " + "(4) sum r*N/delta = " + codelta_sum.get_str() + " [" +
         mark(cusp_zero) + "]";
}

LigozatReport check_modular_function(const EtaQuotient& h) {
  LigozatReport rep;
  rep.exponent_sum = 0;
  rep.delta_sum = 0;
  rep.codelta_sum = 0;
  std::map<std::int64_t, Integer> prime_exponents;
  for (const auto& [delta, r] : h.exponents()) {
    rep.exponent_sum += r;
    rep.delta_sum += r * delta;
    rep.codelta_sum += r * (h.level() / delta);
    for (const auto& [l, e] : factorize(delta)) prime_exponents[l] += r * e;
  }
  rep.weight_zero = rep.exponent_sum == 0;
  rep.rational_square = std::all_of(prime_exponents.begin(), prime_exponents.end(),
                                    [](const auto& kv) { return kv.second % 2 == 0; });
  rep.cusp_infinity = rep.delta_sum % 24 == 0;
  rep.cusp_zero = rep.codelta_sum % 24 == 0;
  return rep;
}

Rational eta_order_coefficient(std::int64_t N, std::int64_t d, std::int64_t delta) {
  if (d < 1 || N % d != 0) throw std::invalid_argument("cusp level " + std::to_string(d) + " does not divide N");
  if (delta < 1 || N % delta != 0) throw std::invalid_argument("eta index " + std::to_string(delta) + " does not divide N");
  const std::int64_t g = std::gcd(d, delta);
  return make_rational(Integer(N / std::gcd(d, N / d)) * g * g, Integer(d) * delta);
}

Rational order_at_cusp(const EtaQuotient& h, std::int64_t d) {
  Rational total = 0;
  for (const auto& [delta, r] : h.exponents()) total += Rational(r) * eta_order_coefficient(h.level(), d, delta);
  total /= 24;
  total.canonicalize();
  return total;
}

CuspDivisor divisor(const EtaQuotient& h) {
  const auto report = check_modular_function(h);
  if (!report.valid())
    throw LigozatError(h.to_string() + " is not a modular function on X_0(" + std::to_string(h.level()) +
                           "): " + report.describe(),
                       report);
  CuspDivisor E(h.level());
  for (auto d : divisors(h.level())) {
    const Rational ord = order_at_cusp(h, d);
    if (ord.get_den() != 1)
      throw std::logic_error("order of " + h.to_string() + " at level " + std::to_string(d) + " is not integral");
    E.set_coefficient(d, ord);
  }
  if (E.degree() != 0) throw std::logic_error("divisor of " + h.to_string() + " has nonzero degree");
  return E;
}

std::vector<EtaQuotient> prime_power_generators(std::int64_t p, int n) {
  if (!is_prime(p) || p < 5)
    throw ScopeError("prime-power generators need a prime p >= 5 (got " + std::to_string(p) + ")");
  if (n < 1) throw std::invalid_argument("prime_power_generators: n must be >= 1");
  const std::int64_t N = ipow(p, static_cast<unsigned>(n));
  const long c = 24 / std::gcd(p - 1, std::int64_t{12});
  std::vector<EtaQuotient> out;
  out.push_back(EtaQuotient(N, {{1, Integer(-c)}, {p, Integer(c)}}));
  for (int k = 0; k + 2 <= n; ++k) {
    const std::int64_t lo = ipow(p, static_cast<unsigned>(k));
    out.push_back(EtaQuotient(N, {{lo, Integer(-1)}, {lo * p * p, Integer(1)}}));
  }
  return out;
}

std::vector<EtaQuotient> pq_generators(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q) || p == q || p % 12 != 1 || q % 12 != 1)
    throw ScopeError("level pq needs distinct primes p == q == 1 mod 12 (got " + std::to_string(p) + ", " +
                     std::to_string(q) + ")");
  const std::int64_t N = p * q;
  const Integer one(1), minus(-1);
  return {
      EtaQuotient(N, {{1, one}, {q, one}, {p, minus}, {N, minus}}),
      EtaQuotient(N, {{1, one}, {p, one}, {q, minus}, {N, minus}}),
      EtaQuotient(N, {{1, one}, {N, one}, {p, minus}, {q, minus}}),
  };
}

Integer gcd_of_divisor_coefficients(const EtaQuotient& h) {
  const CuspDivisor E = divisor(h);
  Integer g = 0;
  for (const auto& [d, c] : E.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

}  // namespace modunits
