#include "modunits/eta_transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "modunits/errors.hpp"
#include "modunits/numtheory.hpp"

namespace modunits {

// ---------------------------------------------------------------- LeadingCoeff

LeadingCoeff::LeadingCoeff(UnitPhase phase, std::map<std::int64_t, Integer> half_exponents)
    : phase_(std::move(phase)) {
  for (auto& [p, v] : half_exponents)
    if (v != 0) half_[p] = v;
}

LeadingCoeff LeadingCoeff::prime_power(std::int64_t p, const Integer& half_exponent) {
  return LeadingCoeff(UnitPhase(), {{p, half_exponent}});
}

LeadingCoeff LeadingCoeff::sqrt_p_star(std::int64_t p) {
  return LeadingCoeff(UnitPhase(p - 1, 8), {{p, Integer(1)}});
}

Integer LeadingCoeff::half_exponent(std::int64_t p) const {
  auto it = half_.find(p);
  return it == half_.end() ? Integer(0) : it->second;
}

LeadingCoeff LeadingCoeff::operator*(const LeadingCoeff& other) const {
  std::map<std::int64_t, Integer> h = half_;
  for (const auto& [p, v] : other.half_) h[p] += v;
  return LeadingCoeff(phase_ + other.phase_, std::move(h));
}

LeadingCoeff LeadingCoeff::inverse() const { return pow(-1); }

LeadingCoeff LeadingCoeff::pow(const Integer& k) const {
  std::map<std::int64_t, Integer> h;
  for (const auto& [p, v] : half_) h[p] = v * k;
  return LeadingCoeff(phase_ * k, std::move(h));
}

std::complex<double> LeadingCoeff::to_complex() const {
  double log_mag = 0;
  for (const auto& [p, v] : half_) log_mag += v.get_d() / 2.0 * std::log(static_cast<double>(p));
  return std::polar(std::exp(log_mag), 2 * std::numbers::pi * phase_.value().get_d());
}

std::string LeadingCoeff::to_string() const {
  std::string s;
  if (!phase_.is_zero()) s = "e(" + phase_.to_string() + ")";
  for (const auto& [p, v] : half_) {
    if (!s.empty()) s += "*";
    s += std::to_string(p) + "^(" + modunits::to_string(make_rational(v, 2)) + ")";
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- SigmaMatrix

std::optional<Rational> SigmaMatrix::image_of_infinity() const {
  if (c == 0) return std::nullopt;
  return make_rational(a, c);
}

std::string SigmaMatrix::to_string() const {
  return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() + "]]";
}

// ---------------------------------------------------------------- multipliers

int jacobi_symbol(const Integer& a, const Integer& b) {
  if (b <= 0 || mpz_even_p(b.get_mpz_t())) throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), b.get_mpz_t());
}

UnitPhase eta_multiplier(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  if (a * d - b * c != 1) throw std::invalid_argument("eta_multiplier: determinant must be 1");
  if (c < 0) throw std::invalid_argument("eta_multiplier: normalize to c >= 0 first");
  if (c == 0) return UnitPhase(make_rational(b * d, 24));
  if (mpz_odd_p(c.get_mpz_t())) {
    const int j = jacobi_symbol(d, c);
    return UnitPhase(make_rational(j == 1 ? 0 : 1, 2)) + UnitPhase(make_rational(1 - c, 8)) +
           UnitPhase(make_rational(b * d * (1 - c * c) + c * (a + d), 24));
  }
  if (mpz_even_p(d.get_mpz_t())) throw std::logic_error("eta_multiplier: c and d both even");
  const Integer abs_d = abs(d);
  const int j = jacobi_symbol(c, abs_d);
  return UnitPhase(make_rational(j == 1 ? 0 : 1, 2)) +
         UnitPhase(make_rational(a * c * (1 - d * d) + d * (b - c + 3), 24));
}

Rational dedekind_sum(const Integer& h, const Integer& k) {
  if (k <= 0) throw std::invalid_argument("dedekind_sum: k must be positive");
  Integer g;
  mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  if (g != 1) throw std::invalid_argument("dedekind_sum: h and k must be coprime");
  Integer hr;
  mpz_fdiv_r(hr.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  if (hr == 0) return 0;  // k = 1
  // s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 - 1/4
  Rational rec = (make_rational(hr, k) + make_rational(k, hr) + make_rational(1, hr * k)) / 12 - Rational(1, 4);
  rec.canonicalize();
  Rational out = rec - dedekind_sum(k, hr);
  out.canonicalize();
  return out;
}

UnitPhase eta_multiplier_dedekind(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  if (a * d - b * c != 1) throw std::invalid_argument("eta_multiplier_dedekind: determinant must be 1");
  if (c <= 0) throw std::invalid_argument("eta_multiplier_dedekind: needs c > 0");
  return UnitPhase(make_rational(a + d, 24 * c) - dedekind_sum(d, c) / 2);
}

// ---------------------------------------------------------------- sigma matrices

SigmaMatrix sigma_matrix(std::int64_t p, int n, int m) {
  if (m < 0 || m > n) throw ScopeError("cusp index m = " + std::to_string(m) + " outside 0.." + std::to_string(n));
  const Integer pm = ipow(p, static_cast<unsigned>(m));
  if (2 * m >= n) return {1, 0, pm, 1};
  const Integer pn = ipow(p, static_cast<unsigned>(n));
  const Integer pnm = ipow(p, static_cast<unsigned>(n - m));
  return {-pnm, -1, pn, 0};
}

SigmaMatrix pq_sigma_matrix(std::int64_t p, std::int64_t q, std::int64_t m) {
  const std::int64_t N = p * q;
  if (m != 1 && m != p && m != q && m != N)
    throw ScopeError("cusp level " + std::to_string(m) + " is not one of 1, p, q, pq");
  const Integer mp = N / m, mm = m;
  Integer g, d, b;
  mpz_gcdext(g.get_mpz_t(), d.get_mpz_t(), b.get_mpz_t(), mp.get_mpz_t(), mm.get_mpz_t());
  return {mp, -b, Integer(N), d * mp};
}

Integer sigma_width(const SigmaMatrix& s, std::int64_t N) {
  const Integer det = s.determinant();
  if (det <= 0) throw std::invalid_argument("sigma_width: determinant must be positive");
  const Rational entries[] = {make_rational(s.a * s.c, det), make_rational(s.a * s.a, det),
                              make_rational(s.c * s.c, det * N)};
  Integer w = 1;
  for (const auto& e : entries) mpz_lcm(w.get_mpz_t(), w.get_mpz_t(), e.get_den_mpz_t());
  return w;
}

// ---------------------------------------------------------------- leading terms

LeadingTerm leading_term(const EtaQuotient& h, const SigmaMatrix& sigma_in) {
  Integer weight = 0;
  for (const auto& [delta, r] : h.exponents()) weight += r;
  if (weight != 0) throw std::invalid_argument("leading_term: eta quotient must have weight 0");
  SigmaMatrix s = sigma_in;
  if (s.determinant() <= 0) throw std::invalid_argument("leading_term: sigma must have positive determinant");
  if (s.c < 0) s = {-s.a, -s.b, -s.c, -s.d};

  LeadingTerm out;
  out.order = 0;
  std::map<std::int64_t, Integer> half;
  UnitPhase phase;
  for (const auto& [delta, r] : h.exponents()) {
    // diag(delta, 1) * sigma = gamma * (A B; 0 E) with gamma in SL2(Z), c_gamma >= 0.
    const Integer x11 = s.a * delta, x12 = s.b * delta, x21 = s.c, x22 = s.d;
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x11.get_mpz_t(), x21.get_mpz_t());
    const Integer ga = x11 / g, gb = -v, gc = x21 / g, gd = u;
    const Integer A = g;
    const Integer B = u * x12 + v * x22;
    const Integer E = (x11 * x22 - x12 * x21) / g;
    // eta((A tau + B)/E) = e(B/(24E)) q^{A/(24E)} (1 + ...)
    phase += (eta_multiplier(ga, gb, gc, gd) + UnitPhase(make_rational(B, 24 * E))) * r;
    out.order += make_rational(r * A, 24 * E);
    if (s.c != 0) {
      if (!E.fits_slong_p()) throw std::overflow_error("leading_term: denominator too large to factor");
      for (const auto& [prime, e] : factorize(E.get_si())) half[prime] -= r * e;
    }
  }
  out.order.canonicalize();
  out.coeff = LeadingCoeff(phase, std::move(half));
  return out;
}

LeadingCoeff leading_coefficient(const EtaQuotient& h, std::int64_t p, int n, int m) {
  if (h.level() != ipow(p, static_cast<unsigned>(n)))
    throw std::invalid_argument("leading_coefficient: eta quotient is not of level p^n");
  return leading_term(h, sigma_matrix(p, n, m)).coeff;
}

std::vector<std::vector<LeadingCoeff>> pq_leading_coefficients(std::int64_t p, std::int64_t q) {
  const auto gens = pq_generators(p, q);
  const std::int64_t levels[] = {1, p, q, p * q};
  std::vector<std::vector<LeadingCoeff>> table;
  for (const auto& h : gens) {
    std::vector<LeadingCoeff> row;
    for (auto m : levels) row.push_back(leading_term(h, pq_sigma_matrix(p, q, m)).coeff);
    table.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------- numerics

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// log(eta(tau)) up to a multiple of 2 pi i.
std::complex<double> log_eta(std::complex<double> tau, int terms) {
  const std::complex<double> q = std::exp(std::complex<double>(0, kTwoPi) * tau);
  std::complex<double> sum = std::complex<double>(0, kTwoPi) * tau / 24.0;
  std::complex<double> qk = 1;
  for (int k = 1; k <= terms; ++k) {
    qk *= q;
    if (std::abs(qk) < 1e-300) break;
    sum += std::log(1.0 - qk);
  }
  return sum;
}

struct ReducedPoint {
  Rational x, y;            // reduced point
  Integer a, b, c, d;       // original = gamma * reduced
};

ReducedPoint reduce_to_fundamental_domain(Rational x, Rational y) {
  ReducedPoint r{0, 0, 1, 0, 0, 1};
  for (int guard = 0; guard < 100000; ++guard) {
    // translate so that |x| <= 1/2
    Rational shifted = x + Rational(1, 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    if (k != 0) {
      x -= k;
      r.b += r.a * k;  // gamma <- gamma T^k
      r.d += r.c * k;
    }
    const Rational norm = x * x + y * y;
    if (norm >= 1) {
      r.x = x, r.y = y;
      return r;
    }
    x = -x / norm;  // tau <- -1/tau, gamma <- gamma S^{-1}
    y = y / norm;
    x.canonicalize(), y.canonicalize();
    Integer na = -r.b, nb = r.a, nc = -r.d, nd = r.c;
    r.a = na, r.b = nb, r.c = nc, r.d = nd;
  }
  throw std::logic_error("reduce_to_fundamental_domain: no convergence");
}

}  // namespace

std::complex<double> eta_numeric(std::complex<double> tau, int terms) {
  if (tau.imag() <= 0) throw std::invalid_argument("eta_numeric: tau must lie in the upper half-plane");
  const std::complex<double> q = std::exp(std::complex<double>(0, kTwoPi) * tau);
  std::complex<double> prod = std::exp(std::complex<double>(0, kTwoPi) * tau / 24.0);
  std::complex<double> qk = 1;
  for (int k = 1; k <= terms; ++k) {
    qk *= q;
    if (std::abs(qk) < 1e-18) break;
    prod *= 1.0 - qk;
  }
  return prod;
}

NumericValue numeric_leading_coefficient(const EtaQuotient& h, const SigmaMatrix& sigma, const Rational& order,
                                         double Y, int terms) {
  if (Y < 4) throw std::invalid_argument("numeric_leading_coefficient: Y must be >= 4");
  if (terms < 50) throw std::invalid_argument("numeric_leading_coefficient: at least 50 terms");
  const Rational y0(Y);  // exact binary value of Y
  // sigma(iY) = x + i y, exactly
  const Rational denom = Rational(sigma.c * sigma.c) * y0 * y0 + Rational(sigma.d * sigma.d);
  const Rational sx = (Rational(sigma.a * sigma.c) * y0 * y0 + Rational(sigma.b * sigma.d)) / denom;
  const Rational sy = Rational(sigma.determinant()) * y0 / denom;

  std::complex<double> log_value(kTwoPi * order.get_d() * Y, 0);
  for (const auto& [delta, r] : h.exponents()) {
    ReducedPoint rp = reduce_to_fundamental_domain(sx * delta, sy * delta);
    if (rp.c < 0 || (rp.c == 0 && rp.d < 0)) rp = {rp.x, rp.y, -rp.a, -rp.b, -rp.c, -rp.d};
    const std::complex<double> tau_r(rp.x.get_d(), rp.y.get_d());
    std::complex<double> term = log_eta(tau_r, terms);
    const UnitPhase eps = eta_multiplier(rp.a, rp.b, rp.c, rp.d);
    term += std::complex<double>(0, kTwoPi * eps.value().get_d());
    if (rp.c != 0) {
      // (c tau_r + d)/i, with c tau_r + d formed exactly first
      const Rational re = Rational(rp.c) * rp.x + Rational(rp.d);
      const Rational im = Rational(rp.c) * rp.y;
      term += 0.5 * std::log(std::complex<double>(im.get_d(), -re.get_d()));
    }
    log_value += r.get_d() * term;
  }
  NumericValue out;
  out.value = std::exp(log_value);
  out.error_estimate = std::abs(out.value) * std::exp(-kTwoPi * Y);
  return out;
}

}  // namespace modunits
