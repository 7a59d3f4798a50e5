#include "modunits/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "modunits/closed_forms.hpp"
#include "modunits/cusp_class_group.hpp"
#include "modunits/eta_quotient.hpp"
#include "modunits/eta_transform.hpp"
#include "modunits/gen_jacobian.hpp"
#include "modunits/numtheory.hpp"

namespace modunits::verify {

namespace {

// Collects failures, keeping only the first few messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 6) failures_text_ += (failures_text_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) + " checks passed";
    if (failures_ > 0) s += "; failures: " + failures_text_ + (failures_ > 6 ? "; ..." : "");
    return s;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string failures_text_;
};

CriterionResult timed(int id, std::string name, const std::function<void(Tally&)>& body, double budget_seconds = 0) {
  CriterionResult res;
  res.id = id;
  res.name = std::move(name);
  Tally tally;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.check(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0) {
    std::ostringstream os;
    os.precision(3);
    os << "runtime " << res.seconds << " s (budget " << budget_seconds << " s)";
    tally.check(res.seconds < budget_seconds, os.str());
  }
  res.passed = tally.ok();
  res.detail = tally.summary();
  return res;
}

std::string pn(std::int64_t p, int n) { return "p=" + std::to_string(p) + ",n=" + std::to_string(n); }

bool close(std::complex<double> got, std::complex<double> want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace

CriterionResult class_group_structure() {
  return timed(1, "class-group structure", [](Tally& t) {
    for (std::int64_t p : {5, 7, 11, 13, 17, 19})
      for (int n = 1; n <= 5; ++n) {
        const auto got = class_group(p, n).group, want = ling_structure(p, n);
        t.check(got == want, pn(p, n) + ": " + got.to_string() + " vs " + want.to_string());
      }
  }, 5.0);
}

CriterionResult mazur_order() {
  return timed(2, "Mazur order", [](Tally& t) {
    for (auto p : primes_below(200)) {
      if (p < 5) continue;
      const auto g = class_group(p, 1).group;
      const Integer want = (p - 1) / std::gcd(p - 1, std::int64_t{12});
      t.check(g == AbelianGroup::cyclic(want), "p=" + std::to_string(p) + ": " + g.to_string());
    }
  });
}

CriterionResult determinant_claims() {
  return timed(3, "determinant claims", [](Tally& t) {
    for (std::int64_t p : {5, 7, 13})
      for (int n = 1; n <= 6; ++n) {
        const OrderMatrices om = order_matrices(p, n);
        const Integer dV = om.V.determinant();
        t.check(dV == closed::det_V(p, n),
                "det V " + pn(p, n) + ": " + dV.get_str() + " vs claimed " + closed::det_V(p, n).get_str());
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 24, static_cast<unsigned long>(n));
        const Integer dM = om.M24.determinant();
        t.check(dM == scale * closed::det_M_times_24(p, n), "24 det M " + pn(p, n));
        t.check(om.U.determinant() == closed::det_U(p, n), "det U " + pn(p, n));
        const IntMatrix vmu = om.VMU24();
        Integer sum = 0;
        for (std::size_t j = 0; j < vmu.cols(); ++j) sum += vmu(vmu.rows() - 1, j);
        t.check(Rational(sum) == 24 * closed::vmu_last_row_sum(p, n), "VMU last row " + pn(p, n));
      }
  });
}

CriterionResult leading_coefficient_tables() {
  return timed(4, "leading-coefficient tables", [](Tally& t) {
    for (std::int64_t p : {5, 13})
      for (int n = 2; n <= 3; ++n) {
        const auto gens = prime_power_generators(p, n);
        for (std::size_t g = 0; g < gens.size(); ++g)
          for (int m = 0; m <= n; ++m) {
            const std::string cell = pn(p, n) + ",gen=" + std::to_string(g) + ",m=" + std::to_string(m);
            const SigmaMatrix s = sigma_matrix(p, n, m);
            const LeadingTerm lt = leading_term(gens[g], s);
            const LeadingCoeff table = closed::leading_coefficient_table(p, n, static_cast<int>(g), m);
            t.check(lt.coeff == table, cell + ": computed " + lt.coeff.to_string() + " vs table " + table.to_string());
            const NumericValue num = numeric_leading_coefficient(gens[g], s, lt.order, 8.0, 200);
            t.check(close(num.value, lt.coeff.to_complex(), 1e-8), cell + ": numeric oracle");
          }
      }
  });
}

CriterionResult delta_matrix_and_cokernel() {
  return timed(5, "Delta matrix and cokernel", [](Tally& t) {
    for (std::int64_t p : {5, 7, 11, 13})
      for (int n = 1; n <= 5; ++n) {
        const IntMatrix D = delta_matrix(p, n);
        t.check(D == closed::delta_matrix(p, n), pn(p, n) + ": " + D.to_string());
        const Integer a_prime = 12 / std::gcd(p - 1, std::int64_t{12});
        const auto cok = delta_cokernel(p, n);
        t.check(cok == AbelianGroup::cyclic(a_prime), pn(p, n) + ": cokernel " + cok.to_string());
      }
  });
}

CriterionResult injectivity() {
  return timed(6, "injectivity on the cuspidal group", [](Tally& t) {
    for (std::int64_t p : {5, 7, 11, 13})
      for (int n = 1; n <= 5; ++n) {
        const auto an = analyze_delta_kernel(p, n);
        t.check(an.kernel_psi.is_trivial(), pn(p, n) + ": psi kernel " + an.kernel_psi.to_string());
        t.check(an.generic.kernel.is_trivial(), pn(p, n) + ": snake kernel " + an.generic.kernel.to_string());
      }
  });
}

CriterionResult generalized_torsion() {
  return timed(7, "generalized Jacobian torsion", [](Tally& t) {
    for (std::int64_t p : {5, 7, 11, 13, 17, 19})
      for (int n = 1; n <= 5; ++n) {
        const TorsionResult r = modunits::generalized_torsion(p, n);
        if (n == 1) {
          t.check(r.group == AbelianGroup::cyclic(2) && !r.conditional, pn(p, n) + ": " + r.statement);
        } else {
          const auto want = closed::generalized_torsion(p, n);
          t.check(r.group == want && r.conditional, pn(p, n) + ": " + r.group.to_string() + " vs " + want.to_string());
        }
      }
  });
}

CriterionResult pq_case() {
  return timed(8, "level pq", [](Tally& t) {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{13, 37}, {13, 61}, {37, 61}}) {
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const PqKernelAnalysis an = analyze_pq_kernel(p, q);
      t.check(an.class_group.order() == closed::class_number_pq(p, q), tag + ": |C| = " + an.class_group.order().get_str());
      t.check(an.snake.kernel == AbelianGroup::cyclic(an.c), tag + ": kernel " + an.snake.kernel.to_string());
      t.check(an.generated_by_d1_d2_d3, tag + ": kernel not generated by D1-D2-D3");

      const auto table = pq_leading_coefficients(p, q);
      const auto want = closed::pq_magnitude_table(p, q);
      const auto gens = pq_generators(p, q);
      const std::int64_t levels[] = {1, p, q, p * q};
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
          const std::string cell = tag + ": f" + std::to_string(r + 1) + " at P" + std::to_string(c);
          const LeadingCoeff& lc = table[r][c];
          const bool sign_only = lc.phase().is_zero() || lc.phase() == QmodZ(1, 2);
          t.check(lc.same_magnitude(want[r][c]) && sign_only, cell + ": " + lc.to_string());
          const SigmaMatrix s = pq_sigma_matrix(p, q, levels[c]);
          const LeadingTerm lt = leading_term(gens[r], s);
          const NumericValue num = numeric_leading_coefficient(gens[r], s, lt.order, 8.0, 200);
          t.check(close(num.value, lt.coeff.to_complex(), 1e-8), cell + ": numeric oracle");
        }
    }
  }, 10.0);
}

CriterionResult property_suites() {
  return timed(9, "property suites", [](Tally& t) {
    std::mt19937_64 rng(20240607);
    auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

    // Smith normal form
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(uniform(1, 8)), cols = static_cast<std::size_t>(uniform(1, 8));
      IntMatrix A(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A(i, j) = uniform(-1000000, 1000000);
      const SmithDecomposition s = smith_normal_form(A);
      bool ok = s.P * A * s.Q == s.D && s.D.is_diagonal() && abs(s.P.determinant()) == 1 &&
                abs(s.Q.determinant()) == 1;
      const auto diag = s.diagonal();
      for (std::size_t i = 0; i < diag.size() && ok; ++i) {
        ok = diag[i] >= 0;
        if (ok && i + 1 < diag.size() && diag[i] != 0) ok = diag[i + 1] % diag[i] == 0;
        if (ok && i + 1 < diag.size() && diag[i] == 0) ok = diag[i + 1] == 0;
      }
      if (ok && rows == cols) {
        Integer prod = 1;
        for (const auto& d : diag) prod *= d;
        ok = prod == abs(A.determinant());
      }
      t.check(ok, "SNF trial " + std::to_string(trial));
    }

    // degree zero of Ligozat-valid divisors
    for (int trial = 0; trial < 100; ++trial) {
      const std::int64_t N = uniform(2, 100);
      const IntMatrix basis = ligozat_exponent_lattice(N);
      std::vector<Integer> r(basis.cols(), Integer(0));
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        const long c = uniform(-3, 3);
        for (std::size_t j = 0; j < basis.cols(); ++j) r[j] += c * basis(i, j);
      }
      const EtaQuotient h = EtaQuotient::from_exponent_vector(N, r);
      const CuspDivisor E = divisor(h);
      t.check(check_modular_function(h).valid() && E.degree() == 0 && E.is_integral(),
              "N=" + std::to_string(N) + ": " + h.to_string());
    }

    // closed-form orders vs the general a_N formula
    for (std::int64_t p : {5, 7, 11, 13})
      for (int n = 1; n <= 6; ++n) {
        const std::int64_t N = ipow(p, static_cast<unsigned>(n));
        for (int k = 0; k <= n; ++k)
          for (int m = 0; m <= n; ++m) {
            const Rational general =
                eta_order_coefficient(N, ipow(p, static_cast<unsigned>(m)), ipow(p, static_cast<unsigned>(k))) / 24;
            t.check(general == closed::eta_order_prime_power(p, n, k, m),
                    pn(p, n) + ",k=" + std::to_string(k) + ",m=" + std::to_string(m));
          }
      }

    // eta transformation law
    std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.5, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
      long c = 0, d = 0;
      do {
        c = uniform(1, 8);
        d = uniform(-9, 9);
      } while (std::gcd(c, d) != 1);
      Integer a, b, g, x, y;
      const Integer C = c, D = d;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), D.get_mpz_t(), C.get_mpz_t());
      a = x, b = -y;  // a d - b c = x d + y c = 1
      const std::complex<double> tau(re(rng), im(rng));
      const std::complex<double> gtau = (a.get_d() * tau + b.get_d()) / (C.get_d() * tau + D.get_d());
      const std::complex<double> lhs = eta_numeric(gtau, 1000000);
      const UnitPhase eps = eta_multiplier(a, b, C, D);
      const std::complex<double> rhs = std::polar(1.0, 2 * std::numbers::pi * eps.value().get_d()) *
                                       std::sqrt((C.get_d() * tau + D.get_d()) / std::complex<double>(0, 1)) *
                                       eta_numeric(tau, 1000000);
      t.check(close(lhs, rhs, 1e-10), "eta law trial " + std::to_string(trial));
    }
  });
}

std::vector<std::string> suite_names() {
  return {"acceptance", "class-group", "mazur",  "determinants", "leading-coeffs",
          "delta",      "injectivity", "torsion", "pq",           "properties"};
}

std::vector<CriterionResult> run_suite(const std::string& name) {
  using Fn = CriterionResult (*)();
  const std::vector<std::pair<std::string, Fn>> all = {
      {"class-group", class_group_structure}, {"mazur", mazur_order},
      {"determinants", determinant_claims},   {"leading-coeffs", leading_coefficient_tables},
      {"delta", delta_matrix_and_cokernel},   {"injectivity", injectivity},
      {"torsion", generalized_torsion},       {"pq", pq_case},
      {"properties", property_suites},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (name == "acceptance" || name == all[i].first || name == std::to_string(i + 1)) out.push_back(all[i].second());
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace modunits::verify
