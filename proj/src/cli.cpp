#include "modunits/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "modunits/cusp_class_group.hpp"
#include "modunits/errors.hpp"
#include "modunits/eta_quotient.hpp"
#include "modunits/gen_jacobian.hpp"
#include "modunits/report.hpp"
#include "modunits/verify.hpp"

namespace modunits::cli {

namespace {

using report::Json;

struct Options {
  bool json = false;
  bool timing = false;
  std::int64_t N = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int n = 0;
  std::string expr;
  std::vector<std::int64_t> pq;
  double Y = 8.0;
  int terms = 200;
  std::string suite = "acceptance";
};

void require_pn(const CLI::App* cmd) {
  if (cmd->count("--p") == 0 || cmd->count("--n") == 0)
    throw std::invalid_argument(cmd->get_name() + " needs --p P --n K");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuspidal class groups and generalized Jacobian torsion of X_0(N)", "modunits"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON output");
  app.add_flag("--timing", o.timing, "include wall-clock timings (output is then not reproducible)");

  auto* cusps = app.add_subcommand("cusps", "cusps of X_0(N)");
  cusps->add_option("N", o.N, "level")->required()->check(CLI::PositiveNumber);

  auto* eta_check = app.add_subcommand("eta-check", "test the four conditions for an eta quotient");
  eta_check->add_option("expr", o.expr, "e.g. \"eta(1)^-6 * eta(5)^6\"")->required();
  eta_check->add_option("--level", o.N, "level N")->required()->check(CLI::PositiveNumber);

  auto* divisor = app.add_subcommand("divisor", "divisor of a modular eta quotient");
  divisor->add_option("expr", o.expr, "eta quotient")->required();
  divisor->add_option("--level", o.N, "level N")->required()->check(CLI::PositiveNumber);

  auto* class_group = app.add_subcommand("class-group", "cuspidal divisor class group");
  class_group->add_option("--p", o.p, "prime p");
  class_group->add_option("--n", o.n, "exponent n");
  class_group->add_option("--N", o.N, "arbitrary level N >= 2");

  auto* matrices = app.add_subcommand("matrices", "order matrices M, U, V and the determinant claims");
  auto* leading = app.add_subcommand("leading-coeffs", "leading coefficients of f, g_k at every cusp");
  auto* delta = app.add_subcommand("delta", "Delta matrix, cokernel and kernel on C(p^n)");
  for (auto* cmd : {matrices, leading, delta}) {
    cmd->add_option("--p", o.p, "prime p >= 5")->required();
    cmd->add_option("--n", o.n, "exponent n >= 1")->required();
  }
  leading->add_option("--Y", o.Y, "height of the numeric evaluation point iY")->capture_default_str();
  leading->add_option("--terms", o.terms, "q-product terms for the numeric oracle")->capture_default_str();

  auto* torsion = app.add_subcommand("torsion", "torsion of the generalized Jacobian");
  torsion->add_option("--p", o.p, "prime p >= 5");
  torsion->add_option("--n", o.n, "exponent n >= 1");
  torsion->add_option("--pq", o.pq, "two primes P Q == 1 mod 12")->expected(2);

  auto* pq = app.add_subcommand("pq", "level pq: class group, leading coefficients, kernel");
  pq->add_option("--p", o.p, "prime p == 1 mod 12")->required();
  pq->add_option("--q", o.q, "prime q == 1 mod 12")->required();
  pq->add_option("--Y", o.Y, "height of the numeric evaluation point iY")->capture_default_str();
  pq->add_option("--terms", o.terms, "q-product terms for the numeric oracle")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  verify->add_option("--suite", o.suite, "acceptance, a criterion number, or one of its names")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  int exit_code = 0;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    Json rep;
    if (cusps->parsed()) {
      rep = report::cusps(o.N);
    } else if (eta_check->parsed()) {
      rep = report::eta_check(EtaQuotient::parse(o.expr, o.N));
    } else if (divisor->parsed()) {
      rep = report::divisor_report(EtaQuotient::parse(o.expr, o.N));
    } else if (class_group->parsed()) {
      const bool by_level = class_group->count("--N") > 0;
      if (by_level == (class_group->count("--p") > 0 || class_group->count("--n") > 0))
        throw std::invalid_argument("class-group needs either --p P --n K or --N N");
      if (by_level) {
        rep = report::class_group(class_group_of_level(o.N), std::nullopt);
      } else {
        require_pn(class_group);
        rep = report::class_group(modunits::class_group(o.p, o.n), ling_structure(o.p, o.n));
      }
      rep["inputs"] = by_level ? Json{{"N", o.N}} : Json{{"p", o.p}, {"n", o.n}};
    } else if (matrices->parsed()) {
      rep = report::matrices(o.p, o.n);
    } else if (leading->parsed()) {
      rep = report::leading_coefficients(o.p, o.n, o.Y, o.terms);
    } else if (delta->parsed()) {
      rep = report::delta(o.p, o.n);
    } else if (torsion->parsed()) {
      const bool has_pq = torsion->count("--pq") > 0;
      if (has_pq == (torsion->count("--p") > 0 || torsion->count("--n") > 0))
        throw std::invalid_argument("torsion needs either --p P --n K or --pq P Q");
      if (has_pq) {
        rep = report::torsion(pq_delta_kernel(o.pq[0], o.pq[1]));
        rep["inputs"] = Json{{"p", o.pq[0]}, {"q", o.pq[1]}};
      } else {
        require_pn(torsion);
        rep = report::torsion(generalized_torsion(o.p, o.n));
        rep["inputs"] = Json{{"p", o.p}, {"n", o.n}};
      }
    } else if (pq->parsed()) {
      rep = report::pq(o.p, o.q, o.Y, o.terms);
    } else if (verify->parsed()) {
      const auto results = verify::run_suite(o.suite);
      rep = report::verification(results, o.timing);
      rep["suite"] = o.suite;
      if (!std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; })) exit_code = 1;
    }
    if (o.timing)
      rep["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.json)
      out << rep.dump(2) << "\n";
    else
      out << report::to_text(rep);
  } catch (const ScopeError& e) {
    err << "scope error: " << e.what() << "\n";
    return 2;
  } catch (const LigozatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: input too large: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace modunits::cli
