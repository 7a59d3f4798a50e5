#include "modunits/report.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "modunits/closed_forms.hpp"
#include "modunits/numtheory.hpp"

namespace modunits::report {

namespace {

// Residuals are the only floating-point fields; 12 significant digits keeps
// them stable across platforms.
double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

Json sigma_json(const SigmaMatrix& s) {
  return Json::array({Json::array({integer(s.a), integer(s.b)}), Json::array({integer(s.c), integer(s.d)})});
}

Json claim(const std::string& name, const std::string& computed, const std::string& stated) {
  return Json{{"claim", name}, {"computed", computed}, {"stated", stated}, {"holds", computed == stated}};
}

std::string generator_name(std::size_t g) { return g == 0 ? "f" : "g_" + std::to_string(g - 1); }

}  // namespace

Json integer(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group(const AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer(d));
  return Json{{"structure", g.to_string()}, {"invariant_factors", factors}, {"order", g.order().get_str()}};
}

Json divisor(const CuspDivisor& E) {
  Json coeffs = Json::array();
  for (const auto& [d, c] : E.coefficients()) coeffs.push_back(Json{{"level", d}, {"coefficient", to_string(c)}});
  return Json{{"text", E.to_string()}, {"coefficients", coeffs}};
}

Json cusps(std::int64_t N) {
  Json list = Json::array();
  for (const auto& c : modunits::cusps(N))
    list.push_back(Json{{"level", c.d}, {"residue_conductor", c.residue_conductor}, {"degree", c.degree}, {"width", c.width}});
  return Json{{"command", "cusps"}, {"N", N}, {"count", list.size()}, {"cusps", list}};
}

Json eta_check(const EtaQuotient& h) {
  const LigozatReport r = check_modular_function(h);
  return Json{{"command", "eta-check"},
              {"level", h.level()},
              {"expression", h.to_string()},
              {"valid", r.valid()},
              {"conditions",
               {{"weight_zero", r.weight_zero},
                {"rational_square", r.rational_square},
                {"cusp_infinity", r.cusp_infinity},
                {"cusp_zero", r.cusp_zero}}},
              {"exponent_sum", r.exponent_sum.get_str()},
              {"delta_sum", r.delta_sum.get_str()},
              {"codelta_sum", r.codelta_sum.get_str()}};
}

Json divisor_report(const EtaQuotient& h) {
  const CuspDivisor E = modunits::divisor(h);
  Json orders = Json::array();
  for (auto d : divisors(h.level())) orders.push_back(Json{{"level", d}, {"order", to_string(E.coefficient(d))}});
  return Json{{"command", "divisor"},   {"level", h.level()}, {"expression", h.to_string()},
              {"divisor", E.to_string()}, {"orders", orders},  {"degree", to_string(E.degree())}};
}

Json class_group(const ClassGroupResult& r, const std::optional<AbelianGroup>& closed_form) {
  Json out{{"command", "class-group"}, {"N", r.N}};
  const Json g = group(r.group);
  for (const auto& [k, v] : g.items()) out[k] = v;
  out["certified"] = r.certified;
  if (closed_form) {
    out["closed_form"] = group(*closed_form);
    out["matches_closed_form"] = *closed_form == r.group;
  }
  Json gens = Json::array();
  for (const auto& E : r.generator_divisors) gens.push_back(E.to_string());
  out["principal_generators"] = gens;
  return out;
}

Json matrices(std::int64_t p, int n) {
  const OrderMatrices om = order_matrices(p, n);
  const IntMatrix vmu = om.VMU24();
  Integer row_sum = 0;
  for (std::size_t j = 0; j < vmu.cols(); ++j) row_sum += vmu(vmu.rows() - 1, j);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 24, static_cast<unsigned long>(n));
  Json claims = Json::array({
      claim("det V", om.V.determinant().get_str(), closed::det_V(p, n).get_str()),
      claim("24 det M", to_string(make_rational(om.M24.determinant(), scale)), closed::det_M_times_24(p, n).get_str()),
      claim("det U", om.U.determinant().get_str(), closed::det_U(p, n).get_str()),
      claim("VMU last row sum", to_string(make_rational(row_sum, 24)), to_string(closed::vmu_last_row_sum(p, n))),
  });
  return Json{{"command", "matrices"}, {"p", p},          {"n", n},
              {"M24", matrix(om.M24)}, {"U", matrix(om.U)}, {"V", matrix(om.V)},
              {"VMU24", matrix(vmu)},  {"claims", claims}};
}

Json leading_coefficients(std::int64_t p, int n, double Y, int terms) {
  const auto gens = prime_power_generators(p, n);
  Json rows = Json::array();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Json cells = Json::array();
    for (int m = 0; m <= n; ++m) {
      const SigmaMatrix s = sigma_matrix(p, n, m);
      const LeadingTerm lt = leading_term(gens[g], s);
      const LeadingCoeff table = closed::leading_coefficient_table(p, n, static_cast<int>(g), m);
      const NumericValue num = numeric_leading_coefficient(gens[g], s, lt.order, Y, terms);
      cells.push_back(Json{{"m", m},
                           {"sigma", sigma_json(s)},
                           {"order", to_string(lt.order)},
                           {"computed", lt.coeff.to_string()},
                           {"table", table.to_string()},
                           {"matches_table", table == lt.coeff},
                           {"numeric_residual", round12(std::abs(num.value - lt.coeff.to_complex()))},
                           {"numeric_error_estimate", round12(num.error_estimate)}});
    }
    rows.push_back(Json{{"function", generator_name(g)}, {"expression", gens[g].to_string()}, {"cusps", cells}});
  }
  return Json{{"command", "leading-coeffs"}, {"p", p}, {"n", n}, {"Y", Y}, {"terms", terms}, {"rows", rows}};
}

Json delta(std::int64_t p, int n) {
  const IntMatrix D = delta_matrix(p, n);
  const IntMatrix closed_D = closed::delta_matrix(p, n);
  const DeltaKernelAnalysis an = analyze_delta_kernel(p, n);
  return Json{{"command", "delta"},
              {"p", p},
              {"n", n},
              {"uniformizers", "sigma_m fixed: (1 0; p^m 1) for 2m >= n, (-p^(n-m) -1; p^n 0) otherwise"},
              {"orientation", "entry (r, i) = Lambda coordinate of LC_r(P_i) / LC_r(P_n)"},
              {"matrix", matrix(D)},
              {"closed_form", matrix(closed_D)},
              {"matches_closed_form", D == closed_D},
              {"a_prime", integer(an.a_prime)},
              {"cokernel", group(delta_cokernel(p, n))},
              {"psi_smallest_b", integer(an.smallest_b)},
              {"kernel_on_cuspidal", group(an.kernel_psi)},
              {"kernel_snake", group(an.generic.kernel)},
              {"image_of_cuspidal", group(an.generic.image)},
              {"class_group_order", an.class_group.order().get_str()}};
}

Json torsion(const TorsionResult& r) {
  Json out{{"command", "torsion"}};
  const Json g = group(r.group);
  for (const auto& [k, v] : g.items()) out[k] = v;
  out["conditional"] = r.conditional;
  out["kernel"] = group(r.kernel);
  out["mu_part"] = group(r.mu_part);
  out["extension_resolved"] = r.extension_resolved;
  out["up_to_2_torsion"] = r.up_to_2_torsion;
  out["statement"] = r.statement;
  return out;
}

Json pq(std::int64_t p, std::int64_t q, double Y, int terms) {
  const PqKernelAnalysis an = analyze_pq_kernel(p, q);
  const auto table = pq_leading_coefficients(p, q);
  const auto magnitudes = closed::pq_magnitude_table(p, q);
  const auto gens = pq_generators(p, q);
  const std::int64_t levels[] = {1, p, q, p * q};
  Json rows = Json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    Json cells = Json::array();
    for (std::size_t c = 0; c < 4; ++c) {
      const SigmaMatrix s = pq_sigma_matrix(p, q, levels[c]);
      const LeadingTerm lt = leading_term(gens[r], s);
      const NumericValue num = numeric_leading_coefficient(gens[r], s, lt.order, Y, terms);
      cells.push_back(Json{{"cusp", "P" + std::to_string(c)},
                           {"level", levels[c]},
                           {"sigma", sigma_json(s)},
                           {"computed", lt.coeff.to_string()},
                           {"table_magnitude", magnitudes[r][c].to_string()},
                           {"matches_up_to_sign", lt.coeff.same_magnitude(magnitudes[r][c]) &&
                                                      (lt.coeff.phase().is_zero() || lt.coeff.phase() == QmodZ(1, 2))},
                           {"numeric_residual", round12(std::abs(num.value - lt.coeff.to_complex()))}});
    }
    rows.push_back(Json{{"function", "f_" + std::to_string(r + 1)}, {"expression", gens[r].to_string()}, {"cusps", cells}});
  }
  const TorsionResult tr = pq_delta_kernel(p, q);
  return Json{{"command", "pq"},
              {"p", p},
              {"q", q},
              {"class_group", group(an.class_group)},
              {"closed_form_order", closed::class_number_pq(p, q).get_str()},
              {"leading_coefficients", rows},
              {"sign_note", "signs of the leading coefficients are convention-dependent; only magnitudes are certified"},
              {"delta_matrix", matrix(pq_delta_matrix(p, q))},
              {"kernel", group(an.snake.kernel)},
              {"c", integer(an.c)},
              {"kernel_generated_by_D1_D2_D3", an.generated_by_d1_d2_d3},
              {"torsion", torsion(tr)}};
}

Json verification(const std::vector<verify::CriterionResult>& results, bool with_timing) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    Json item{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (with_timing) item["seconds"] = round12(r.seconds);
    list.push_back(std::move(item));
    if (r.passed) ++passed;
  }
  return Json{{"command", "verify"}, {"criteria", list}, {"passed", passed}, {"total", results.size()}};
}

// ---------------------------------------------------------------- text

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string matrix_text(const Json& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 0;
  for (const auto& row : m) {
    cells.emplace_back();
    for (const auto& x : row) {
      cells.back().push_back(scalar(x));
      width = std::max(width, cells.back().back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent;
    for (const auto& c : row) os << std::string(width + 1 - c.size(), ' ') << c;
    os << "\n";
  }
  return os.str();
}

std::string group_line(const Json& g) { return scalar(g["structure"]) + " (order " + scalar(g["order"]) + ")"; }

}  // namespace

std::string to_text(const Json& r) {
  std::ostringstream os;
  const std::string cmd = r["command"].get<std::string>();
  if (cmd == "cusps") {
    os << "X_0(" << r["N"] << "): " << r["count"] << (r["count"] == 1 ? " cusp\n" : " cusps\n");
    os << "  level  conductor  degree  width\n";
    for (const auto& c : r["cusps"]) {
      char line[96];
      std::snprintf(line, sizeof line, "  %5s  %9s  %6s  %5s\n", scalar(c["level"]).c_str(),
                    scalar(c["residue_conductor"]).c_str(), scalar(c["degree"]).c_str(), scalar(c["width"]).c_str());
      os << line;
    }
  } else if (cmd == "eta-check") {
    os << r["expression"].get<std::string>() << " on X_0(" << r["level"] << "): "
       << (r["valid"].get<bool>() ? "modular function" : "NOT a modular function") << "\n";
    const auto& c = r["conditions"];
    os << "  sum r = " << scalar(r["exponent_sum"]) << (c["weight_zero"].get<bool>() ? "  ok" : "  FAIL") << "\n";
    os << "  prod delta^r square" << (c["rational_square"].get<bool>() ? "  ok" : "  FAIL") << "\n";
    os << "  sum r*delta = " << scalar(r["delta_sum"]) << (c["cusp_infinity"].get<bool>() ? "  ok" : "  FAIL") << "\n";
    os << "  sum r*N/delta = " << scalar(r["codelta_sum"]) << (c["cusp_zero"].get<bool>() ? "  ok" : "  FAIL") << "\n";
  } else if (cmd == "divisor") {
    os << "div(" << r["expression"].get<std::string>() << ") = " << r["divisor"].get<std::string>() << "\n";
    for (const auto& o : r["orders"]) os << "  ord at level " << o["level"] << ": " << scalar(o["order"]) << "\n";
  } else if (cmd == "class-group") {
    os << "C(" << r["N"] << ") = " << scalar(r["structure"]) << ", order " << scalar(r["order"])
       << (r["certified"].get<bool>() ? " (certified)" : " (upper bound: eta lattice may be smaller than P(N))") << "\n";
    if (r.contains("closed_form"))
      os << "  closed form: " << scalar(r["closed_form"]["structure"])
         << (r["matches_closed_form"].get<bool>() ? "  [match]" : "  [MISMATCH]") << "\n";
  } else if (cmd == "matrices") {
    for (const char* name : {"M24", "U", "V", "VMU24"}) os << name << " =\n" << matrix_text(r[name], "  ");
    for (const auto& c : r["claims"])
      os << scalar(c["claim"]) << ": computed " << scalar(c["computed"]) << ", stated " << scalar(c["stated"])
         << (c["holds"].get<bool>() ? "  [holds]" : "  [DIFFERS]") << "\n";
  } else if (cmd == "leading-coeffs") {
    for (const auto& row : r["rows"]) {
      os << row["function"].get<std::string>() << " = " << row["expression"].get<std::string>() << "\n";
      for (const auto& c : row["cusps"]) {
        os << "  m=" << c["m"] << "  order " << scalar(c["order"]) << "  " << scalar(c["computed"]);
        if (!c["matches_table"].get<bool>()) os << "  (table: " << scalar(c["table"]) << ")";
        os << "  residual " << c["numeric_residual"].dump() << "\n";
      }
    }
  } else if (cmd == "delta") {
    os << "Delta (rows f, g_0.., columns Lambda_0..Lambda_" << (r["n"].get<int>() - 1) << "):\n"
       << matrix_text(r["matrix"], "  ");
    os << "closed form " << (r["matches_closed_form"].get<bool>() ? "matches" : "DIFFERS") << "\n";
    os << "cokernel: " << group_line(r["cokernel"]) << "\n";
    os << "kernel on C: " << group_line(r["kernel_on_cuspidal"]) << "\n";
  } else if (cmd == "torsion") {
    os << r["statement"].get<std::string>() << "\n";
    os << "  kernel of delta on C: " << group_line(r["kernel"]) << "\n";
    os << "  roots of unity: " << group_line(r["mu_part"]) << "\n";
  } else if (cmd == "pq") {
    os << "C(" << r["p"] << "*" << r["q"] << ") = " << group_line(r["class_group"]) << ", stated order "
       << scalar(r["closed_form_order"]) << "\n";
    for (const auto& row : r["leading_coefficients"]) {
      os << "  " << row["function"].get<std::string>() << ":";
      for (const auto& c : row["cusps"]) os << "  " << scalar(c["computed"]);
      os << "\n";
    }
    os << "kernel of delta on C: " << group_line(r["kernel"]) << (r["kernel_generated_by_D1_D2_D3"].get<bool>() ? ", generated by D1-D2-D3" : "") << "\n";
    os << r["torsion"]["statement"].get<std::string>() << "\n";
  } else if (cmd == "verify") {
    for (const auto& c : r["criteria"]) {
      os << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  [" << c["id"] << "] " << c["name"].get<std::string>();
      if (c.contains("seconds")) os << " (" << c["seconds"].dump() << " s)";
      os << ": " << c["detail"].get<std::string>() << "\n";
    }
    os << r["passed"] << "/" << r["total"] << " criteria passed\n";
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace modunits::report
