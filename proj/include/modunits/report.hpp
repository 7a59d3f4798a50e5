#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

#include "modunits/cusp_class_group.hpp"
#include "modunits/eta_quotient.hpp"
#include "modunits/eta_transform.hpp"
#include "modunits/exact_linalg.hpp"
#include "modunits/gen_jacobian.hpp"
#include "modunits/verify.hpp"

namespace modunits::report {

using Json = nlohmann::ordered_json;

// Integers as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
Json integer(const Integer& x);
Json matrix(const IntMatrix& m);
// {"structure": "Z/2 x Z/10", "invariant_factors": [2, 10], "order": "20"}
Json group(const AbelianGroup& g);
Json divisor(const CuspDivisor& E);

Json cusps(std::int64_t N);
Json eta_check(const EtaQuotient& h);
Json divisor_report(const EtaQuotient& h);
Json class_group(const ClassGroupResult& r, const std::optional<AbelianGroup>& closed_form);
Json matrices(std::int64_t p, int n);
Json leading_coefficients(std::int64_t p, int n, double Y, int terms);
Json delta(std::int64_t p, int n);
Json torsion(const TorsionResult& r);
Json pq(std::int64_t p, std::int64_t q, double Y, int terms);
Json verification(const std::vector<verify::CriterionResult>& results, bool with_timing);

// Human-readable rendering of any report produced above.
std::string to_text(const Json& report);

}  // namespace modunits::report
