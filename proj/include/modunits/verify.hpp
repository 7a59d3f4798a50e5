#pragma once

#include <string>
#include <vector>

namespace modunits::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult class_group_structure();   // 1
CriterionResult mazur_order();             // 2
CriterionResult determinant_claims();      // 3
CriterionResult leading_coefficient_tables();  // 4
CriterionResult delta_matrix_and_cokernel();   // 5
CriterionResult injectivity();             // 6
CriterionResult generalized_torsion();     // 7
CriterionResult pq_case();                 // 8
CriterionResult property_suites();         // 9

/// "acceptance" runs all nine; a single criterion can be selected by number
/// or by its short name (see suite_names()).
std::vector<CriterionResult> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace modunits::verify
