#pragma once

#include "radmap/sqdt.hpp"

namespace radmap::harness {

/// One named check with the measured value and the threshold it was held to.
struct CheckResult {
  std::string name;
  bool passed;
  double value;
  double tolerance;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double runtime_seconds = 0.0;

  bool all_passed() const;
  const CheckResult* worst() const;  // largest value/tolerance ratio, if any
};

/// The verification suites.  Tolerances are fixed here, not configurable.
SuiteResult table1_reproduction();
SuiteResult orthonormality();
SuiteResult eigen_residuals();
SuiteResult classic_map_identities();
SuiteResult odd_dimension_map();
SuiteResult three_dim_special_cases();
SuiteResult susy_structure(int d_max = 8, int l_max = 3);
SuiteResult fd_oracle(const sqdt::CoulombDefectProfile& profile =
                          sqdt::sodium_coulomb_profile(),
                      int l = 0);
SuiteResult continuum_maps();
SuiteResult figure_commutativity();

std::vector<SuiteResult> run_all();

}  // namespace radmap::harness
