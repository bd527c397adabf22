#pragma once

namespace holofield {

/// Degree caps and step budgets shared by the long-running operations.
struct Limits {
  int factor_degree_cap = 32;
  int subfield_degree_cap = 6;
  int refinement_budget = 4000;  // bisection steps per certified comparison
  int trace_stable_lengths = 3;
  int trace_max_length = 0;      // 0: twice the dimension
  int block_power_bound = 24;
  int orbit_generators_cap = 1 << 16;
};

}  // namespace holofield
