#pragma once

// Theta sweeps over a scenario and the tighter-than-Branciard statistic.

#include "edlab/config.hpp"

#include <optional>
#include <vector>

namespace edlab {

struct EmptySweepError : Error {
  using Error::Error;
};

struct SweepRecord {
  double theta = 0.0;
  double epsilon_a = 0.0;
  double eta_b = 0.0;
  double c_ab = 0.0;
  double ozawa_lhs = 0.0;
  double branciard_tight_lhs = 0.0;
  double thm1_rhs = 0.0;
  std::optional<double> l_new2;  // absent under degenerate denominators
  bool new_beats_branciard = false;
};

/// theta_count records at theta_j = 2*pi*j/theta_count. Row j draws its
/// witnesses from the sub-stream derived from (seed, j), so rows are
/// reproducible independently of evaluation order.
std::vector<SweepRecord> sweep(const ScenarioConfig& c);

/// One record at the given theta with the given row sub-seed. The
/// Theorem-1 witness search uses the same derived seed convention as
/// bound_report, so the shared columns agree with a report of the same
/// model.
SweepRecord sweep_row(const ScenarioConfig& c, double theta, std::uint64_t row_seed);

/// Fraction of records with new_beats_branciard set. Throws EmptySweep
/// on an empty list.
double fraction_tighter(const std::vector<SweepRecord>& records);

}  // namespace edlab
