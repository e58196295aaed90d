#pragma once

// CSV emission with deterministic 12-significant-digit rendering.

#include "edlab/frontier.hpp"
#include "edlab/sweep.hpp"

#include <string>
#include <vector>

namespace edlab {

struct IoError : Error {
  using Error::Error;
};

/// %.12g; absent values render as "nan".
std::string format_number(double v);

/// Header: theta,epsilon_a,eta_b,c_ab,ozawa_lhs,branciard_tight_lhs,
/// thm1_rhs,l_new2,new_beats_branciard. Booleans as true/false.
std::string sweep_csv(const std::vector<SweepRecord>& records);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);

/// Header: name,epsilon,eta. Curves in order, points in grid order.
std::string frontier_csv(const std::vector<FrontierCurve>& curves);
void emit_csv(const std::vector<FrontierCurve>& curves, const std::string& path);

}  // namespace edlab
