#pragma once

// Boundary curves of the error-disturbance inequalities in the
// epsilon-eta plane.

#include "edlab/qalg.hpp"

#include <string>
#include <vector>

namespace edlab {

struct DomainError : Error {
  using Error::Error;
};

struct FrontierPoint {
  double epsilon = 0.0;
  double eta = 0.0;
};

struct FrontierCurve {
  std::string name;  // ozawa | branciard | new
  std::vector<FrontierPoint> points;
};

/// Traces three boundaries for fixed c_ab, delta_a, delta_b:
///   ozawa:     eps*eta + eps*dB + dA*eta = C
///   branciard: eps^2 dB^2 + eta^2 dA^2 + 2 eps eta sqrt(dA^2 dB^2 - C^2) = C^2
///   new:       eps^2 + eta^2 = new_rhs_value
/// Each curve samples grid_count epsilon values across its own domain;
/// grid rows with no eta >= 0 solution are omitted. Every emitted point
/// satisfies its equation within 1e-6. Throws DomainError when
/// dA^2 dB^2 < C^2 beyond tolerance.
std::vector<FrontierCurve> frontier(double c_ab, double delta_a, double delta_b,
                                    double new_rhs_value, int grid_count);

}  // namespace edlab
