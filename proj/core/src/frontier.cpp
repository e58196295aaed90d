#include "edlab/frontier.hpp"

#include <cmath>

namespace edlab {

namespace {

constexpr double kBoundaryTol = 1e-6;

template <typename Solve>
FrontierCurve trace(std::string name, double eps_max, int grid_count, Solve solve) {
  FrontierCurve curve{std::move(name), {}};
  curve.points.reserve(grid_count);
  for (int k = 0; k < grid_count; ++k) {
    const double eps = eps_max * k / (grid_count - 1);
    const double eta = solve(eps);
    if (!(eta >= 0.0) || !std::isfinite(eta)) continue;
    curve.points.push_back(FrontierPoint{eps, eta});
  }
  return curve;
}

}  // namespace

std::vector<FrontierCurve> frontier(double c_ab, double delta_a, double delta_b,
                                    double new_rhs_value, int grid_count) {
  if (!(c_ab > 0.0)) throw DomainError("frontier: c_ab must be positive");
  if (grid_count < 2) throw DomainError("frontier: grid_count must be >= 2");
  const double k2 = delta_a * delta_a * delta_b * delta_b - c_ab * c_ab;
  if (k2 < -kBoundaryTol) {
    throw DomainError("frontier: delta_a^2 delta_b^2 < c_ab^2 violates Robertson");
  }
  const double kk = std::sqrt(std::max(0.0, k2));

  std::vector<FrontierCurve> curves;
  curves.push_back(trace("ozawa", c_ab / delta_b, grid_count, [&](double eps) {
    return (c_ab - eps * delta_b) / (eps + delta_a);
  }));
  curves.push_back(trace("branciard", c_ab / delta_b, grid_count, [&](double eps) {
    // eta solves eta^2 dA^2 + 2 eps kk eta + (eps^2 dB^2 - C^2) = 0.
    const double disc = eps * eps * kk * kk -
                        delta_a * delta_a * (eps * eps * delta_b * delta_b - c_ab * c_ab);
    if (disc < 0.0) return -1.0;
    return (-eps * kk + std::sqrt(disc)) / (delta_a * delta_a);
  }));
  if (!(new_rhs_value >= 0.0)) throw DomainError("frontier: new_rhs_value must be >= 0");
  const double radius = std::sqrt(new_rhs_value);
  curves.push_back(trace("new", radius, grid_count, [&](double eps) {
    return std::sqrt(std::max(0.0, new_rhs_value - eps * eps));
  }));
  return curves;
}

}  // namespace edlab
