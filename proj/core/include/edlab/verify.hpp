#pragma once

// Randomized soundness suite: draws random indirect-measurement models
// and checks every proven inequality and identity at slack tolerance
// 1e-9. Violations carry a replayable serialized model.

#include "edlab/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace edlab {

/// Test hook. FlipThm1CrossTerms adds the Theorem-1 cross terms instead
/// of subtracting them, a bug class that must surface as violations.
enum class FaultInjection { None, FlipThm1CrossTerms };

struct Violation {
  std::string property;
  std::uint64_t trial = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::string model_config;  // custom-scenario config text for replay
};

struct VerifyResult {
  int trials = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Runs `trials` random models (two-qubit system/probe, Haar states and
/// coupling, Gaussian Hermitian observables). Per trial: Ozawa,
/// Branciard, Theorem 1 with a fresh random witness, the shared-witness
/// Theorem 2 quantity (skipped under degenerate denominators), the
/// complete-basis bound, the variance-sum identity, and witness
/// dominance of the closed-form witness over sampling.
VerifyResult verify(std::uint64_t seed, int trials, FaultInjection fault = FaultInjection::None);

}  // namespace edlab
