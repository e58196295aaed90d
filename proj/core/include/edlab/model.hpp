#pragma once

// Indirect-measurement models and their Heisenberg-picture evolution.
// A model couples a system qudit to a probe through a unitary; the probe
// observable M is read out to estimate the system observable A, which
// disturbs a second system observable B.

#include "edlab/qalg.hpp"

namespace edlab {

enum class PauliAxis { X, Y, Z };

Operator pauli(PauliAxis axis);
Operator identity(Eigen::Index d);
/// Rank-1 diagonal projector |k><k| in dimension d.
Operator projector(Eigen::Index basis_index, Eigen::Index d);

/// 2x2 rotation [[alpha, -conj(beta)], [beta, alpha]] with real alpha.
/// Throws Error("NonNormalized...") when |alpha|^2 + |beta|^2 deviates
/// from 1 beyond 1e-9.
Operator rotation_unitary(double alpha, Complex beta);

/// u p u^dag. Hermitian and isospectral with p when p is Hermitian.
Operator rotated_pauli(const Operator& u, const Operator& p);

/// CNOT with the system qubit as control: P0 (x) I + P1 (x) sigma_x.
Operator cnot();

struct MeasurementModel {
  MeasurementModel(PureState system_state, PureState probe_state,
                   Operator observable_a, Operator observable_b,
                   Operator estimator_m, Operator coupling);

  PureState system_state;
  PureState probe_state;
  Operator observable_a;  // Hermitian, system space
  Operator observable_b;  // Hermitian, system space
  Operator estimator_m;   // Hermitian, probe space
  Operator coupling;      // unitary, joint space

  Eigen::Index system_dim() const { return system_state.dim(); }
  Eigen::Index probe_dim() const { return probe_state.dim(); }
  Eigen::Index joint_dim() const { return system_dim() * probe_dim(); }
};

/// Joint-space picture of one model: in/out operators, the noise operator
/// N_A = M_out - A_in and disturbance operator D_B = B_out - B_in.
struct HeisenbergFrame {
  PureState joint_state;
  Operator a_in, b_in, m_in;
  Operator a_out, b_out, m_out;
  Operator noise_op;        // N_A
  Operator disturbance_op;  // D_B
  Operator coupling;        // kept for the witness-generation cross-check
};

HeisenbergFrame heisenberg_frame(const MeasurementModel& m);

struct NoiseDisturbanceStats {
  double epsilon_a;  // rms noise, sqrt<(M_out - A_in)^2>
  double eta_b;      // rms disturbance, sqrt<(B_out - B_in)^2>
  double delta_a;    // std dev of A on the system state
  double delta_b;    // std dev of B on the system state
  double delta_n;    // std dev of N_A on the joint state
  double delta_d;    // std dev of D_B on the joint state
  double c_ab;       // 0.5 |<psi|[A,B]|psi>|
};

double epsilon_a(const HeisenbergFrame& f);
double eta_b(const HeisenbergFrame& f);

NoiseDisturbanceStats stats(const MeasurementModel& m);
NoiseDisturbanceStats stats(const MeasurementModel& m, const HeisenbergFrame& f);

enum class Scenario { Fig1, Fig2, Fig3 };

struct ScenarioParams {
  double theta = 0.0;
  double phi = 0.0;      // state phase, used by Fig1
  double lambda = 0.01;  // scale on observable A, used by Fig3

  double alpha() const;   // cos(theta)
  Complex beta() const;   // sin(theta) e^{i phi}
};

/// Builds the worked qubit scenarios.
///   Fig1: psi = u|0>, A = u sx u^dag, B = u sy u^dag (u from alpha, beta)
///   Fig2: psi = cos(theta)|0> + sin(theta)|1>, A = sx, B = sy
///   Fig3: Fig2 with A scaled by lambda
/// All use probe |1>, estimator M = sx on the probe, CNOT coupling; the
/// estimator is never co-rotated in Fig1.
MeasurementModel scenario_model(Scenario scenario, const ScenarioParams& params);

}  // namespace edlab
