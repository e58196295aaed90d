#include "edlab/model.hpp"

#include <cmath>
#include <utility>

namespace edlab {

Operator pauli(PauliAxis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return Operator::hermitian(std::move(m));
}

Operator identity(Eigen::Index d) { return Operator::hermitian(Matrix::Identity(d, d)); }

Operator projector(Eigen::Index basis_index, Eigen::Index d) {
  if (basis_index < 0 || basis_index >= d) {
    throw DimensionError("projector: basis index out of range");
  }
  Matrix m = Matrix::Zero(d, d);
  m(basis_index, basis_index) = 1.0;
  return Operator::hermitian(std::move(m));
}

Operator rotation_unitary(double alpha, Complex beta) {
  const double n = alpha * alpha + std::norm(beta);
  if (std::abs(n - 1.0) > kAttestTol) {
    throw Error("NonNormalized: |alpha|^2 + |beta|^2 = " + std::to_string(n));
  }
  Matrix m(2, 2);
  m << alpha, -std::conj(beta), beta, alpha;
  return Operator::unitary(std::move(m));
}

Operator rotated_pauli(const Operator& u, const Operator& p) {
  if (u.dim() != p.dim()) throw DimensionError("rotated_pauli: dimension mismatch");
  Matrix m = u.matrix() * p.matrix() * u.matrix().adjoint();
  // Restore exact Hermiticity lost to round-off before attesting.
  m = (m + m.adjoint()) / 2.0;
  return Operator::hermitian(std::move(m));
}

Operator cnot() {
  return Operator::unitary(tensor(projector(0, 2), identity(2)).matrix() +
                           tensor(projector(1, 2), pauli(PauliAxis::X)).matrix());
}

MeasurementModel::MeasurementModel(PureState system_state_, PureState probe_state_,
                                   Operator observable_a_, Operator observable_b_,
                                   Operator estimator_m_, Operator coupling_)
    : system_state(std::move(system_state_)),
      probe_state(std::move(probe_state_)),
      observable_a(std::move(observable_a_)),
      observable_b(std::move(observable_b_)),
      estimator_m(std::move(estimator_m_)),
      coupling(std::move(coupling_)) {
  const Eigen::Index ds = system_state.dim();
  const Eigen::Index dp = probe_state.dim();
  if (observable_a.dim() != ds || observable_b.dim() != ds) {
    throw DimensionError("observables A, B must act on the system space");
  }
  if (estimator_m.dim() != dp) {
    throw DimensionError("estimator M must act on the probe space");
  }
  if (coupling.dim() != ds * dp) {
    throw DimensionError("coupling must act on the joint space");
  }
  // Re-attest through the Operator factories when tags are missing.
  if (!observable_a.is_hermitian()) observable_a = Operator::hermitian(observable_a.matrix());
  if (!observable_b.is_hermitian()) observable_b = Operator::hermitian(observable_b.matrix());
  if (!estimator_m.is_hermitian()) estimator_m = Operator::hermitian(estimator_m.matrix());
  if (!coupling.is_unitary()) coupling = Operator::unitary(coupling.matrix());
}

HeisenbergFrame heisenberg_frame(const MeasurementModel& m) {
  const Operator is = identity(m.system_dim());
  const Operator ip = identity(m.probe_dim());
  Operator a_in = tensor(m.observable_a, ip);
  Operator b_in = tensor(m.observable_b, ip);
  Operator m_in = tensor(is, m.estimator_m);
  const Matrix& u = m.coupling.matrix();
  auto conjugate = [&u](const Operator& x) {
    Matrix out = u.adjoint() * x.matrix() * u;
    out = (out + out.adjoint()) / 2.0;
    return Operator::hermitian(std::move(out));
  };
  Operator a_out = conjugate(a_in);
  Operator b_out = conjugate(b_in);
  Operator m_out = conjugate(m_in);
  Operator noise = m_out - a_in;
  Operator disturbance = b_out - b_in;
  return HeisenbergFrame{tensor(m.system_state, m.probe_state),
                         std::move(a_in),
                         std::move(b_in),
                         std::move(m_in),
                         std::move(a_out),
                         std::move(b_out),
                         std::move(m_out),
                         std::move(noise),
                         std::move(disturbance),
                         m.coupling};
}

namespace {

double mean_square(const Operator& x, const PureState& s) {
  return (x.matrix() * s.amplitudes()).squaredNorm();
}

}  // namespace

double epsilon_a(const HeisenbergFrame& f) {
  return std::sqrt(mean_square(f.noise_op, f.joint_state));
}

double eta_b(const HeisenbergFrame& f) {
  return std::sqrt(mean_square(f.disturbance_op, f.joint_state));
}

NoiseDisturbanceStats stats(const MeasurementModel& m, const HeisenbergFrame& f) {
  NoiseDisturbanceStats out{};
  out.epsilon_a = epsilon_a(f);
  out.eta_b = eta_b(f);
  out.delta_a = std::sqrt(variance(m.observable_a, m.system_state));
  out.delta_b = std::sqrt(variance(m.observable_b, m.system_state));
  out.delta_n = std::sqrt(variance(Operator::hermitian(f.noise_op.matrix()), f.joint_state));
  out.delta_d =
      std::sqrt(variance(Operator::hermitian(f.disturbance_op.matrix()), f.joint_state));
  out.c_ab =
      0.5 * std::abs(expectation(commutator(m.observable_a, m.observable_b), m.system_state));
  return out;
}

NoiseDisturbanceStats stats(const MeasurementModel& m) { return stats(m, heisenberg_frame(m)); }

double ScenarioParams::alpha() const { return std::cos(theta); }

Complex ScenarioParams::beta() const {
  return std::sin(theta) * Complex(std::cos(phi), std::sin(phi));
}

MeasurementModel scenario_model(Scenario scenario, const ScenarioParams& params) {
  Vector probe(2);
  probe << 0, 1;
  const PureState probe_state{probe};
  const Operator m_est = pauli(PauliAxis::X);
  const Operator u_coupling = cnot();

  switch (scenario) {
    case Scenario::Fig1: {
      const Operator u = rotation_unitary(params.alpha(), params.beta());
      Vector zero(2);
      zero << 1, 0;
      PureState psi = normalize(u.matrix() * zero);
      return MeasurementModel(std::move(psi), probe_state,
                              rotated_pauli(u, pauli(PauliAxis::X)),
                              rotated_pauli(u, pauli(PauliAxis::Y)), m_est, u_coupling);
    }
    case Scenario::Fig2:
    case Scenario::Fig3: {
      Vector v(2);
      v << std::cos(params.theta), std::sin(params.theta);
      PureState psi = normalize(v);
      const double scale = scenario == Scenario::Fig3 ? params.lambda : 1.0;
      Operator a = Operator::hermitian(scale * pauli(PauliAxis::X).matrix());
      return MeasurementModel(std::move(psi), probe_state, std::move(a),
                              pauli(PauliAxis::Y), m_est, u_coupling);
    }
  }
  throw Error("unknown scenario");
}

}  // namespace edlab
