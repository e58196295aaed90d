#include "edlab/verify.hpp"

#include <cmath>

namespace edlab {

namespace {

MeasurementModel random_model(Rng& rng) {
  return MeasurementModel(haar_random_state(2, rng), haar_random_state(2, rng),
                          random_hermitian(2, rng), random_hermitian(2, rng),
                          random_hermitian(2, rng), random_unitary(4, rng));
}

struct Checker {
  VerifyResult& result;
  std::uint64_t trial;
  const MeasurementModel& model;

  void require(const std::string& property, double lhs, double rhs, double tol) {
    const double slack = lhs - rhs;
    if (slack >= -tol) return;
    Violation v;
    v.property = property;
    v.trial = trial;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = slack;
    v.model_config = serialize_model(model);
    result.violations.push_back(std::move(v));
  }
};

}  // namespace

VerifyResult verify(std::uint64_t seed, int trials, FaultInjection fault) {
  if (trials < 1) throw Error("verify: trials must be >= 1");
  VerifyResult result;
  result.trials = trials;
  const Rng root(seed);

  for (int t = 0; t < trials; ++t) {
    Rng rng = root.derive(static_cast<std::uint64_t>(t));
    const MeasurementModel model = random_model(rng);
    const HeisenbergFrame frame = heisenberg_frame(model);
    const NoiseDisturbanceStats st = stats(model, frame);
    SignChoice sign = governing_sign(frame);
    Checker check{result, static_cast<std::uint64_t>(t), model};

    check.require("ozawa", ozawa_lhs(st), st.c_ab, kSlackTol);
    check.require("branciard", branciard_lhs(st), st.c_ab, kSlackTol);

    const double sum = st.epsilon_a * st.epsilon_a + st.eta_b * st.eta_b;

    // Theorem-1 bound with a fresh random witness.
    std::optional<PureState> witness;
    {
      const Vector p =
          project_orthogonal(haar_random_state(frame.joint_state.dim(), rng).amplitudes(),
                             frame.joint_state);
      if (p.norm() > kDenominatorGuard) witness = normalize(p);
    }
    if (witness) {
      double comm_part = thm1_commutator_part(frame, sign);
      if (fault == FaultInjection::FlipThm1CrossTerms) {
        // deliberately wrong: cross terms added instead of subtracted
        const Complex si(0, sign.s);
        comm_part = std::real(
            si * expectation(commutator(frame.a_in, frame.b_in), frame.joint_state) +
            si * expectation(commutator(frame.m_out, frame.b_in), frame.joint_state) +
            si * expectation(commutator(frame.a_in, frame.b_out), frame.joint_state));
      }
      const double rhs = comm_part + witness_term(frame, sign, *witness);
      check.require("thm1", sum, rhs, kSlackTol);

      try {
        check.require("thm2", l_new2(frame, *witness), st.c_ab, kSlackTol);
      } catch (const DegenerateDenominatorError&) {
        // guarded quantity absent, nothing to check
      }
    }

    check.require("eq21", sum, eq21_rhs(frame, sign), kSlackTol);

    const auto [lhs, rhs] = variance_sum_equality_check(frame, sign);
    check.require("variance_sum_equality", kSlackTol, std::abs(lhs - rhs), 0.0);

    // Closed-form witness dominates sampling.
    if (const auto opt = optimal_witness(frame, sign)) {
      const double opt_term = witness_term(frame, sign, *opt);
      const SampledWitness s = sampled_witness(frame, sign, 32, rng);
      check.require("witness_dominance", opt_term, s.term, kSlackTol);
    }

    // The complete-basis sum dominates any single-witness bound and
    // matches its closed form (basis independence via Parseval).
    const double eq21_value = eq21_rhs(frame, sign);
    if (witness) {
      const double single = thm1_commutator_part(frame, sign) + witness_term(frame, sign, *witness);
      check.require("eq21_dominates_thm1", eq21_value, single, kSlackTol);
    }
    const Matrix x =
        frame.noise_op.matrix() + Complex(0, sign.s) * frame.disturbance_op.matrix();
    const double parseval =
        project_orthogonal(Matrix(x.adjoint()) * frame.joint_state.amplitudes(),
                           frame.joint_state)
            .squaredNorm();
    const double basis_sum = eq21_value - thm1_commutator_part(frame, sign);
    check.require("basis_independence", kSlackTol, std::abs(basis_sum - parseval), 0.0);
  }
  return result;
}

}  // namespace edlab
