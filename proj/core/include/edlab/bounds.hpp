#pragma once

// Error-disturbance inequality evaluation: left-hand comparison
// quantities, lower bounds with orthogonal witness states, and per-model
// reports. Inequality slack tolerance is 1e-9 throughout; denominator
// guards trip at 1e-12.

#include "edlab/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edlab {

inline constexpr double kSlackTol = 1e-9;
inline constexpr double kDenominatorGuard = 1e-12;

struct AllSamplesDegenerateError : Error {
  using Error::Error;
};
struct DegenerateVarianceError : Error {
  using Error::Error;
};
struct DenominatorVanishesError : Error {
  using Error::Error;
};
struct DegenerateDenominatorError : Error {
  using Error::Error;
};

/// The +/- selection appearing in the witness bounds. s is +1 or -1.
struct SignChoice {
  int s = +1;
};

/// Sign making s * i * <[X,Y]> real-nonnegative; ties resolve to +1.
SignChoice sign_for(Complex commutator_expectation);

/// Sign governed by <Psi|[X,Y]|Psi> for an operator pair on the frame's
/// joint state.
SignChoice pair_sign(const Operator& x, const Operator& y, const PureState& joint);

/// Sign governed by <Psi|[A_in, B_in]|Psi>, the system commutator.
SignChoice governing_sign(const HeisenbergFrame& f);

struct WitnessStrategy {
  enum class Kind { Sampled, Optimal, Explicit };

  Kind kind = Kind::Sampled;
  int sample_count = 1000;     // Sampled only
  std::uint64_t seed = 0;      // Sampled only
  std::optional<PureState> state;  // Explicit only, orthogonal to |Psi>

  static WitnessStrategy sampled(int count, std::uint64_t seed);
  static WitnessStrategy optimal();
  static WitnessStrategy explicit_state(PureState state);
};

double robertson_rhs(const NoiseDisturbanceStats& st);

/// eps*eta + eps*dB + dA*eta.
double ozawa_lhs(const NoiseDisturbanceStats& st);

/// sqrt(eps^2 dB^2 + eta^2 dA^2 + 2 eps eta sqrt(dA^2 dB^2 - C^2)), with
/// the radicand clamped at 0 (Robertson guarantees nonnegativity).
double branciard_lhs(const NoiseDisturbanceStats& st);

/// Branciard with eta replaced by eta*sqrt(1 - eta^2/4). eta above 2 is
/// clamped to 2 and reported through *clamped when provided.
double branciard_tight_lhs(const NoiseDisturbanceStats& st, bool* clamped = nullptr);

/// |<Psi|(N_A + s*i*D_B)|w>|^2 for a unit witness w.
double witness_term(const HeisenbergFrame& f, SignChoice sign, const PureState& w);

/// The Cauchy-Schwarz-saturating witness: normalized orthogonal
/// projection of (N_A - s*i*D_B)|Psi>. Among unit states orthogonal to
/// |Psi> it maximizes witness_term. Empty when the projection vanishes
/// (the term is then 0 for every witness).
std::optional<PureState> optimal_witness(const HeisenbergFrame& f, SignChoice sign);

struct SampledWitness {
  PureState state;
  double term = 0.0;
};

/// Draws n Haar-random joint states, projects each orthogonal to |Psi>,
/// and returns the witness maximizing witness_term. The projection is
/// computed both directly and through the coupling-conjugated form; the
/// two must agree within 1e-9. Throws AllSamplesDegenerateError when
/// every projection vanishes.
SampledWitness sampled_witness(const HeisenbergFrame& f, SignChoice sign, int n, Rng& rng);

/// s*i<[A_in,B_in]> - s*i<[M_out,B_in]> - s*i<[A_in,B_out]> on the joint
/// state. The first term is nonnegative under the governing sign.
double thm1_commutator_part(const HeisenbergFrame& f, SignChoice sign);

struct Thm1Result {
  double rhs = 0.0;
  double commutator_part = 0.0;
  double witness_value = 0.0;
  std::optional<PureState> witness;  // empty when no nondegenerate witness exists
};

/// Commutator part plus the witness term under the given strategy.
/// eps^2 + eta^2 >= rhs - 1e-9 for any orthogonal witness.
Thm1Result thm1_evaluate(const HeisenbergFrame& f, SignChoice sign, const WitnessStrategy& w);
double thm1_rhs(const HeisenbergFrame& f, SignChoice sign, const WitnessStrategy& w);

/// Witness-strengthened Robertson bound on dA*dB:
/// (s*i/2)<[A,B]> / (1 - |<s|(A/dA + s*i*B/dB)|w>|^2 / 2).
/// Throws DegenerateVarianceError when dA or dB vanishes and
/// DenominatorVanishesError when the witness saturates the bound.
double maccone_pati_bound(const Operator& a, const Operator& b, const PureState& state,
                          const PureState& w, SignChoice sign);

/// Ozawa LHS minus three witness corrections sharing one witness. The
/// sign of each correction follows its own operand-pair commutator, so
/// the result is >= C_AB - 1e-9 for any valid witness. Throws
/// DegenerateDenominatorError naming the vanishing factor.
double l_new2(const HeisenbergFrame& f, const PureState& w);

/// Same quantity with one externally fixed sign shared by all three
/// corrections, the convention used for the figure comparison statistic.
/// Not guaranteed to stay above C_AB on arbitrary models.
double l_new2_shared_sign(const HeisenbergFrame& f, const PureState& w, SignChoice sign);

/// Commutator part plus the witness term summed over a full orthonormal
/// complement basis. Independent of the basis choice (Parseval).
double eq21_rhs(const HeisenbergFrame& f, SignChoice sign);

/// Both sides of the variance-sum identity
/// dN^2 + dD^2 = s*i<[N,D]> + sum_k |<Psi|(C + s*i*D')|Psi_k>|^2
/// with mean-subtracted C = N - <N>, D' = D - <D>. Always equal within
/// 1e-9.
std::pair<double, double> variance_sum_equality_check(const HeisenbergFrame& f, SignChoice sign);

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;
};

struct BoundReport {
  NoiseDisturbanceStats stats{};
  double robertson_rhs = 0.0;
  double ozawa_lhs = 0.0;
  double branciard_lhs = 0.0;
  double branciard_tight_lhs = 0.0;
  bool tight_substitution_clamped = false;
  double thm1_sum = 0.0;  // eps^2 + eta^2
  double thm1_rhs = 0.0;
  std::optional<PureState> thm1_witness;
  std::optional<double> l_new2;  // absent under degenerate denominators
  std::string l_new2_absent_reason;
  double eq21_rhs = 0.0;
  std::vector<InequalityCheck> checks;
};

/// Evaluates every bound for one model. Explicit and optimal strategies
/// share one witness across the Theorem-1 and shared-witness bounds;
/// the sampled strategy draws independently per bound from derived
/// sub-seeds. Degenerate bounds come back absent with a reason, never as
/// infinities.
BoundReport bound_report(const MeasurementModel& m, const WitnessStrategy& w);

}  // namespace edlab
