#include "edlab/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace edlab;

namespace {

MeasurementModel random_model(Rng& rng) {
  return MeasurementModel(haar_random_state(2, rng), haar_random_state(2, rng),
                          random_hermitian(2, rng), random_hermitian(2, rng),
                          random_hermitian(2, rng), random_unitary(4, rng));
}

NoiseDisturbanceStats fig2_theta0_stats() {
  return stats(scenario_model(Scenario::Fig2, ScenarioParams{0.0}));
}

}  // namespace

TEST_CASE("sign choice makes the commutator term nonnegative") {
  CHECK(sign_for(Complex(0, -2)).s == +1);  // i * (-2i) = 2
  CHECK(sign_for(Complex(0, 2)).s == -1);
  CHECK(sign_for(Complex(0, 0)).s == +1);  // tie resolves to +1
}

TEST_CASE("robertson rhs examples") {
  Vector zero(2), plus(2);
  zero << 1, 0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Operator sx = pauli(PauliAxis::X);
  const Operator sy = pauli(PauliAxis::Y);
  NoiseDisturbanceStats st{};
  st.c_ab = 0.5 * std::abs(expectation(commutator(sx, sy), PureState(zero)));
  CHECK(st.c_ab == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(robertson_rhs(st) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(0.5 * std::abs(expectation(commutator(sx, sx), PureState(zero))) == 0.0);
  CHECK(0.5 * std::abs(expectation(commutator(sx, sy), PureState(plus))) < 1e-12);
}

TEST_CASE("ozawa lhs arithmetic") {
  NoiseDisturbanceStats st{};
  st.epsilon_a = 1;
  st.eta_b = 0;
  st.delta_a = 1;
  st.delta_b = 1;
  CHECK(ozawa_lhs(st) == doctest::Approx(1.0));
  st.epsilon_a = 0;
  CHECK(ozawa_lhs(st) == doctest::Approx(0.0));
  CHECK(ozawa_lhs(fig2_theta0_stats()) ==
        doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("branciard lhs and tight variant") {
  NoiseDisturbanceStats st{};
  st.delta_a = st.delta_b = st.c_ab = 1;
  st.epsilon_a = 1;
  st.eta_b = 0;
  CHECK(branciard_lhs(st) == doctest::Approx(1.0).epsilon(1e-12));
  st.epsilon_a = 0.6;
  st.eta_b = 0.8;
  // unit-variance unit-commutator case: lhs^2 = eps^2 + eta^2
  CHECK(branciard_lhs(st) == doctest::Approx(1.0).epsilon(1e-12));

  bool clamped = true;
  CHECK(branciard_tight_lhs(fig2_theta0_stats(), &clamped) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK_FALSE(clamped);

  st.eta_b = 3.0;  // beyond the substitution domain
  branciard_tight_lhs(st, &clamped);
  CHECK(clamped);
  // at eta = 2 the substitution maps eta to 0, leaving eps * delta_b
  st.eta_b = 2.0;
  CHECK(branciard_tight_lhs(st) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("optimal witness saturates at fig2 theta zero") {
  const HeisenbergFrame f = heisenberg_frame(scenario_model(Scenario::Fig2, ScenarioParams{0.0}));
  const SignChoice sign = governing_sign(f);
  const auto w = optimal_witness(f, sign);
  REQUIRE(w.has_value());
  CHECK(witness_term(f, sign, *w) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(thm1_commutator_part(f, sign) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(thm1_rhs(f, sign, WitnessStrategy::optimal()) == doctest::Approx(4.0).epsilon(1e-12));
  // saturation: eps^2 + eta^2 = 4 here
  CHECK(epsilon_a(f) * epsilon_a(f) + eta_b(f) * eta_b(f) == doctest::Approx(4.0));
}

TEST_CASE("optimal witness absent when noise and disturbance vanish") {
  Vector s(2), p(2);
  s << 1, 0;
  p << 1, 0;
  const MeasurementModel m(PureState(s), PureState(p), pauli(PauliAxis::Z),
                           pauli(PauliAxis::Z), pauli(PauliAxis::Z), cnot());
  const HeisenbergFrame f = heisenberg_frame(m);
  CHECK_FALSE(optimal_witness(f, governing_sign(f)).has_value());
}

TEST_CASE("sampled witness: determinism, dominance, degenerate skip") {
  Rng rng(21);
  const MeasurementModel m = random_model(rng);
  const HeisenbergFrame f = heisenberg_frame(m);
  const SignChoice sign = governing_sign(f);

  Rng r1(5), r2(5);
  const SampledWitness a = sampled_witness(f, sign, 64, r1);
  const SampledWitness b = sampled_witness(f, sign, 64, r2);
  CHECK(a.term == b.term);
  CHECK((a.state.amplitudes() - b.state.amplitudes()).norm() == 0.0);

  const auto opt = optimal_witness(f, sign);
  REQUIRE(opt.has_value());
  CHECK(witness_term(f, sign, *opt) >= a.term - 1e-9);

  // nested sample sets: the max is nondecreasing in n under a shared
  // seed prefix
  Rng r3(5), r4(5);
  const double small = sampled_witness(f, sign, 16, r3).term;
  const double large = sampled_witness(f, sign, 64, r4).term;
  CHECK(large >= small - 1e-15);
}

TEST_CASE("thm1 with explicit witness and sign flip sensitivity") {
  Rng rng(31);
  const HeisenbergFrame f = heisenberg_frame(random_model(rng));
  const SignChoice sign = governing_sign(f);
  const PureState w = normalize(
      project_orthogonal(haar_random_state(4, rng).amplitudes(), f.joint_state));
  const double sum = epsilon_a(f) * epsilon_a(f) + eta_b(f) * eta_b(f);
  CHECK(sum >= thm1_rhs(f, sign, WitnessStrategy::explicit_state(w)) - 1e-9);
}

TEST_CASE("maccone pati bound examples") {
  Vector zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  const Operator sx = pauli(PauliAxis::X);
  const Operator sy = pauli(PauliAxis::Y);
  const PureState s(zero), w(one);
  const SignChoice sign = pair_sign(sx, sy, s);
  CHECK(sign.s == -1);  // <0|[sx,sy]|0> = 2i
  const double bound = maccone_pati_bound(sx, sy, s, w, sign);
  CHECK(bound == doctest::Approx(1.0).epsilon(1e-12));
  // equality with delta_a * delta_b = 1 here
  CHECK(std::sqrt(variance(sx, s) * variance(sy, s)) == doctest::Approx(1.0));

  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const Operator a = random_hermitian(2, rng);
    const Operator b = random_hermitian(2, rng);
    const PureState st = haar_random_state(2, rng);
    const Vector p = project_orthogonal(haar_random_state(2, rng).amplitudes(), st);
    if (p.norm() < 1e-6) continue;
    const double da = std::sqrt(variance(a, st));
    const double db = std::sqrt(variance(b, st));
    if (da < 1e-6 || db < 1e-6) continue;
    try {
      CHECK(maccone_pati_bound(a, b, st, normalize(p), pair_sign(a, b, st)) <=
            da * db + 1e-9);
    } catch (const DenominatorVanishesError&) {
      // saturation reported instead of a value
    }
  }
}

TEST_CASE("maccone pati degenerate variance") {
  Vector zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  CHECK_THROWS_AS(maccone_pati_bound(pauli(PauliAxis::Z), pauli(PauliAxis::X), PureState(zero),
                                     PureState(one), SignChoice{+1}),
                  DegenerateVarianceError);
}

TEST_CASE("l_new2 stays above the commutator bound and guards degeneracy") {
  Rng rng(51);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const MeasurementModel m = random_model(rng);
    const HeisenbergFrame f = heisenberg_frame(m);
    const Vector p = project_orthogonal(haar_random_state(4, rng).amplitudes(), f.joint_state);
    if (p.norm() < 1e-9) continue;
    try {
      const double value = l_new2(f, normalize(p));
      CHECK(value >= stats(m, f).c_ab - 1e-9);
      ++checked;
    } catch (const DegenerateDenominatorError&) {
    }
  }
  CHECK(checked > 150);

  // zero noise makes epsilon_a vanish
  Vector s(2), pr(2);
  s << 1, 0;
  pr << 1, 0;
  const MeasurementModel deg(PureState(s), PureState(pr), pauli(PauliAxis::Z),
                             pauli(PauliAxis::Z), pauli(PauliAxis::Z), cnot());
  const HeisenbergFrame f = heisenberg_frame(deg);
  Vector w(4);
  w << 0, 1, 0, 0;
  CHECK_THROWS_AS(l_new2(f, PureState(w)), DegenerateDenominatorError);
}

TEST_CASE("eq21 equals commutator part plus full parseval sum") {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    const HeisenbergFrame f = heisenberg_frame(random_model(rng));
    const SignChoice sign = governing_sign(f);
    const double value = eq21_rhs(f, sign);
    const double sum = epsilon_a(f) * epsilon_a(f) + eta_b(f) * eta_b(f);
    CHECK(sum >= value - 1e-9);
    // dominates the single-witness bound
    const auto opt = optimal_witness(f, sign);
    if (opt) {
      CHECK(value >= thm1_commutator_part(f, sign) + witness_term(f, sign, *opt) - 1e-9);
    }
    // closed form of the sum term
    const Matrix x = f.noise_op.matrix() + Complex(0, sign.s) * f.disturbance_op.matrix();
    const double parseval =
        project_orthogonal(Matrix(x.adjoint()) * f.joint_state.amplitudes(), f.joint_state)
            .squaredNorm();
    CHECK(value - thm1_commutator_part(f, sign) == doctest::Approx(parseval).epsilon(1e-9));
  }
}

TEST_CASE("eq21 sum is independent of the complement basis") {
  Rng rng(71);
  const HeisenbergFrame f = heisenberg_frame(random_model(rng));
  const SignChoice sign = governing_sign(f);
  const Matrix x = f.noise_op.matrix() + Complex(0, sign.s) * f.disturbance_op.matrix();

  const auto basis_sum = [&](const std::vector<PureState>& basis) {
    double sum = 0.0;
    for (const PureState& k : basis) {
      sum += std::norm(f.joint_state.amplitudes().dot(x * k.amplitudes()));
    }
    return sum;
  };

  const auto basis1 = orthonormal_complement_basis(f.joint_state);
  // second basis: mix the first one through a random unitary on the
  // complement
  const Operator mix = random_unitary(3, rng);
  std::vector<PureState> basis2;
  for (Eigen::Index col = 0; col < 3; ++col) {
    Vector v = Vector::Zero(4);
    for (Eigen::Index row = 0; row < 3; ++row) {
      v += mix.matrix()(row, col) * basis1[row].amplitudes();
    }
    basis2.push_back(normalize(v));
  }
  CHECK(basis_sum(basis1) == doctest::Approx(basis_sum(basis2)).epsilon(1e-9));
}

TEST_CASE("variance sum identity holds on random frames") {
  Rng rng(81);
  for (int k = 0; k < 100; ++k) {
    const HeisenbergFrame f = heisenberg_frame(random_model(rng));
    for (const int s : {+1, -1}) {
      const auto [lhs, rhs] = variance_sum_equality_check(f, SignChoice{s});
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("bound report populates and satisfies every proven inequality") {
  const MeasurementModel m = scenario_model(Scenario::Fig2, ScenarioParams{0.0});
  const BoundReport r = bound_report(m, WitnessStrategy::optimal());
  CHECK(r.thm1_sum == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.thm1_rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.eq21_rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.robertson_rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.branciard_tight_lhs == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.thm1_witness.has_value());
  CHECK(r.l_new2.has_value());
  for (const InequalityCheck& c : r.checks) CHECK(c.satisfied);

  // degenerate scenario reports l_new2 absent with a reason
  const MeasurementModel deg =
      scenario_model(Scenario::Fig3, ScenarioParams{0.78539816339744831, 0.0, 0.01});
  const BoundReport rd = bound_report(deg, WitnessStrategy::optimal());
  CHECK_FALSE(rd.l_new2.has_value());
  CHECK_FALSE(rd.l_new2_absent_reason.empty());
}

TEST_CASE("bound report is deterministic for sampled strategies") {
  const MeasurementModel m = scenario_model(Scenario::Fig2, ScenarioParams{1.3});
  const BoundReport a = bound_report(m, WitnessStrategy::sampled(200, 9));
  const BoundReport b = bound_report(m, WitnessStrategy::sampled(200, 9));
  CHECK(a.thm1_rhs == b.thm1_rhs);
  REQUIRE(a.l_new2.has_value());
  REQUIRE(b.l_new2.has_value());
  CHECK(*a.l_new2 == *b.l_new2);
}
