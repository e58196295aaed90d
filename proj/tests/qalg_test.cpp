#include "edlab/qalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace edlab;

namespace {

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_CASE("hermitian attestation accepts and rejects") {
  CHECK(Operator::hermitian(sigma_x()).is_hermitian());
  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(Operator::hermitian(bad), HermiticityError);
}

TEST_CASE("unitary attestation accepts and rejects") {
  CHECK(Operator::unitary(sigma_x()).is_unitary());
  Matrix bad = 2.0 * sigma_x();
  CHECK_THROWS_AS(Operator::unitary(bad), UnitarityError);
}

TEST_CASE("pure state norm is checked") {
  Vector v(2);
  v << 1, 0;
  CHECK(PureState(v).dim() == 2);
  v << 1, 1;
  CHECK_THROWS_AS(PureState{v}, ZeroVectorError);
}

TEST_CASE("tensor product layout and tag propagation") {
  const Operator x = Operator::hermitian(sigma_x());
  const Operator z = Operator::hermitian(sigma_z());
  const Operator xz = tensor(x, z);
  CHECK(xz.dim() == 4);
  CHECK(xz.is_hermitian());
  // (x (x) z)(0,2) couples |00> and |10>: sigma_x on the left slot.
  CHECK(xz.matrix()(0, 2) == Complex(1, 0));
  CHECK(xz.matrix()(1, 3) == Complex(-1, 0));
  CHECK(tensor(Operator::unitary(sigma_x()), Operator::unitary(sigma_z())).is_unitary());
}

TEST_CASE("commutator of pauli x and z") {
  const Operator c = commutator(Operator::hermitian(sigma_x()), Operator::hermitian(sigma_z()));
  // [sx, sz] = -2i sy = [[0, -2], [2, 0]]
  CHECK(std::abs(c.matrix()(0, 1) - Complex(-2, 0)) < 1e-15);
  CHECK(std::abs(c.matrix()(1, 0) - Complex(2, 0)) < 1e-15);
}

TEST_CASE("expectation and variance") {
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const PureState s(plus);
  const Operator x = Operator::hermitian(sigma_x());
  const Operator z = Operator::hermitian(sigma_z());
  CHECK(std::abs(expectation(x, s) - Complex(1, 0)) < 1e-12);
  CHECK(variance(x, s) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(variance(z, s) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(variance(Operator(Matrix(Complex(0, 1) * sigma_x())), s), HermiticityError);
}

TEST_CASE("projection and normalization") {
  Vector e0(2), v(2);
  e0 << 1, 0;
  v << 3, 4;
  const PureState s(e0);
  const Vector p = project_orthogonal(v, s);
  CHECK(std::abs(p(0)) < 1e-15);
  CHECK(std::abs(p(1) - Complex(4, 0)) < 1e-15);
  CHECK(normalize(v).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(normalize(Vector::Zero(2)), ZeroVectorError);
}

TEST_CASE("complement basis is orthonormal and complete") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = haar_random_state(5, rng);
    const auto basis = orthonormal_complement_basis(s);
    REQUIRE(basis.size() == 4);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(basis[i].amplitudes().dot(s.amplitudes())) < 1e-10);
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        CHECK(std::abs(basis[i].amplitudes().dot(basis[j].amplitudes())) < 1e-10);
      }
    }
    // Completeness: Parseval for a random vector.
    const PureState r = haar_random_state(5, rng);
    double sum = std::norm(s.amplitudes().dot(r.amplitudes()));
    for (const PureState& b : basis) sum += std::norm(b.amplitudes().dot(r.amplitudes()));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("rng determinism and sub-streams") {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.uniform() == b.uniform());
  Rng c = Rng(42).derive(1);
  Rng d = Rng(42).derive(2);
  CHECK(c.seed() != d.seed());
  CHECK(c.uniform() != d.uniform());
  // derive is a pure function of (seed, index)
  CHECK(Rng(42).derive(1).seed() == Rng(42).derive(1).seed());
}

TEST_CASE("normal sampler moments") {
  Rng rng(123);
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(sum2 / n - mean * mean - 1.0) < 0.02);
}

TEST_CASE("haar state overlap moment is 1/d") {
  Rng rng(7);
  const int n = 100000;
  const Eigen::Index d = 4;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += std::norm(haar_random_state(d, rng).amplitudes()(0));
  }
  CHECK(std::abs(sum / n - 0.25) < 0.01);
}

TEST_CASE("haar state overlap distribution matches Beta(1, d-1)") {
  // One-sample Kolmogorov-Smirnov against F(p) = 1 - (1-p)^(d-1),
  // 1% critical value 1.628 / sqrt(n).
  Rng rng(99);
  const int n = 10000;
  const int d = 4;
  std::vector<double> p(n);
  for (int k = 0; k < n; ++k) p[k] = std::norm(haar_random_state(d, rng).amplitudes()(0));
  std::sort(p.begin(), p.end());
  double stat = 0.0;
  for (int k = 0; k < n; ++k) {
    const double f = 1.0 - std::pow(1.0 - p[k], d - 1);
    stat = std::max(stat, std::abs(f - (k + 1.0) / n));
    stat = std::max(stat, std::abs(f - static_cast<double>(k) / n));
  }
  CHECK(stat < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("unitary invariance of haar states") {
  // |<e0|psi>|^2 and |<e0|V psi>|^2 must share a distribution for fixed
  // V; two-sample KS at the 1% level.
  Rng rng(5);
  const int n = 10000;
  const Operator v = random_unitary(4, rng);
  std::vector<double> a(n), b(n);
  for (int k = 0; k < n; ++k) {
    a[k] = std::norm(haar_random_state(4, rng).amplitudes()(0));
    b[k] = std::norm((v.matrix() * haar_random_state(4, rng).amplitudes())(0));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double stat = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    stat = std::max(stat, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / n));
  }
  CHECK(stat < 1.628 * std::sqrt(2.0 / n));
}

TEST_CASE("random unitary is unitary, random hermitian is hermitian") {
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const Operator u = random_unitary(4, rng);
    CHECK(u.is_unitary());
    CHECK((u.matrix().adjoint() * u.matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(random_hermitian(4, rng).is_hermitian());
  }
}
