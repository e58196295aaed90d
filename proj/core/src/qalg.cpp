#include "edlab/qalg.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace edlab {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void require_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("operator matrix must be square and non-empty");
  }
}

// splitmix64 step; also used as the (seed, index) mixing hash.
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Operator::Operator(Matrix m) : mat_(std::move(m)) { require_square(mat_); }

Operator Operator::hermitian(Matrix m) {
  require_square(m);
  if (max_abs(m - m.adjoint()) > kAttestTol) {
    throw HermiticityError("matrix is not Hermitian within 1e-9");
  }
  return Operator(std::move(m), true, false);
}

Operator Operator::unitary(Matrix m) {
  require_square(m);
  Matrix gram = m.adjoint() * m;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > kAttestTol) {
    throw UnitarityError("matrix is not unitary within 1e-9");
  }
  return Operator(std::move(m), false, true);
}

Operator operator*(const Operator& x, const Operator& y) {
  if (x.dim() != y.dim()) throw DimensionError("operator product: dimension mismatch");
  return Operator(x.matrix() * y.matrix());
}

Operator operator+(const Operator& x, const Operator& y) {
  if (x.dim() != y.dim()) throw DimensionError("operator sum: dimension mismatch");
  return Operator(x.matrix() + y.matrix());
}

Operator operator-(const Operator& x, const Operator& y) {
  if (x.dim() != y.dim()) throw DimensionError("operator difference: dimension mismatch");
  return Operator(x.matrix() - y.matrix());
}

Operator operator*(Complex c, const Operator& x) { return Operator(c * x.matrix()); }
Operator operator*(double c, const Operator& x) { return Operator(c * x.matrix()); }

PureState::PureState(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() < 1) throw DimensionError("state must have dimension >= 1");
  if (std::abs(amp_.norm() - 1.0) > kAttestTol) {
    throw ZeroVectorError("state norm deviates from 1 beyond 1e-9");
  }
}

Operator tensor(const Operator& x, const Operator& y) {
  const Matrix& a = x.matrix();
  const Matrix& b = y.matrix();
  const Eigen::Index da = a.rows(), db = b.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  if (x.is_hermitian() && y.is_hermitian()) return Operator::hermitian(std::move(out));
  if (x.is_unitary() && y.is_unitary()) return Operator::unitary(std::move(out));
  return Operator(std::move(out));
}

Vector tensor(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return out;
}

PureState tensor(const PureState& x, const PureState& y) {
  return PureState(tensor(x.amplitudes(), y.amplitudes()));
}

Operator dagger(const Operator& x) { return Operator(x.matrix().adjoint()); }

Operator commutator(const Operator& x, const Operator& y) {
  if (x.dim() != y.dim()) throw DimensionError("commutator: dimension mismatch");
  return Operator(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

Complex expectation(const Matrix& x, const Vector& s) {
  if (x.rows() != s.size()) throw DimensionError("expectation: dimension mismatch");
  return s.dot(x * s);
}

Complex expectation(const Operator& x, const PureState& s) {
  return expectation(x.matrix(), s.amplitudes());
}

double variance(const Operator& x, const PureState& s) {
  const Matrix& m = x.matrix();
  if (!x.is_hermitian() && max_abs(m - m.adjoint()) > kAttestTol) {
    throw HermiticityError("variance requires a Hermitian operator");
  }
  const Vector xs = m * s.amplitudes();
  const double second = xs.squaredNorm();  // <x^2> for Hermitian x
  const double mean = std::real(s.amplitudes().dot(xs));
  double v = second - mean * mean;
  if (v < 0.0) {
    if (v < -kZeroNormTol) {
      throw Error("variance came out negative beyond round-off: " + std::to_string(v));
    }
    v = 0.0;
  }
  return v;
}

Vector project_orthogonal(const Vector& v, const PureState& s) {
  if (v.size() != s.dim()) throw DimensionError("project_orthogonal: dimension mismatch");
  return v - s.amplitudes().dot(v) * s.amplitudes();
}

PureState normalize(const Vector& v) {
  const double n = v.norm();
  if (n <= kZeroNormTol) throw ZeroVectorError("cannot normalize a (near-)zero vector");
  return PureState(v / n);
}

std::vector<PureState> orthonormal_complement_basis(const PureState& s) {
  const Eigen::Index d = s.dim();
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(d));
  basis.push_back(s.amplitudes());
  for (Eigen::Index k = 0; k < d && std::ssize(basis) < d; ++k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    for (const Vector& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n < kGramSchmidtResidualTol) continue;
    basis.push_back(v / n);
  }
  std::vector<PureState> out;
  out.reserve(static_cast<std::size_t>(d - 1));
  for (std::size_t k = 1; k < basis.size(); ++k) out.emplace_back(std::move(basis[k]));
  return out;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(seed) {
  // Warm the state so that seed 0 does not start at the raw zero state.
  std::uint64_t s = state_;
  splitmix64(s);
  state_ = s;
}

Rng Rng::derive(std::uint64_t index) const {
  std::uint64_t h = seed_ ^ (0x9e3779b97f4a7c15ULL + index);
  std::uint64_t mixed = splitmix64(h);
  std::uint64_t mixed2 = mixed ^ index;
  return Rng(splitmix64(mixed2));
}

double Rng::uniform() {
  std::uint64_t s = state_;
  const std::uint64_t bits = splitmix64(s);
  state_ = s;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  const double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::normal_complex() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

PureState haar_random_state(Eigen::Index d, Rng& rng) {
  if (d < 1) throw DimensionError("haar_random_state: d must be >= 1");
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.normal_complex();
  return normalize(v);
}

Operator random_hermitian(Eigen::Index d, Rng& rng) {
  if (d < 1) throw DimensionError("random_hermitian: d must be >= 1");
  Matrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = rng.normal_complex();
  return Operator::hermitian((z + z.adjoint()) / 2.0);
}

Operator random_unitary(Eigen::Index d, Rng& rng) {
  if (d < 1) throw DimensionError("random_unitary: d must be >= 1");
  Matrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = rng.normal_complex() / std::numbers::sqrt2;
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rj = r(j, j);
    q.col(j) *= rj / std::abs(rj);
  }
  return Operator::unitary(std::move(q));
}

}  // namespace edlab
