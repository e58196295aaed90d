#pragma once

// Dense complex linear algebra and random-state machinery for small
// Hilbert spaces (d <= ~64). Everything is double precision; Hermiticity,
// unitarity and orthogonality attestations use an absolute tolerance of
// 1e-9.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kAttestTol = 1e-9;
inline constexpr double kZeroNormTol = 1e-12;
inline constexpr double kGramSchmidtResidualTol = 1e-8;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct HermiticityError : Error {
  using Error::Error;
};
struct UnitarityError : Error {
  using Error::Error;
};
struct ZeroVectorError : Error {
  using Error::Error;
};

/// Square complex matrix with optional Hermitian/unitary attestations.
/// Attestations are verified at construction time and then trusted.
class Operator {
 public:
  explicit Operator(Matrix m);

  /// Attests Hermiticity: ||m - m^dag||_max <= 1e-9 or throws.
  static Operator hermitian(Matrix m);
  /// Attests unitarity: ||m^dag m - I||_max <= 1e-9 or throws.
  static Operator unitary(Matrix m);

  Eigen::Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }
  bool is_hermitian() const { return hermitian_; }
  bool is_unitary() const { return unitary_; }

 private:
  Operator(Matrix m, bool herm, bool unit)
      : mat_(std::move(m)), hermitian_(herm), unitary_(unit) {}

  Matrix mat_;
  bool hermitian_ = false;
  bool unitary_ = false;
};

Operator operator*(const Operator& x, const Operator& y);
Operator operator+(const Operator& x, const Operator& y);
Operator operator-(const Operator& x, const Operator& y);
Operator operator*(Complex c, const Operator& x);
Operator operator*(double c, const Operator& x);

/// Unit-norm complex vector (norm checked to 1e-9 at construction).
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  Eigen::Index dim() const { return amp_.size(); }
  const Vector& amplitudes() const { return amp_; }

 private:
  Vector amp_;
};

/// Kronecker product, left factor on the system slot. Hermitian (x)
/// Hermitian is Hermitian; unitary (x) unitary is unitary.
Operator tensor(const Operator& x, const Operator& y);
Vector tensor(const Vector& x, const Vector& y);
PureState tensor(const PureState& x, const PureState& y);

Operator dagger(const Operator& x);

/// xy - yx. Throws DimensionError on mismatched dimensions.
Operator commutator(const Operator& x, const Operator& y);

/// <s|x|s>. Real within 1e-9 for Hermitian x.
Complex expectation(const Operator& x, const PureState& s);
Complex expectation(const Matrix& x, const Vector& s);

/// <x^2> - <x>^2 for Hermitian x; round-off negatives above -1e-12 are
/// clamped to 0. Throws HermiticityError for non-Hermitian input.
double variance(const Operator& x, const PureState& s);

/// (I - |s><s|) v. May return the zero vector.
Vector project_orthogonal(const Vector& v, const PureState& s);

/// v / ||v||. Throws ZeroVectorError when ||v|| <= 1e-12.
PureState normalize(const Vector& v);

/// d-1 states which together with s form an orthonormal basis.
/// Gram-Schmidt completion seeded from the standard basis; seed vectors
/// whose residual norm falls below 1e-8 are skipped.
std::vector<PureState> orthonormal_complement_basis(const PureState& s);

/// Deterministic pseudo-random stream with a 64-bit seed. Sub-streams are
/// derived by hashing (seed, index), so parallel tasks can each own an
/// independent, reproducible stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  Rng derive(std::uint64_t index) const;

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller (bit-deterministic across platforms).
  double normal();
  Complex normal_complex();

 private:
  std::uint64_t seed_;
  std::uint64_t state_;  // splitmix64 state
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
PureState haar_random_state(Eigen::Index d, Rng& rng);

/// Gaussian Hermitian ensemble sample, (z + z^dag)/2.
Operator random_hermitian(Eigen::Index d, Rng& rng);

/// Haar-random unitary: QR of a complex Gaussian matrix with the phase
/// correction Q <- Q diag(r_jj/|r_jj|).
Operator random_unitary(Eigen::Index d, Rng& rng);

}  // namespace edlab
