#pragma once

// Dense complex linear algebra for small composite quantum systems.
//
// Composite indexing is row-major with the left factor varying slowest:
// for factor dims (d0, d1, ..., dn) the basis label (i0, i1, ..., in) maps to
// ((i0 * d1 + i1) * d2 + i2) ...

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eur {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdClamp = 1e-10;

std::size_t product(const Dims& dims);

/// Normalized ket over a composite space.
class StateVector {
 public:
  /// Normalizes `amplitudes`; throws PreconditionError on zero norm or when
  /// the product of `factor_dims` differs from the vector length.
  StateVector(Vector amplitudes, Dims factor_dims);
  /// Single-factor convenience constructor.
  explicit StateVector(Vector amplitudes);

  static StateVector basis(const Dims& factor_dims, std::span<const std::size_t> labels);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  const Dims& factor_dims() const noexcept { return factor_dims_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  Vector amplitudes_;
  Dims factor_dims_;
};

/// Hermitian, unit-trace matrix with subsystem bookkeeping.
///
/// Construction checks hermiticity and trace. Positivity is checked when the
/// spectrum is taken (see hermitian_spectrum), or eagerly via validate().
class DensityMatrix {
 public:
  DensityMatrix(Matrix entries, Dims factor_dims);
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(const Dims& factor_dims);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const noexcept { return entries_; }
  const Dims& factor_dims() const noexcept { return factor_dims_; }
  std::size_t num_factors() const noexcept { return factor_dims_.size(); }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Full check including positive semidefiniteness.
  void validate() const;

 private:
  Matrix entries_;
  Dims factor_dims_;
};

struct Spectrum {
  RealVector eigenvalues;             // descending
  std::vector<Vector> eigenvectors;   // paired with eigenvalues, orthonormal

  Matrix reconstruct() const;
};

enum class SpectrumKind { general, density };

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues come back sorted in descending order. Degenerate eigenspaces
/// are re-spanned by Gram-Schmidt on the standard basis vectors in index
/// order, and each eigenvector's largest-magnitude component is made real
/// and positive, so the output does not depend on the backend's choices.
/// With SpectrumKind::density, eigenvalues in [-1e-10, 0) are clamped to 0
/// and anything more negative throws NotPositiveSemidefiniteError.
Spectrum hermitian_spectrum(const Matrix& m, SpectrumKind kind = SpectrumKind::general);
Spectrum hermitian_spectrum(const DensityMatrix& rho);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

Matrix kron(const Matrix& a, const Matrix& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduces `rho` onto the factors listed in `keep` (kept in ascending order).
/// `keep` must be a nonempty proper subset of the factor indices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Isometry V: C^in -> C^out whose output space is itself a composite of
/// `output_dims`. Input columns flagged unsupported are excluded from the
/// isometry condition, and states with weight on them are rejected on use.
class Isometry {
 public:
  Isometry(Matrix matrix, Dims output_dims, std::vector<bool> supported_columns = {});

  const Matrix& matrix() const noexcept { return matrix_; }
  const Dims& output_dims() const noexcept { return output_dims_; }
  const std::vector<bool>& supported_columns() const noexcept { return supported_; }
  std::size_t input_dim() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }
  std::size_t output_dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  bool supports(std::size_t column) const { return supported_.at(column); }

 private:
  Matrix matrix_;
  Dims output_dims_;
  std::vector<bool> supported_;
};

/// Applies V to factor `target`, replacing it by V's output factors in place.
/// Throws UnsupportedInputError when the state has weight on an unsupported
/// input column of V.
StateVector apply_isometry(const StateVector& state, const Isometry& v, std::size_t target);
DensityMatrix apply_isometry(const DensityMatrix& rho, const Isometry& v, std::size_t target);

}  // namespace eur
