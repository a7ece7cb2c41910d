#include "eur/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eur/error.hpp"

namespace eur {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Dims strides_of(const Dims& dims) {
  Dims strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

// Flat-index contributions of every multi-index over `subset`, enumerated
// row-major with the first listed factor slowest.
std::vector<std::size_t> offsets_over(const Dims& dims, const Dims& strides,
                                      const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out{0};
  for (std::size_t f : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[f]);
    for (std::size_t base : out)
      for (std::size_t label = 0; label < dims[f]; ++label) next.push_back(base + label * strides[f]);
    out = std::move(next);
  }
  return out;
}

void check_dims(std::size_t n, const Dims& dims, const char* what) {
  if (dims.empty() || std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }))
    throw PreconditionError(std::string(what) + ": factor dims must be nonempty and positive");
  if (product(dims) != n)
    throw PreconditionError(std::string(what) + ": factor dims product " +
                            std::to_string(product(dims)) + " != dimension " + std::to_string(n));
}

Dims splice_dims(const Dims& dims, std::size_t target, const Dims& replacement) {
  Dims out(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(target));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), dims.begin() + static_cast<std::ptrdiff_t>(target) + 1, dims.end());
  return out;
}

struct TargetSplit {
  std::size_t left;
  std::size_t right;
};

TargetSplit split_at(const Dims& dims, std::size_t target, const Isometry& v) {
  if (target >= dims.size())
    throw PreconditionError("apply_isometry: target factor " + std::to_string(target) + " out of range");
  if (dims[target] != v.input_dim())
    throw PreconditionError("apply_isometry: isometry input dim " + std::to_string(v.input_dim()) +
                            " != factor dim " + std::to_string(dims[target]));
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < target; ++i) left *= dims[i];
  for (std::size_t i = target + 1; i < dims.size(); ++i) right *= dims[i];
  return {left, right};
}

void fix_phase(Vector& v) {
  double best = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= best - 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(std::abs(v(i)), 0.0);
      return;
    }
  }
}

}  // namespace

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Vector amplitudes, Dims factor_dims)
    : amplitudes_(std::move(amplitudes)), factor_dims_(std::move(factor_dims)) {
  check_dims(dim(), factor_dims_, "StateVector");
  double norm = amplitudes_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw PreconditionError("StateVector: zero or non-finite norm");
  amplitudes_ /= norm;
}

StateVector::StateVector(Vector amplitudes)
    : StateVector(amplitudes, Dims{static_cast<std::size_t>(amplitudes.size())}) {}

StateVector StateVector::basis(const Dims& factor_dims, std::span<const std::size_t> labels) {
  if (labels.size() != factor_dims.size())
    throw PreconditionError("StateVector::basis: one label per factor required");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= factor_dims[i]) throw PreconditionError("StateVector::basis: label out of range");
    flat = flat * factor_dims[i] + labels[i];
  }
  Vector v = Vector::Zero(idx(product(factor_dims)));
  v(idx(flat)) = 1.0;
  return StateVector(std::move(v), factor_dims);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries, Dims factor_dims)
    : entries_(std::move(entries)), factor_dims_(std::move(factor_dims)) {
  if (entries_.rows() != entries_.cols()) throw PreconditionError("DensityMatrix: matrix is not square");
  check_dims(dim(), factor_dims_, "DensityMatrix");
  if (!is_hermitian(entries_)) throw PreconditionError("DensityMatrix: matrix is not Hermitian");
  Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw PreconditionError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
}

DensityMatrix::DensityMatrix(Matrix entries)
    : DensityMatrix(entries, Dims{static_cast<std::size_t>(entries.rows())}) {}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const Vector& a = psi.amplitudes();
  Matrix m = a * a.adjoint();
  // Exact hermiticity regardless of rounding in the outer product.
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix(std::move(m), psi.factor_dims());
}

DensityMatrix DensityMatrix::maximally_mixed(const Dims& factor_dims) {
  std::size_t n = product(factor_dims);
  return DensityMatrix(Matrix::Identity(idx(n), idx(n)) / static_cast<double>(n), factor_dims);
}

void DensityMatrix::validate() const { (void)hermitian_spectrum(entries_, SpectrumKind::density); }

// ---------------------------------------------------------------------------
// Spectra

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix Spectrum::reconstruct() const {
  Eigen::Index n = eigenvalues.size();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector& v = eigenvectors[static_cast<std::size_t>(k)];
    out += eigenvalues(k) * (v * v.adjoint());
  }
  return out;
}

Spectrum hermitian_spectrum(const Matrix& m, SpectrumKind kind) {
  if (m.rows() != m.cols() || m.rows() == 0) throw PreconditionError("hermitian_spectrum: matrix must be square");
  if (!is_hermitian(m, 1e-10)) throw PreconditionError("hermitian_spectrum: matrix is not Hermitian");

  const Eigen::Index n = m.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw Error("hermitian_spectrum: eigensolver did not converge");

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.reserve(static_cast<std::size_t>(n));
  const RealVector& values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < n; ++k) out.eigenvalues(k) = values(n - 1 - k);

  const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
  const double gap_tol = 1e-9 * scale;

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.eigenvalues(stop - 1) - out.eigenvalues(stop) < gap_tol) ++stop;
    const Eigen::Index k = stop - start;

    if (k == 1) {
      Vector v = vectors.col(n - 1 - start);
      v.normalize();
      fix_phase(v);
      out.eigenvectors.push_back(std::move(v));
    } else {
      Matrix q(n, k);
      for (Eigen::Index j = 0; j < k; ++j) q.col(j) = vectors.col(n - 1 - (start + j));
      std::vector<Vector> accepted;
      for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(accepted.size()) < k; ++i) {
        Vector v = q * q.row(i).adjoint();  // projection of e_i onto the eigenspace
        for (int pass = 0; pass < 2; ++pass)
          for (const Vector& a : accepted) v -= a * a.dot(v);
        double norm = v.norm();
        if (norm < 1e-8) continue;
        v /= norm;
        accepted.push_back(std::move(v));
      }
      if (static_cast<Eigen::Index>(accepted.size()) != k)
        throw Error("hermitian_spectrum: degenerate eigenspace could not be re-spanned");
      for (Vector& v : accepted) {
        fix_phase(v);
        out.eigenvectors.push_back(std::move(v));
      }
    }
    start = stop;
  }

  if (kind == SpectrumKind::density) {
    for (Eigen::Index k = 0; k < n; ++k) {
      double& lambda = out.eigenvalues(k);
      if (lambda < -kPsdClamp) throw NotPositiveSemidefiniteError(lambda);
      if (lambda < 0.0) lambda = 0.0;
    }
  }
  return out;
}

Spectrum hermitian_spectrum(const DensityMatrix& rho) {
  return hermitian_spectrum(rho.entries(), SpectrumKind::density);
}

// ---------------------------------------------------------------------------
// Composition

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  Dims dims = a.factor_dims();
  dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  return StateVector(kron(a.amplitudes(), b.amplitudes()), std::move(dims));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.factor_dims();
  dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  return DensityMatrix(kron(a.entries(), b.entries()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const Dims& dims = rho.factor_dims();
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.back() >= dims.size() || kept.size() == dims.size())
    throw PreconditionError("partial_trace: keep must be a nonempty proper subset of factor indices");

  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);

  const Dims strides = strides_of(dims);
  const auto kept_off = offsets_over(dims, strides, kept);
  const auto traced_off = offsets_over(dims, strides, traced);

  const Matrix& m = rho.entries();
  const std::size_t nk = kept_off.size();
  Matrix out = Matrix::Zero(idx(nk), idx(nk));
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nk; ++b) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += m(idx(kept_off[a] + t), idx(kept_off[b] + t));
      out(idx(a), idx(b)) = sum;
    }

  Dims out_dims;
  for (std::size_t f : kept) out_dims.push_back(dims[f]);
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), std::move(out_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Isometries

Isometry::Isometry(Matrix matrix, Dims output_dims, std::vector<bool> supported_columns)
    : matrix_(std::move(matrix)), output_dims_(std::move(output_dims)), supported_(std::move(supported_columns)) {
  check_dims(output_dim(), output_dims_, "Isometry");
  if (supported_.empty()) supported_.assign(input_dim(), true);
  if (supported_.size() != input_dim()) throw PreconditionError("Isometry: support mask size != input dim");

  std::vector<Eigen::Index> cols;
  for (std::size_t j = 0; j < input_dim(); ++j)
    if (supported_[j]) cols.push_back(idx(j));
  Matrix sub(matrix_.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) sub.col(idx(j)) = matrix_.col(cols[j]);
  const Matrix gram = sub.adjoint() * sub;
  const double err = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-12) throw PreconditionError("Isometry: V^dagger V deviates from identity by " + std::to_string(err));
}

StateVector apply_isometry(const StateVector& state, const Isometry& v, std::size_t target) {
  const auto [left, right] = split_at(state.factor_dims(), target, v);
  const std::size_t din = v.input_dim(), dout = v.output_dim();
  const Vector& in = state.amplitudes();
  const Matrix& vm = v.matrix();

  for (std::size_t j = 0; j < din; ++j) {
    if (v.supports(j)) continue;
    for (std::size_t l = 0; l < left; ++l)
      for (std::size_t r = 0; r < right; ++r)
        if (std::abs(in(idx((l * din + j) * right + r))) > 1e-12)
          throw UnsupportedInputError("apply_isometry: state has support on an unsupported input level");
  }

  Vector out = Vector::Zero(idx(left * dout * right));
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t k = 0; k < dout; ++k)
      for (std::size_t j = 0; j < din; ++j) {
        const Complex c = vm(idx(k), idx(j));
        if (c == 0.0) continue;
        for (std::size_t r = 0; r < right; ++r)
          out(idx((l * dout + k) * right + r)) += c * in(idx((l * din + j) * right + r));
      }
  return StateVector(std::move(out), splice_dims(state.factor_dims(), target, v.output_dims()));
}

DensityMatrix apply_isometry(const DensityMatrix& rho, const Isometry& v, std::size_t target) {
  const auto [left, right] = split_at(rho.factor_dims(), target, v);
  const std::size_t din = v.input_dim();

  for (std::size_t j = 0; j < din; ++j) {
    if (v.supports(j)) continue;
    for (std::size_t l = 0; l < left; ++l)
      for (std::size_t r = 0; r < right; ++r) {
        const std::size_t i = (l * din + j) * right + r;
        if (std::abs(rho(i, i)) > 1e-12)
          throw UnsupportedInputError("apply_isometry: state has support on an unsupported input level");
      }
  }

  const Matrix w = kron(Matrix::Identity(idx(left), idx(left)),
                        kron(v.matrix(), Matrix::Identity(idx(right), idx(right))));
  Matrix out = w * rho.entries() * w.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), splice_dims(rho.factor_dims(), target, v.output_dims()));
}

}  // namespace eur
