#include "eur/measurement.hpp"

#include <cmath>
#include <utility>

#include "eur/error.hpp"

namespace eur {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_measurable(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured) {
  if (rho_ab.num_factors() != 2) throw PreconditionError("measurement: expected a bipartite state");
  if (measured > 1) throw PreconditionError("measurement: measured factor must be 0 or 1");
  if (rho_ab.factor_dims()[measured] != basis.dim())
    throw PreconditionError("measurement: basis dim " + std::to_string(basis.dim()) + " != factor dim " +
                            std::to_string(rho_ab.factor_dims()[measured]));
}

// <u| rho_ab |u> on the measured factor, left unnormalized.
Matrix conditional_block(const DensityMatrix& rho_ab, const Vector& u, std::size_t measured) {
  const std::size_t dm = rho_ab.factor_dims()[measured];
  const std::size_t dk = rho_ab.factor_dims()[1 - measured];
  auto flat = [&](std::size_t m, std::size_t k) { return measured == 0 ? m * dk + k : k * dm + m; };

  Matrix out = Matrix::Zero(idx(dk), idx(dk));
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < dm; ++i) {
        const Complex ui = std::conj(u(idx(i)));
        if (ui == 0.0) continue;
        for (std::size_t j = 0; j < dm; ++j) sum += ui * rho_ab(flat(i, a), flat(j, b)) * u(idx(j));
      }
      out(idx(a), idx(b)) = sum;
    }
  return out;
}

}  // namespace

Observable::Observable(std::string n, Matrix m) : name(std::move(n)), matrix(std::move(m)) {
  if (!is_hermitian(matrix)) throw PreconditionError("Observable " + name + ": matrix is not Hermitian");
}

std::array<Observable, 3> spin_observables() {
  const double r3 = std::sqrt(3.0);
  const Complex i(0.0, 1.0);

  Matrix sx(4, 4), sy(4, 4), sz(4, 4);
  // clang-format off
  sx << 0,  r3, 0,  0,
        r3, 0,  2,  0,
        0,  2,  0,  r3,
        0,  0,  r3, 0;
  sy << 0,       -i * r3, 0,       0,
        i * r3,  0,       -2.0 * i, 0,
        0,       2.0 * i, 0,       -i * r3,
        0,       0,       i * r3,  0;
  sz << 3, 0, 0,  0,
        0, 1, 0,  0,
        0, 0, -1, 0,
        0, 0, 0,  -3;
  // clang-format on
  return {Observable("x", 0.5 * sx), Observable("y", 0.5 * sy), Observable("z", 0.5 * sz)};
}

Observable spin_observable(const std::string& label) {
  for (auto& obs : spin_observables())
    if (obs.name == label) return obs;
  throw PreconditionError("unknown observable '" + label + "' (expected x, y or z)");
}

ProjectiveBasis::ProjectiveBasis(std::vector<Vector> vectors, std::string source)
    : vectors_(std::move(vectors)), source_(std::move(source)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw PreconditionError("ProjectiveBasis: empty basis");
  for (std::size_t j = 0; j < d; ++j) {
    if (static_cast<std::size_t>(vectors_[j].size()) != d)
      throw PreconditionError("ProjectiveBasis: need d vectors of dimension d");
    for (std::size_t k = 0; k <= j; ++k) {
      const Complex overlap = vectors_[k].dot(vectors_[j]);
      if (std::abs(overlap - (j == k ? 1.0 : 0.0)) > 1e-10)
        throw PreconditionError("ProjectiveBasis: vectors are not orthonormal");
    }
  }
}

ProjectiveBasis ProjectiveBasis::from_unitary(const Matrix& u, std::string source) {
  std::vector<Vector> cols;
  for (Eigen::Index j = 0; j < u.cols(); ++j) cols.emplace_back(u.col(j));
  return ProjectiveBasis(std::move(cols), std::move(source));
}

ProjectiveBasis eigenbasis(const Observable& obs) {
  Spectrum s = hermitian_spectrum(obs.matrix);
  return ProjectiveBasis(std::move(s.eigenvectors), obs.name);
}

OverlapTable overlap_table(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  if (b1.dim() != b2.dim()) throw PreconditionError("overlap_table: basis dimensions differ");
  const std::size_t d = b1.dim();
  OverlapTable t{Eigen::MatrixXd(idx(d), idx(d)), 0.0};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) t.c(idx(j), idx(k)) = std::norm(b1[j].dot(b2[k]));
  t.c1 = t.c.maxCoeff();
  return t;
}

MeasuredEnsemble measure_ensemble(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured) {
  require_measurable(rho_ab, basis, measured);
  const Dims memory_dims{rho_ab.factor_dims()[1 - measured]};

  std::vector<double> probs;
  std::vector<std::optional<DensityMatrix>> states;
  for (const Vector& u : basis.vectors()) {
    Matrix block = conditional_block(rho_ab, u, measured);
    const double p = block.trace().real();
    probs.push_back(p);
    if (p < kZeroOutcome) {
      states.emplace_back(std::nullopt);
      continue;
    }
    block /= p;
    block = (0.5 * (block + block.adjoint())).eval();
    states.emplace_back(DensityMatrix(std::move(block), memory_dims));
  }
  return MeasuredEnsemble{ProbDist(std::move(probs)), std::move(states)};
}

DensityMatrix classical_quantum_state(const MeasuredEnsemble& ens, const ProjectiveBasis& basis) {
  const auto& p = ens.outcome_probs.probabilities();
  if (p.size() != basis.dim() || ens.conditional_states.size() != basis.dim())
    throw PreconditionError("classical_quantum_state: ensemble and basis sizes differ");

  std::size_t dk = 0;
  for (const auto& s : ens.conditional_states)
    if (s) dk = s->dim();
  if (dk == 0) throw PreconditionError("classical_quantum_state: ensemble has no populated outcome");

  const std::size_t d = basis.dim();
  Matrix out = Matrix::Zero(idx(d * dk), idx(d * dk));
  for (std::size_t j = 0; j < d; ++j) {
    if (!ens.conditional_states[j]) continue;
    const Vector& u = basis[j];
    out += p[j] * kron(u * u.adjoint(), ens.conditional_states[j]->entries());
  }
  // Drop the weight of skipped outcomes so the trace stays exactly 1.
  out /= out.trace().real();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), Dims{d, dk});
}

DensityMatrix dephase(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured) {
  require_measurable(rho_ab, basis, measured);
  const std::size_t dk = rho_ab.factor_dims()[1 - measured];
  const Matrix id = Matrix::Identity(idx(dk), idx(dk));

  Matrix out = Matrix::Zero(rho_ab.entries().rows(), rho_ab.entries().cols());
  for (const Vector& u : basis.vectors()) {
    const Matrix proj = u * u.adjoint();
    const Matrix p = measured == 0 ? kron(proj, id) : kron(id, proj);
    out += p * rho_ab.entries() * p;
  }
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), rho_ab.factor_dims());
}

ProbDist outcome_distribution(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  if (rho.dim() != basis.dim()) throw PreconditionError("outcome_distribution: dimension mismatch");
  std::vector<double> p;
  for (const Vector& u : basis.vectors()) p.push_back(u.dot(rho.entries() * u).real());
  return ProbDist(std::move(p));
}

double outcome_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  return shannon_entropy(outcome_distribution(rho, basis));
}

double holevo_quantity(const MeasuredEnsemble& ens, const DensityMatrix& rho_b) {
  double average = 0.0;
  const auto& p = ens.outcome_probs.probabilities();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (ens.conditional_states[j]) average += p[j] * von_neumann_entropy(*ens.conditional_states[j]);
  return von_neumann_entropy(rho_b) - average;
}

double holevo_quantity(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured) {
  const MeasuredEnsemble ens = measure_ensemble(rho_ab, basis, measured);
  return holevo_quantity(ens, partial_trace(rho_ab, {1 - measured}));
}

}  // namespace eur
