#include "eur/random.hpp"

#include <cmath>

namespace eur::random {

Matrix ginibre(std::size_t rows, std::size_t cols, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

Matrix unitary(std::size_t d, Engine& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

Matrix isometry(std::size_t in, std::size_t out, Engine& rng) {
  return unitary(out, rng).leftCols(static_cast<Eigen::Index>(in));
}

Matrix hermitian(std::size_t d, Engine& rng) {
  const Matrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

DensityMatrix density_matrix(const Dims& dims, Engine& rng, std::size_t rank) {
  const std::size_t n = product(dims);
  const Matrix g = ginibre(n, rank == 0 ? n : rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho), dims);
}

double uniform(double lo, double hi, Engine& rng) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace eur::random
