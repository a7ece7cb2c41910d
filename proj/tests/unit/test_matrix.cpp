#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "eur/error.hpp"
#include "eur/horizon.hpp"
#include "eur/matrix.hpp"
#include "eur/measurement.hpp"
#include "eur/random.hpp"

using namespace eur;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

// Characteristic polynomial det(lambda I - m) of a 4x4 matrix by Laplace
// expansion; used as an oracle independent of the eigensolver.
Complex det4(const Matrix& a) {
  auto det3 = [&](int skip_row, int skip_col) {
    std::array<int, 3> r{}, c{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != skip_row) r[k++] = i;
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != skip_col) c[k++] = j;
    auto e = [&](int i, int j) { return a(r[i], c[j]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  Complex d = 0.0;
  for (int j = 0; j < 4; ++j) d += (j % 2 == 0 ? 1.0 : -1.0) * a(0, j) * det3(0, j);
  return d;
}

}  // namespace

TEST_CASE("tensor_product of maximally mixed qubits is maximally mixed") {
  const auto half = DensityMatrix::maximally_mixed({2});
  const auto prod = tensor_product(half, half);
  CHECK(prod.factor_dims() == Dims{2, 2});
  CHECK(max_abs(prod.entries() - Matrix::Identity(4, 4) / 4.0) == doctest::Approx(0.0));
}

TEST_CASE("tensor_product follows left-slowest indexing") {
  const std::array<std::size_t, 1> vac{0}, up{1};
  const auto ket = tensor_product(StateVector::basis({4}, vac), StateVector::basis({4}, up));
  CHECK(ket.factor_dims() == Dims{4, 4});
  CHECK(std::abs(ket[1] - 1.0) < 1e-15);
  CHECK(ket.amplitudes().norm() == doctest::Approx(1.0));

  const auto d = tensor_product(DensityMatrix(diag({1, 0})), DensityMatrix(diag({0, 1})));
  CHECK(max_abs(d.entries() - diag({0, 1, 0, 0})) < 1e-15);
}

TEST_CASE("StateVector normalizes and rejects bad input") {
  Vector v(2);
  v << 3.0, 4.0;
  const StateVector s(v);
  CHECK(s.amplitudes().squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(StateVector(Vector::Zero(3)), PreconditionError);
  CHECK_THROWS_AS(StateVector(Vector::Ones(6), Dims{4, 2}), PreconditionError);
}

TEST_CASE("DensityMatrix rejects non-Hermitian and non-unit-trace input") {
  Matrix m = diag({0.5, 0.5});
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{m}, PreconditionError);
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.6})), PreconditionError);
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.5}), Dims{3}), PreconditionError);
  CHECK_THROWS_AS(DensityMatrix(diag({1.2, -0.2})).validate(), NotPositiveSemidefiniteError);
}

TEST_CASE("partial_trace reduces products and entangled states") {
  random::Engine rng(11);
  const auto a = random::density_matrix({4}, rng);
  const auto b = random::density_matrix({4}, rng);
  CHECK(max_abs(partial_trace(tensor_product(a, b), {0}).entries() - a.entries()) < 1e-12);
  CHECK(max_abs(partial_trace(tensor_product(a, b), {1}).entries() - b.entries()) < 1e-12);

  const auto phi = DensityMatrix::from_pure(state_bell_like());
  CHECK(max_abs(partial_trace(phi, {0}).entries() - diag({0.5, 0.5, 0, 0})) < 1e-15);

  const auto w_a = partial_trace(state_w_traced(), {0});
  const auto spec = hermitian_spectrum(w_a);
  CHECK(spec.eigenvalues(0) == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(spec.eigenvalues(1) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(std::abs(spec.eigenvalues(2)) < 1e-14);
  CHECK(std::abs(spec.eigenvalues(3)) < 1e-14);
}

TEST_CASE("partial_trace keeps factors in ascending order and preserves trace") {
  random::Engine rng(5);
  const auto rho = random::density_matrix({2, 3, 2}, rng);
  const std::array<std::size_t, 2> keep{2, 0};
  const auto red = partial_trace(rho, keep);
  CHECK(red.factor_dims() == Dims{2, 2});
  CHECK(std::abs(red.entries().trace() - 1.0) < 1e-12);
}

TEST_CASE("partial_trace rejects invalid index sets") {
  const auto rho = DensityMatrix::maximally_mixed({2, 2});
  CHECK_THROWS_AS(partial_trace(rho, {}), PreconditionError);
  CHECK_THROWS_AS(partial_trace(rho, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(partial_trace(rho, {2}), PreconditionError);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), PreconditionError);
}

TEST_CASE("hermitian_spectrum of sigma_z and the identity") {
  const auto sz = spin_observables()[2].matrix;
  const auto s = hermitian_spectrum(sz);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.5));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.5));
  CHECK(s.eigenvalues(2) == doctest::Approx(-0.5));
  CHECK(s.eigenvalues(3) == doctest::Approx(-1.5));

  const auto id = hermitian_spectrum(Matrix::Identity(4, 4) / 4.0);
  for (int k = 0; k < 4; ++k) {
    CHECK(id.eigenvalues(k) == doctest::Approx(0.25));
    // Degenerate space is re-spanned by the standard basis in order.
    CHECK(std::abs(id.eigenvectors[static_cast<std::size_t>(k)](k) - 1.0) < 1e-12);
  }
}

TEST_CASE("hermitian_spectrum of sigma_x matches characteristic-polynomial roots") {
  const auto sx = spin_observables()[0].matrix;
  const double expected[] = {1.5, 0.5, -0.5, -1.5};
  // Oracle: the expected values are roots of det(lambda I - sigma_x).
  for (double lambda : expected)
    CHECK(std::abs(det4(lambda * Matrix::Identity(4, 4) - sx)) < 1e-12);
  const auto s = hermitian_spectrum(sx);
  for (int k = 0; k < 4; ++k) CHECK(s.eigenvalues(k) == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("hermitian_spectrum clamps tiny negatives only for density matrices") {
  Matrix m = diag({0.5, 0.5 + 5e-11, -5e-11, 0.0});
  const auto s = hermitian_spectrum(m, SpectrumKind::density);
  CHECK(s.eigenvalues.minCoeff() == 0.0);
  CHECK(hermitian_spectrum(m).eigenvalues.minCoeff() < 0.0);

  Matrix bad = diag({0.5, 0.6, -0.1, 0.0});
  CHECK_THROWS_AS(hermitian_spectrum(bad, SpectrumKind::density), NotPositiveSemidefiniteError);
  CHECK_NOTHROW(hermitian_spectrum(bad));

  Matrix nonherm = Matrix::Zero(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_spectrum(nonherm), PreconditionError);
}

TEST_CASE("hermitian_spectrum fixes eigenvector phases") {
  random::Engine rng(3);
  const Matrix h = random::hermitian(6, rng);
  const auto s = hermitian_spectrum(h);
  for (std::size_t k = 0; k < 6; ++k) {
    Eigen::Index best;
    s.eigenvectors[k].cwiseAbs().maxCoeff(&best);
    CHECK(std::abs(s.eigenvectors[k](best).imag()) < 1e-15);
    CHECK(s.eigenvectors[k](best).real() > 0.0);
  }
}

TEST_CASE("property: spectrum reconstruction and orthonormality") {
  random::Engine rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = trial % 2 == 0 ? 4 : 16;
    const Matrix h = random::hermitian(d, rng);
    const auto s = hermitian_spectrum(h);
    CHECK(max_abs(s.reconstruct() - h) < 1e-10);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        CHECK(std::abs(s.eigenvectors[j].dot(s.eigenvectors[k]) - (j == k ? 1.0 : 0.0)) < 1e-10);
    for (std::size_t k = 1; k < d; ++k) CHECK(s.eigenvalues(static_cast<Eigen::Index>(k - 1)) >= s.eigenvalues(static_cast<Eigen::Index>(k)));
  }
}

TEST_CASE("property: tensor product is associative") {
  random::Engine rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random::density_matrix({2}, rng);
    const auto b = random::density_matrix({3}, rng);
    const auto c = random::density_matrix({2}, rng);
    const auto left = tensor_product(tensor_product(a, b), c);
    const auto right = tensor_product(a, tensor_product(b, c));
    CHECK(max_abs(left.entries() - right.entries()) < 1e-14);
    CHECK(left.factor_dims() == right.factor_dims());
  }
}

TEST_CASE("apply_isometry: identity, embedding, Bogoliubov vacuum") {
  const std::array<std::size_t, 1> vac{0};
  const auto ket0 = StateVector::basis({4}, vac);

  const Isometry id(Matrix::Identity(4, 4), {4});
  CHECK((apply_isometry(ket0, id, 0).amplitudes() - ket0.amplitudes()).norm() < 1e-15);

  Matrix embed = Matrix::Zero(16, 4);
  for (Eigen::Index b = 0; b < 4; ++b) embed(b * 4, b) = 1.0;
  const Isometry e(embed, {4, 4});
  const auto rho = apply_isometry(DensityMatrix::from_pure(ket0), e, 0);
  CHECK(rho.factor_dims() == Dims{4, 4});
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(rho.entries().trace() - 1.0) < 1e-12);

  const auto out = apply_isometry(ket0, mode_isometry(std::numbers::pi / 4).isometry, 0);
  CHECK(std::abs(out[0] - 0.5) < 1e-15);
}

TEST_CASE("apply_isometry rejects non-isometries and wrong targets") {
  CHECK_THROWS_AS(Isometry(2.0 * Matrix::Identity(4, 4), {4}), PreconditionError);
  CHECK_THROWS_AS(Isometry(Matrix::Identity(4, 4), {3}), PreconditionError);
  const Isometry id(Matrix::Identity(2, 2), {2});
  const auto rho = DensityMatrix::maximally_mixed({4});
  CHECK_THROWS_AS(apply_isometry(rho, id, 0), PreconditionError);
  CHECK_THROWS_AS(apply_isometry(rho, id, 3), PreconditionError);
}

TEST_CASE("property: isometries preserve trace and norm") {
  random::Engine rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rho = random::density_matrix({4, 4}, rng);
    const Isometry v(random::isometry(4, 12, rng), {3, 4});
    const auto out = apply_isometry(rho, v, trial % 2);
    CHECK(std::abs(out.entries().trace() - 1.0) < 1e-12);
    CHECK(out.num_factors() == 3);

    const StateVector psi(random::ginibre(16, 1, rng).col(0), Dims{4, 4});
    CHECK(std::abs(apply_isometry(psi, v, 1).amplitudes().norm() - 1.0) < 1e-12);
  }
}
