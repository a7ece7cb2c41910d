#include "eur/horizon.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "eur/error.hpp"

namespace eur {

HorizonParams HorizonParams::from_ratios(double omega, double r0) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("Omega must be > 0");
  if (!(r0 >= 1.0) || !std::isfinite(r0)) throw DomainError("R0 must be >= 1");
  return HorizonParams(omega, r0, std::nullopt);
}

HorizonParams HorizonParams::from_physical(double mass, double frequency, double radius) {
  if (!(mass > 0.0)) throw DomainError("mass must be > 0");
  if (!(frequency > 0.0)) throw DomainError("frequency must be > 0");
  const double omega = 8.0 * std::numbers::pi * frequency * mass;
  const double r0 = radius / (2.0 * mass);
  HorizonParams p = from_ratios(omega, r0);
  p.physical_ = Physical{mass, frequency, radius};
  return p;
}

double dilation_angle(double omega, double r0) {
  return dilation_angle(HorizonParams::from_ratios(omega, r0));
}

double dilation_angle(const HorizonParams& p) {
  return std::atan(std::exp(-0.5 * p.omega() * std::sqrt(1.0 - 1.0 / p.r0())));
}

BogoliubovMap mode_isometry(double q) {
  if (!(q >= 0.0 && q <= std::numbers::pi / 4 + 1e-15))
    throw DomainError("dilation angle must lie in [0, pi/4], got " + std::to_string(q));

  const double c = std::cos(q), s = std::sin(q);
  constexpr std::size_t d = kModeDim;
  auto row = [](DiracLevel rob, DiracLevel anti_rob) { return static_cast<Eigen::Index>(level(rob) * d + level(anti_rob)); };
  auto col = [](DiracLevel l) { return static_cast<Eigen::Index>(level(l)); };
  using L = DiracLevel;

  Matrix v = Matrix::Zero(d * d, d);
  // |0>_H
  v(row(L::vacuum, L::vacuum), col(L::vacuum)) = c * c;
  v(row(L::up, L::down), col(L::vacuum)) = s * c;
  v(row(L::down, L::up), col(L::vacuum)) = s * c;
  v(row(L::pair, L::pair), col(L::vacuum)) = s * s;
  // |up>_H
  v(row(L::up, L::vacuum), col(L::up)) = c;
  v(row(L::pair, L::up), col(L::up)) = s;
  // |down>_H
  v(row(L::down, L::vacuum), col(L::down)) = c;
  v(row(L::pair, L::down), col(L::down)) = -s;

  return BogoliubovMap{q, Isometry(std::move(v), Dims{d, d}, {true, true, true, false})};
}

DensityMatrix transform_memory(const DensityMatrix& rho, std::size_t target, double q) {
  if (target >= rho.num_factors() || rho.factor_dims()[target] != kModeDim)
    throw PreconditionError("transform_memory: target must be a four-level Dirac mode");
  const BogoliubovMap map = mode_isometry(q);
  const DensityMatrix extended = apply_isometry(rho, map.isometry, target);

  // Region IV sits right after region I at position target + 1.
  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < extended.num_factors(); ++f)
    if (f != target + 1) keep.push_back(f);
  return partial_trace(extended, keep);
}

DensityMatrix transform_memory(const DensityMatrix& rho, std::size_t target, const HorizonParams& p) {
  return transform_memory(rho, target, dilation_angle(p));
}

DensityMatrix transform_memory(const StateVector& psi, std::size_t target, const HorizonParams& p) {
  return transform_memory(DensityMatrix::from_pure(psi), target, dilation_angle(p));
}

StateVector state_bell_like() {
  using L = DiracLevel;
  const Dims dims{kModeDim, kModeDim};
  Vector v = Vector::Zero(16);
  v(static_cast<Eigen::Index>(level(L::vacuum) * kModeDim + level(L::vacuum))) = 1.0;
  v(static_cast<Eigen::Index>(level(L::up) * kModeDim + level(L::down))) = 1.0;
  return StateVector(std::move(v), dims);
}

StateVector state_w() {
  using L = DiracLevel;
  const Dims dims{kModeDim, kModeDim, kModeDim};
  const std::array<std::array<L, 3>, 3> terms{{
      {L::vacuum, L::vacuum, L::up},
      {L::vacuum, L::up, L::vacuum},
      {L::up, L::vacuum, L::vacuum},
  }};
  Vector v = Vector::Zero(64);
  for (const auto& t : terms)
    v(static_cast<Eigen::Index>((level(t[0]) * kModeDim + level(t[1])) * kModeDim + level(t[2]))) = 1.0;
  return StateVector(std::move(v), dims);
}

DensityMatrix state_w_traced() { return partial_trace(DensityMatrix::from_pure(state_w()), {0, 1}); }

}  // namespace eur
