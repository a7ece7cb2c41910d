#pragma once

// Near-horizon Schwarzschild physics for single Dirac modes: the
// Hartle-Hawking -> Boulware Bogoliubov map and the example states.

#include <cstddef>
#include <optional>

#include "eur/matrix.hpp"

namespace eur {

/// Occupation levels of one Dirac frequency mode, in global basis order.
enum class DiracLevel : std::size_t { vacuum = 0, up = 1, down = 2, pair = 3 };

inline constexpr std::size_t kModeDim = 4;

constexpr std::size_t level(DiracLevel l) noexcept { return static_cast<std::size_t>(l); }

/// Horizon parameters in dimensionless form: omega = w / T_H and r0 = r0 / 2M.
class HorizonParams {
 public:
  struct Physical {
    double mass;
    double frequency;
    double radius;
  };

  /// Throws DomainError unless omega > 0 and r0 >= 1.
  static HorizonParams from_ratios(double omega, double r0);
  /// Geometric units: omega = 8 pi w M, r0 = r / 2M.
  static HorizonParams from_physical(double mass, double frequency, double radius);

  double omega() const noexcept { return omega_; }
  double r0() const noexcept { return r0_; }
  const std::optional<Physical>& physical() const noexcept { return physical_; }

  /// True outside the near-horizon (Rindler) regime, R0 > 1.05.
  bool outside_rindler_regime() const noexcept { return r0_ > kRindlerLimit; }

  static constexpr double kRindlerLimit = 1.05;

 private:
  HorizonParams(double omega, double r0, std::optional<Physical> physical)
      : omega_(omega), r0_(r0), physical_(physical) {}

  double omega_;
  double r0_;
  std::optional<Physical> physical_;
};

/// q with tan q = exp(-(omega / 2) sqrt(1 - 1/r0)); lies in [0, pi/4].
double dilation_angle(const HorizonParams& p);
double dilation_angle(double omega, double r0);

/// 16x4 map from one Hartle-Hawking mode into (region I) (x) (region IV).
/// The pair-state column is unsupported and left zero.
struct BogoliubovMap {
  double angle;
  Isometry isometry;
};

/// Throws DomainError unless q in [0, pi/4].
BogoliubovMap mode_isometry(double q);

/// Applies the Bogoliubov map to factor `target` and traces out region IV.
/// The output keeps the factor layout of the input. Throws
/// UnsupportedInputError if the target mode has pair-state support.
DensityMatrix transform_memory(const DensityMatrix& rho, std::size_t target, double q);
DensityMatrix transform_memory(const DensityMatrix& rho, std::size_t target, const HorizonParams& p);
DensityMatrix transform_memory(const StateVector& psi, std::size_t target, const HorizonParams& p);

/// (|0>_A |0>_B + |up>_A |down>_B) / sqrt(2).
StateVector state_bell_like();

/// (|0 0 up> + |0 up 0> + |up 0 0>) / sqrt(3) over (A, B, C).
StateVector state_w();

/// The W state with Charlie traced out: a two-mode (A, B) density matrix.
DensityMatrix state_w_traced();

}  // namespace eur
