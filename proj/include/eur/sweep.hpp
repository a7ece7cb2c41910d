#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eur/bounds.hpp"

namespace eur {

/// Grid over (Omega, R0) for one example state.
struct SweepSpec {
  ExampleState state = ExampleState::bell;
  std::vector<double> omegas{10.0, 30.0};
  double r0_min = 1.001;
  double r0_max = 1.05;
  std::size_t steps = 100;
  std::string basis1 = "x";
  std::string basis2 = "y";

  /// Throws PreconditionError / DomainError on an invalid spec.
  void validate() const;
};

/// `steps` evenly spaced values from r0_min to r0_max inclusive; a single
/// step yields r0_min.
std::vector<double> r0_grid(const SweepSpec& spec);

/// One report per grid point, ordered by (Omega ascending, R0 ascending).
std::vector<BoundReport> run_sweep(const SweepSpec& spec);

}  // namespace eur
