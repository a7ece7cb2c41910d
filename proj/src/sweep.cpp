#include "eur/sweep.hpp"

#include <algorithm>
#include <future>

#include "eur/error.hpp"

namespace eur {

void SweepSpec::validate() const {
  if (omegas.empty()) throw PreconditionError("sweep needs at least one Omega value");
  for (double w : omegas)
    if (!(w > 0.0)) throw DomainError("Omega must be > 0");
  if (!(r0_min >= 1.0) || !(r0_max >= 1.0)) throw DomainError("R0 must be >= 1");
  if (r0_min > r0_max) throw PreconditionError("r0-min must not exceed r0-max");
  if (steps < 1) throw PreconditionError("steps must be >= 1");
  (void)spin_observable(basis1);
  (void)spin_observable(basis2);
}

std::vector<double> r0_grid(const SweepSpec& spec) {
  if (spec.steps == 1) return {spec.r0_min};
  std::vector<double> grid(spec.steps);
  const double span = spec.r0_max - spec.r0_min;
  for (std::size_t i = 0; i < spec.steps; ++i)
    grid[i] = spec.r0_min + span * static_cast<double>(i) / static_cast<double>(spec.steps - 1);
  grid.back() = spec.r0_max;
  return grid;
}

std::vector<BoundReport> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const ProjectiveBasis b1 = eigenbasis(spin_observable(spec.basis1));
  const ProjectiveBasis b2 = eigenbasis(spin_observable(spec.basis2));

  std::vector<double> omegas = spec.omegas;
  std::sort(omegas.begin(), omegas.end());
  const std::vector<double> radii = r0_grid(spec);

  // Points are independent; each Omega row is evaluated on its own task and
  // results are collected in grid order.
  std::vector<std::future<std::vector<BoundReport>>> rows;
  for (double omega : omegas)
    rows.push_back(std::async(std::launch::async, [&, omega] {
      std::vector<BoundReport> row;
      for (double r0 : radii) row.push_back(evaluate_point(spec.state, HorizonParams::from_ratios(omega, r0), b1, b2));
      return row;
    }));

  std::vector<BoundReport> out;
  out.reserve(omegas.size() * radii.size());
  for (auto& f : rows) {
    auto row = f.get();
    out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  }
  return out;
}

}  // namespace eur
