// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/random.hpp"
#include "eur/sweep.hpp"

using namespace eur;

namespace {

constexpr std::uint64_t kSeed = 20170101;
constexpr std::size_t kRandomStates = 500;
constexpr std::size_t kGridPoints = 100;
const std::vector<double> kOmegas{10.0, 30.0};
constexpr ExampleState kStates[] = {ExampleState::bell, ExampleState::w};

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct GridRun {
  ExampleState state;
  double omega;
  std::vector<BoundReport> reports;  // ascending R0
};

struct RandomCase {
  DensityMatrix rho;
  ProjectiveBasis b1;
  ProjectiveBasis b2;
  BoundReport report;
};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

const ProjectiveBasis& bx() {
  static const ProjectiveBasis b = eigenbasis(spin_observable("x"));
  return b;
}
const ProjectiveBasis& by() {
  static const ProjectiveBasis b = eigenbasis(spin_observable("y"));
  return b;
}

std::vector<GridRun> build_grid() {
  std::vector<GridRun> runs;
  for (ExampleState s : kStates)
    for (double omega : kOmegas) {
      SweepSpec spec;
      spec.state = s;
      spec.omegas = {omega};
      spec.r0_min = 1.001;
      spec.r0_max = 1.05;
      spec.steps = kGridPoints;
      runs.push_back({s, omega, run_sweep(spec)});
    }
  return runs;
}

std::vector<RandomCase> build_random() {
  random::Engine rng(kSeed);
  std::vector<RandomCase> cases;
  cases.reserve(kRandomStates);
  for (std::size_t i = 0; i < kRandomStates; ++i) {
    DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + i % 16);
    ProjectiveBasis b1 = ProjectiveBasis::from_unitary(random::unitary(4, rng), "random1");
    ProjectiveBasis b2 = ProjectiveBasis::from_unitary(random::unitary(4, rng), "random2");
    BoundReport r = full_report("random", rho, b1, b2);
    cases.push_back({std::move(rho), std::move(b1), std::move(b2), std::move(r)});
  }
  return cases;
}

Verdict overlap_constant() {
  const auto obs = spin_observables();
  const double target = std::log2(8.0 / 3.0);
  double worst = 0.0;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
    worst = std::max(worst, std::abs(-std::log2(overlap_table(eigenbasis(obs[i]), eigenbasis(obs[j])).c1) - target));
  return {worst <= 1e-10, "max |-log2 c1 - log2(8/3)| = " + fmt(worst)};
}

Verdict delta2_constancy(const std::vector<GridRun>& grid) {
  double spread = 0.0, formula = 0.0;
  for (const auto& run : grid) {
    const double memory_free = delta2(partial_trace(example_state(run.state), {0}), bx(), by());
    auto [lo, hi] = std::minmax_element(run.reports.begin(), run.reports.end(),
                                        [](const auto& a, const auto& b) { return a.delta2 < b.delta2; });
    spread = std::max(spread, hi->delta2 - lo->delta2);
    for (const auto& r : run.reports) formula = std::max(formula, std::abs(r.delta2 - memory_free));
  }
  return {spread < 1e-9 && formula <= 1e-10,
          "max spread " + fmt(spread) + ", max deviation from memory-free formula " + fmt(formula)};
}

Verdict u2_tighter(const std::vector<GridRun>& grid) {
  double worst = -INFINITY;
  std::size_t points = 0;
  for (const auto& run : grid)
    for (const auto& r : run.reports) {
      worst = std::max(worst, r.u1 - r.u2);
      ++points;
    }
  return {worst <= 1e-9 && points == 400, std::to_string(points) + " points, max(u1 - u2) = " + fmt(worst)};
}

Verdict validity(const std::vector<GridRun>& grid, const std::vector<RandomCase>& random_cases) {
  double worst = -INFINITY;
  auto check = [&](const BoundReport& r) { worst = std::max({worst, r.u1 - r.lhs, r.u2 - r.lhs}); };
  for (const auto& run : grid)
    for (const auto& r : run.reports) check(r);
  for (const auto& c : random_cases) check(c.report);
  return {worst <= 1e-9, "grid + " + std::to_string(random_cases.size()) + " random states, max(bound - lhs) = " + fmt(worst)};
}

Verdict information_identity(const std::vector<RandomCase>& random_cases) {
  double worst = 0.0;
  for (const auto& c : random_cases) {
    const DensityMatrix rho_a = partial_trace(c.rho, {0});
    const double decrease = outcome_entropy(rho_a, c.b1) + outcome_entropy(rho_a, c.b2) -
                            conditional_entropy(dephase(c.rho, c.b1, 0), 1) - conditional_entropy(dephase(c.rho, c.b2, 0), 1);
    const double gain = holevo_quantity(c.rho, c.b1, 0) + holevo_quantity(c.rho, c.b2, 0);
    worst = std::max(worst, std::abs(decrease - gain));
  }
  return {worst <= 1e-9, std::to_string(random_cases.size()) + " random states, max |decrease - gain| = " + fmt(worst)};
}

Verdict delta1_trend(const std::vector<GridRun>& grid) {
  double worst = 0.0;  // largest step against the expected direction
  for (const auto& run : grid) {
    const double sign = run.state == ExampleState::bell ? 1.0 : -1.0;  // bell nonincreasing, w nondecreasing
    for (std::size_t i = 1; i < run.reports.size(); ++i)
      worst = std::max(worst, sign * (run.reports[i].delta1 - run.reports[i - 1].delta1));
  }
  return {worst <= 1e-9, "max step against trend = " + fmt(worst)};
}

Verdict horizon_limits() {
  const double q_err = std::abs(dilation_angle(10.0, 1.0) - std::numbers::pi / 4);
  const auto far = HorizonParams::from_ratios(1e4, 1.05);
  double state_err = 0.0, lhs_err = 0.0;
  for (ExampleState s : kStates) {
    const DensityMatrix before = example_state(s);
    state_err = std::max(state_err, max_abs(transform_memory(before, 1, far).entries() - before.entries()));
    const double lhs_far = evaluate_point(s, far, bx(), by()).lhs;
    const double lhs_zero = evaluate_at_angle(s, 0.0, bx(), by()).lhs;
    lhs_err = std::max(lhs_err, std::abs(lhs_far - lhs_zero));
  }
  return {q_err <= 1e-12 && state_err < 1e-6 && lhs_err <= 1e-5,
          "|q(R0=1) - pi/4| = " + fmt(q_err) + ", state diff " + fmt(state_err) + ", lhs diff " + fmt(lhs_err)};
}

Verdict locality(const std::vector<GridRun>& grid) {
  double drift = 0.0, spectrum = 0.0;
  for (const auto& run : grid) {
    const DensityMatrix before = example_state(run.state);
    const Matrix alice = partial_trace(before, {0}).entries();
    const double expected[4] = {run.state == ExampleState::bell ? 0.5 : 2.0 / 3,
                                run.state == ExampleState::bell ? 0.5 : 1.0 / 3, 0.0, 0.0};
    const Spectrum s = hermitian_spectrum(partial_trace(before, {0}));
    for (int k = 0; k < 4; ++k) spectrum = std::max(spectrum, std::abs(s.eigenvalues(k) - expected[k]));
    for (const auto& r : run.reports) {
      const DensityMatrix after = transform_memory(before, 1, *r.q_d);
      drift = std::max(drift, max_abs(partial_trace(after, {0}).entries() - alice));
    }
  }
  return {drift <= 1e-10 && spectrum <= 1e-10,
          "max marginal drift " + fmt(drift) + ", marginal spectrum error " + fmt(spectrum)};
}

Verdict isometry_soundness() {
  random::Engine rng(kSeed + 9);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double q = random::uniform(0.0, std::numbers::pi / 4, rng);
    const Matrix v = mode_isometry(q).isometry.matrix().leftCols(3);
    worst = std::max(worst, max_abs(v.adjoint() * v - Matrix::Identity(3, 3)));
  }
  return {worst <= 1e-12, "50 angles, max |V'V - I3| = " + fmt(worst)};
}

Verdict two_route(const std::vector<GridRun>& grid, const std::vector<RandomCase>& random_cases) {
  double worst = 0.0;
  std::size_t points = 0;
  for (const auto& run : grid)
    for (const auto& r : run.reports) {
      const DensityMatrix rho = transform_memory(example_state(run.state), 1, *r.q_d);
      worst = std::max(worst, std::abs(r.lhs - lhs_identity_route(rho, bx(), by())));
      ++points;
    }
  for (const auto& c : random_cases) {
    worst = std::max(worst, std::abs(c.report.lhs - lhs_identity_route(c.rho, c.b1, c.b2)));
    ++points;
  }
  return {worst <= 1e-9, std::to_string(points) + " points, max |channel - identity| = " + fmt(worst)};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GridRun> grid = build_grid();
  const std::vector<RandomCase> random_cases = build_random();

  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"overlap constant -log2 c1 = log2(8/3) for all observable pairs", overlap_constant},
      {"delta2 constant over R0 grids and equal to the memory-free formula", [&] { return delta2_constancy(grid); }},
      {"U2 >= U1 on all 400 grid points", [&] { return u2_tighter(grid); }},
      {"lhs >= U1 and lhs >= U2 on grids and random states", [&] { return validity(grid, random_cases); }},
      {"uncertainty decrease equals Holevo information gain", [&] { return information_identity(random_cases); }},
      {"delta1 trend: bell nonincreasing, w nondecreasing in R0", [&] { return delta1_trend(grid); }},
      {"horizon limits at R0 = 1 and Omega -> infinity", horizon_limits},
      {"Alice's marginal unchanged by the horizon map", [&] { return locality(grid); }},
      {"Bogoliubov isometry columns orthonormal", isometry_soundness},
      {"channel-route lhs equals identity-route lhs", [&] { return two_route(grid, random_cases); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("[%s] %2zu. %s (%s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, v.detail.c_str());
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
