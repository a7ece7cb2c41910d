// horizon-eur: entropic uncertainty bounds for Dirac modes near a
// Schwarzschild horizon.
//
//   horizon-eur compute --state bell --omega 10 --r0 1.02
//   horizon-eur sweep --state w --omegas 10,30 --steps 100 --format csv
//   horizon-eur verify --seed 7 --trials 50
//
// Exit codes: 0 success, 1 invalid arguments, 2 internal-consistency or
// verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eur/bounds.hpp"
#include "eur/error.hpp"
#include "eur/report_io.hpp"
#include "eur/sweep.hpp"
#include "eur/verify.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

struct ComputeArgs {
  std::string state = "bell";
  std::optional<double> omega;
  std::optional<double> r0;
  std::optional<double> mass;
  std::optional<double> frequency;
  std::optional<double> radius;
  std::vector<std::string> bases{"x", "y"};
};

struct SweepArgs {
  std::string state = "bell";
  std::vector<double> omegas{10.0, 30.0};
  double r0_min = 1.001;
  double r0_max = 1.05;
  std::size_t steps = 100;
  std::vector<std::string> bases{"x", "y"};
  std::string format = "csv";
};

struct VerifyArgs {
  std::uint64_t seed = 20170101;
  std::size_t trials = 50;
  double tolerance = 1e-9;
  bool inject_fault = false;
};

void warn_if_far(const eur::HorizonParams& p) {
  if (p.outside_rindler_regime())
    std::cerr << "warning: R0 = " << p.r0() << " > 1.05; the near-horizon approximation may not hold\n";
}

eur::HorizonParams params_from(const ComputeArgs& a) {
  const bool ratios = a.omega || a.r0;
  const bool physical = a.mass || a.frequency || a.radius;
  if (ratios && physical) throw eur::PreconditionError("give either --omega/--r0 or --mass/--frequency/--radius");
  if (physical) {
    if (!a.mass || !a.frequency || !a.radius)
      throw eur::PreconditionError("--mass, --frequency and --radius must be given together");
    return eur::HorizonParams::from_physical(*a.mass, *a.frequency, *a.radius);
  }
  if (!a.omega || !a.r0) throw eur::PreconditionError("--omega and --r0 are required");
  return eur::HorizonParams::from_ratios(*a.omega, *a.r0);
}

int run_compute(const ComputeArgs& a) {
  const eur::ExampleState state = eur::parse_state_label(a.state);
  const eur::HorizonParams params = params_from(a);
  if (a.bases.size() != 2) throw eur::PreconditionError("--bases takes exactly two labels");
  const auto b1 = eur::eigenbasis(eur::spin_observable(a.bases[0]));
  const auto b2 = eur::eigenbasis(eur::spin_observable(a.bases[1]));
  warn_if_far(params);
  const eur::BoundReport r = eur::evaluate_point(state, params, b1, b2);
  std::cout << eur::to_json(r).dump(2) << "\n";
  return 0;
}

int run_sweep(const SweepArgs& a) {
  if (a.format != "csv" && a.format != "json") throw eur::PreconditionError("--format must be csv or json");
  if (a.bases.size() != 2) throw eur::PreconditionError("--bases takes exactly two labels");
  eur::SweepSpec spec;
  spec.state = eur::parse_state_label(a.state);
  spec.omegas = a.omegas;
  spec.r0_min = a.r0_min;
  spec.r0_max = a.r0_max;
  spec.steps = a.steps;
  spec.basis1 = a.bases[0];
  spec.basis2 = a.bases[1];
  spec.validate();
  if (spec.r0_max > eur::HorizonParams::kRindlerLimit)
    std::cerr << "warning: grid reaches R0 = " << spec.r0_max
              << " > 1.05; the near-horizon approximation may not hold\n";

  const auto reports = eur::run_sweep(spec);
  std::cout << (a.format == "csv" ? eur::render_csv(reports) : eur::render_json(reports));
  return 0;
}

int run_verify(const VerifyArgs& a) {
  eur::VerifyOptions opt;
  opt.seed = a.seed;
  opt.trials = a.trials;
  opt.tolerance = a.tolerance;
  opt.inject_fault = a.inject_fault;
  const eur::VerifyOutcome outcome = eur::run_verify(opt);
  std::cout << eur::render_summary(outcome);
  for (const auto& note : outcome.notes) std::cerr << "note: " << note << "\n";
  if (outcome.ok()) return 0;
  for (const auto& s : outcome.suites)
    if (s.counterexample) std::cout << "counterexample " << *s.counterexample << "\n";
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds for Dirac modes near a Schwarzschild horizon"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate every bound at one (Omega, R0) point; prints JSON");
  c->add_option("--state", compute.state, "Example state: bell or w")->capture_default_str();
  c->add_option("--omega", compute.omega, "Omega = omega / T_H");
  c->add_option("--r0", compute.r0, "R0 = r0 / 2M");
  c->add_option("--mass", compute.mass, "Black-hole mass M (geometric units)");
  c->add_option("--frequency", compute.frequency, "Mode frequency omega");
  c->add_option("--radius", compute.radius, "Static observer radius r0");
  c->add_option("--bases", compute.bases, "Two observable labels from x, y, z")->delimiter(',')->capture_default_str();

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Evaluate a grid of (Omega, R0) points; prints CSV or JSON");
  s->add_option("--state", sweep.state, "Example state: bell or w")->capture_default_str();
  s->add_option("--omegas", sweep.omegas, "Comma-separated Omega values")->delimiter(',')->capture_default_str();
  s->add_option("--r0-min", sweep.r0_min)->capture_default_str();
  s->add_option("--r0-max", sweep.r0_max)->capture_default_str();
  s->add_option("--steps", sweep.steps, "Number of R0 grid points")->capture_default_str();
  s->add_option("--bases", sweep.bases, "Two observable labels from x, y, z")->delimiter(',')->capture_default_str();
  s->add_option("--format", sweep.format, "csv or json")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the seeded invariant suites");
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--trials", verify.trials, "Random cases per suite")->capture_default_str();
  v->add_option("--tolerance", verify.tolerance, "Tolerance for entropy-level checks")->capture_default_str();
  v->add_flag("--inject-fault", verify.inject_fault, "Add a non-positive state to exercise the failure path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*c) return run_compute(compute);
    if (*s) return run_sweep(sweep);
    if (*v) return run_verify(verify);
  } catch (const eur::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const eur::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const eur::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const eur::UnsupportedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}
