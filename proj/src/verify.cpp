#include "eur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "eur/bounds.hpp"
#include "eur/entropy.hpp"
#include "eur/error.hpp"
#include "eur/horizon.hpp"
#include "eur/measurement.hpp"
#include "eur/random.hpp"
#include "eur/report_io.hpp"

namespace eur {
namespace {

using nlohmann::json;
using random::Engine;

json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json state_json(const DensityMatrix& rho) {
  json j = matrix_json(rho.entries());
  j["factor_dims"] = rho.factor_dims();
  return j;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Case outcome: nullopt on success, otherwise a JSON description.
using CaseResult = std::optional<json>;
using CaseFn = std::function<CaseResult(Engine&, std::size_t trial)>;

struct Suite {
  std::string name;
  std::size_t cases;
  CaseFn run;
};

CaseResult fail_if(bool failed, json details) {
  if (failed) return details;
  return std::nullopt;
}

// Random two-mode state whose B factor lives in span{0, up, down}.
DensityMatrix no_pair_state(Engine& rng) {
  const DensityMatrix small = random::density_matrix({4, 3}, rng);
  Matrix embed = Matrix::Zero(4, 3);
  for (Eigen::Index i = 0; i < 3; ++i) embed(i, i) = 1.0;
  const Matrix w = kron(Matrix::Identity(4, 4), embed);
  Matrix m = w * small.entries() * w.adjoint();
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix(std::move(m), {4, 4});
}

ProjectiveBasis random_basis(Engine& rng, const char* label) {
  return ProjectiveBasis::from_unitary(random::unitary(4, rng), label);
}

struct Counters {
  std::size_t random_states = 0;
  std::size_t u2_below_u1 = 0;
};

std::vector<Suite> build_suites(const VerifyOptions& opt, Counters& counters) {
  const double tol = opt.tolerance;
  const std::size_t n = opt.trials;
  const auto obs = spin_observables();
  const ProjectiveBasis bx = eigenbasis(obs[0]);
  const ProjectiveBasis by = eigenbasis(obs[1]);
  const ProjectiveBasis bz = eigenbasis(obs[2]);

  std::vector<Suite> s;

  // ---- matrix-core
  s.push_back({"matrix.spectrum_reconstruction", n, [](Engine& rng, std::size_t t) -> CaseResult {
                 const std::size_t d = t % 2 == 0 ? 4 : 16;
                 const Matrix h = random::hermitian(d, rng);
                 const Spectrum sp = hermitian_spectrum(h);
                 double ortho = 0.0;
                 for (std::size_t j = 0; j < d; ++j)
                   for (std::size_t k = 0; k < d; ++k)
                     ortho = std::max(ortho, std::abs(sp.eigenvectors[j].dot(sp.eigenvectors[k]) - (j == k ? 1.0 : 0.0)));
                 const double recon = max_abs(sp.reconstruct() - h);
                 return fail_if(recon > 1e-10 || ortho > 1e-10,
                                {{"matrix", matrix_json(h)}, {"reconstruction_error", recon}, {"orthonormality_error", ortho}});
               }});
  s.push_back({"matrix.partial_trace_product", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix a = random::density_matrix({4}, rng);
                 const DensityMatrix b = random::density_matrix({4}, rng);
                 const double err = max_abs(partial_trace(tensor_product(a, b), {0}).entries() - a.entries());
                 return fail_if(err > 1e-12, {{"a", state_json(a)}, {"b", state_json(b)}, {"error", err}});
               }});
  s.push_back({"matrix.isometry_trace", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng);
                 const Isometry v(random::isometry(4, 8, rng), {8});
                 const double tr = apply_isometry(rho, v, 1).entries().trace().real();
                 return fail_if(std::abs(tr - 1.0) > 1e-12,
                                {{"rho", state_json(rho)}, {"isometry", matrix_json(v.matrix())}, {"trace", tr}});
               }});
  s.push_back({"matrix.tensor_associativity", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix a = random::density_matrix({2}, rng);
                 const DensityMatrix b = random::density_matrix({3}, rng);
                 const DensityMatrix c = random::density_matrix({2}, rng);
                 const double err =
                     max_abs(tensor_product(tensor_product(a, b), c).entries() - tensor_product(a, tensor_product(b, c)).entries());
                 return fail_if(err > 1e-14, {{"a", state_json(a)}, {"b", state_json(b)}, {"c", state_json(c)}, {"error", err}});
               }});

  // ---- entropy
  s.push_back({"entropy.unitary_invariance", n + (opt.inject_fault ? 1 : 0),
               [tol, n](Engine& rng, std::size_t t) -> CaseResult {
                 if (t == n) {
                   // Injected fault: an eigenvalue of -1e-3 is far outside the clamp window.
                   Matrix m = Matrix::Zero(4, 4);
                   m(0, 0) = 0.501;
                   m(1, 1) = 0.5;
                   m(3, 3) = -0.001;
                   const DensityMatrix bad(m, {4});
                   try {
                     return fail_if(std::isfinite(von_neumann_entropy(bad)), {{"rho", state_json(bad)}});
                   } catch (const NotPositiveSemidefiniteError& e) {
                     return json{{"rho", state_json(bad)}, {"exception", e.what()}};
                   }
                 }
                 const std::size_t d = t % 2 == 0 ? 4 : 16;
                 const DensityMatrix rho = random::density_matrix({d}, rng);
                 const Matrix u = random::unitary(d, rng);
                 Matrix rotated = u * rho.entries() * u.adjoint();
                 rotated = (0.5 * (rotated + rotated.adjoint())).eval();
                 const double diff = std::abs(von_neumann_entropy(DensityMatrix(rotated, {d})) - von_neumann_entropy(rho));
                 return fail_if(diff >= tol, {{"rho", state_json(rho)}, {"unitary", matrix_json(u)}, {"difference", diff}});
               }});
  s.push_back({"entropy.subadditivity", n, [tol](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const double hab = von_neumann_entropy(rho);
                 const double ha = von_neumann_entropy(partial_trace(rho, {0}));
                 const double hb = von_neumann_entropy(partial_trace(rho, {1}));
                 return fail_if(hab > ha + hb + tol, {{"rho", state_json(rho)}, {"h_ab", hab}, {"h_a", ha}, {"h_b", hb}});
               }});
  s.push_back({"entropy.mutual_information_nonnegative", n, [tol](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const double mi = mutual_information(rho);
                 return fail_if(mi < -tol, {{"rho", state_json(rho)}, {"mutual_information", mi}});
               }});
  s.push_back({"entropy.conditional_product", n, [tol](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix a = random::density_matrix({4}, rng);
                 const DensityMatrix b = random::density_matrix({4}, rng);
                 const double diff = std::abs(conditional_entropy(tensor_product(a, b), 1) - von_neumann_entropy(a));
                 return fail_if(diff > tol, {{"a", state_json(a)}, {"b", state_json(b)}, {"difference", diff}});
               }});

  // ---- measurement
  s.push_back({"measurement.information_identity", n, [=](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const DensityMatrix rho_a = partial_trace(rho, {0});
                 const double decrease = outcome_entropy(rho_a, bx) + outcome_entropy(rho_a, by) -
                                         conditional_entropy(dephase(rho, bx, 0), 1) -
                                         conditional_entropy(dephase(rho, by, 0), 1);
                 const double gain = holevo_quantity(rho, bx, 0) + holevo_quantity(rho, by, 0);
                 return fail_if(std::abs(decrease - gain) > tol,
                                {{"rho", state_json(rho)}, {"uncertainty_decrease", decrease}, {"information_gain", gain}});
               }});
  s.push_back({"measurement.holevo_le_mutual_info", n, [=](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const double mi = mutual_information(rho);
                 const double j1 = holevo_quantity(rho, bx, 0), j2 = holevo_quantity(rho, by, 0);
                 return fail_if(j1 > mi + tol || j2 > mi + tol,
                                {{"rho", state_json(rho)}, {"mutual_information", mi}, {"holevo_x", j1}, {"holevo_y", j2}});
               }});
  s.push_back({"measurement.joint_entropy_route", n, [=](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const double channel = conditional_entropy(classical_quantum_state(measure_ensemble(rho, bx, 0), bx), 1);
                 const double identity = outcome_entropy(partial_trace(rho, {0}), bx) - holevo_quantity(rho, bx, 0);
                 return fail_if(std::abs(channel - identity) > tol,
                                {{"rho", state_json(rho)}, {"channel_route", channel}, {"identity_route", identity}});
               }});
  s.push_back({"measurement.holevo_range", n, [=](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const ProjectiveBasis b = random_basis(rng, "random");
                 const double j = holevo_quantity(rho, b, 0);
                 const double hb = von_neumann_entropy(partial_trace(rho, {1}));
                 return fail_if(j < -tol || j > hb + tol,
                                {{"rho", state_json(rho)}, {"basis", matrix_json([&] {
                                   Matrix u(4, 4);
                                   for (Eigen::Index k = 0; k < 4; ++k) u.col(k) = b[static_cast<std::size_t>(k)];
                                   return u;
                                 }())},
                                 {"holevo", j}, {"h_b", hb}});
               }});
  s.push_back({"measurement.overlap_doubly_stochastic", 3, [=](Engine&, std::size_t t) -> CaseResult {
                 const ProjectiveBasis* pairs[3][2] = {{&bx, &by}, {&bx, &bz}, {&by, &bz}};
                 const OverlapTable tab = overlap_table(*pairs[t][0], *pairs[t][1]);
                 const double rows = (tab.c.rowwise().sum().array() - 1.0).abs().maxCoeff();
                 const double cols = (tab.c.colwise().sum().array() - 1.0).abs().maxCoeff();
                 return fail_if(rows > 1e-10 || cols > 1e-10 || tab.c.minCoeff() < 0.0 || tab.c.maxCoeff() > 1.0,
                                {{"pair", pairs[t][0]->source() + pairs[t][1]->source()}, {"row_error", rows}, {"col_error", cols}});
               }});

  // ---- horizon-modes
  s.push_back({"horizon.dilation_monotone", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const double r0 = random::uniform(1.0001, 1.05, rng);
                 const double w1 = random::uniform(0.1, 40.0, rng);
                 const double w2 = w1 + random::uniform(0.01, 5.0, rng);
                 const double w = random::uniform(0.1, 40.0, rng);
                 const double ra = random::uniform(1.0, 1.05, rng);
                 const double rb = ra + random::uniform(0.0005, 0.01, rng);
                 const bool in_omega = dilation_angle(w1, r0) > dilation_angle(w2, r0);
                 const bool in_r0 = dilation_angle(w, ra) > dilation_angle(w, rb);
                 return fail_if(!in_omega || !in_r0, {{"r0", r0}, {"omega_1", w1}, {"omega_2", w2}, {"omega", w},
                                                      {"r0_a", ra}, {"r0_b", rb}});
               }});
  s.push_back({"horizon.isometry_columns", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const double q = random::uniform(0.0, std::numbers::pi / 4, rng);
                 const Matrix v = mode_isometry(q).isometry.matrix().leftCols(3);
                 const double err = max_abs(v.adjoint() * v - Matrix::Identity(3, 3));
                 return fail_if(err > 1e-12, {{"q", q}, {"error", err}});
               }});
  s.push_back({"horizon.transform_locality", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = no_pair_state(rng);
                 const double q = random::uniform(0.0, std::numbers::pi / 4, rng);
                 const double err = max_abs(partial_trace(transform_memory(rho, 1, q), {0}).entries() -
                                            partial_trace(rho, {0}).entries());
                 return fail_if(err > 1e-10, {{"rho", state_json(rho)}, {"q", q}, {"error", err}});
               }});
  s.push_back({"horizon.identity_at_zero_angle", n, [](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = no_pair_state(rng);
                 const double err = max_abs(transform_memory(rho, 1, 0.0).entries() - rho.entries());
                 return fail_if(err > 1e-12, {{"rho", state_json(rho)}, {"error", err}});
               }});
  s.push_back({"horizon.bell_degradation", n, [tol](Engine& rng, std::size_t) -> CaseResult {
                 const double w = random::uniform(1.0, 40.0, rng);
                 const double ra = random::uniform(1.0, 1.05, rng);
                 const double rb = std::min(1.05, ra + random::uniform(0.0, 0.01, rng));
                 const DensityMatrix bell = DensityMatrix::from_pure(state_bell_like());
                 const double ia = mutual_information(transform_memory(bell, 1, HorizonParams::from_ratios(w, ra)));
                 const double ib = mutual_information(transform_memory(bell, 1, HorizonParams::from_ratios(w, rb)));
                 return fail_if(ia > ib + tol, {{"omega", w}, {"r0_a", ra}, {"r0_b", rb}, {"mi_a", ia}, {"mi_b", ib}});
               }});

  // ---- bounds
  s.push_back({"bounds.delta2_constancy", n, [=](Engine& rng, std::size_t t) -> CaseResult {
                 const ExampleState st = t % 2 == 0 ? ExampleState::bell : ExampleState::w;
                 const double base = delta2(partial_trace(example_state(st), {0}), bx, by);
                 const double w = random::uniform(1.0, 40.0, rng);
                 const double r0 = random::uniform(1.0, 1.05, rng);
                 const BoundReport r = evaluate_point(st, HorizonParams::from_ratios(w, r0), bx, by);
                 return fail_if(std::abs(r.delta2 - base) > tol,
                                {{"state", state_label(st)}, {"omega", w}, {"r0", r0}, {"delta2", r.delta2}, {"expected", base}});
               }});
  s.push_back({"bounds.u2_tighter_on_examples", n, [=](Engine& rng, std::size_t t) -> CaseResult {
                 const ExampleState st = t % 2 == 0 ? ExampleState::bell : ExampleState::w;
                 const double w = random::uniform(1.0, 40.0, rng);
                 const double r0 = random::uniform(1.0, 1.05, rng);
                 const BoundReport r = evaluate_point(st, HorizonParams::from_ratios(w, r0), bx, by);
                 return fail_if(r.u2 < r.u1 - tol, {{"state", state_label(st)}, {"omega", w}, {"r0", r0}, {"u1", r.u1}, {"u2", r.u2}});
               }});
  s.push_back({"bounds.validity_random", n, [=, &counters](Engine& rng, std::size_t) -> CaseResult {
                 const DensityMatrix rho = random::density_matrix({4, 4}, rng, 1 + rng() % 16);
                 const ProjectiveBasis b1 = random_basis(rng, "random1");
                 const ProjectiveBasis b2 = random_basis(rng, "random2");
                 const BoundReport r = full_report("random", rho, b1, b2);
                 ++counters.random_states;
                 if (r.u2 < r.u1 - tol) ++counters.u2_below_u1;
                 return fail_if(r.lhs < r.u1 - tol || r.lhs < r.u2 - tol,
                                {{"rho", state_json(rho)}, {"lhs", r.lhs}, {"u1", r.u1}, {"u2", r.u2}});
               }});
  s.push_back({"bounds.lhs_monotone_bell", n, [=](Engine& rng, std::size_t) -> CaseResult {
                 const double w = random::uniform(1.0, 40.0, rng);
                 const double ra = random::uniform(1.0, 1.05, rng);
                 const double rb = std::min(1.05, ra + random::uniform(0.0, 0.01, rng));
                 const double la = evaluate_point(ExampleState::bell, HorizonParams::from_ratios(w, ra), bx, by).lhs;
                 const double lb = evaluate_point(ExampleState::bell, HorizonParams::from_ratios(w, rb), bx, by).lhs;
                 return fail_if(la < lb - tol, {{"omega", w}, {"r0_a", ra}, {"r0_b", rb}, {"lhs_a", la}, {"lhs_b", lb}});
               }});

  // ---- cli
  s.push_back({"cli.csv_round_trip", n, [=](Engine& rng, std::size_t t) -> CaseResult {
                 const ExampleState st = t % 2 == 0 ? ExampleState::bell : ExampleState::w;
                 const double w = random::uniform(1.0, 40.0, rng);
                 const double r0 = random::uniform(1.0, 1.05, rng);
                 const BoundReport r = evaluate_point(st, HorizonParams::from_ratios(w, r0), bx, by);
                 const std::vector<double> parsed = parse_csv_numbers(csv_row(r));
                 const double expect[] = {w, r0, *r.q_d, r.lhs, r.u1, r.u2, r.delta1, r.delta2, r.h_a,
                                          r.mutual_info, r.holevo_m1, r.holevo_m2, r.h_m1, r.h_m2, r.c1};
                 double err = parsed.size() == std::size(expect) ? 0.0 : 1.0;
                 for (std::size_t i = 0; i < std::min(parsed.size(), std::size(expect)); ++i)
                   err = std::max(err, std::abs(parsed[i] - expect[i]));
                 return fail_if(err > 1e-10, {{"row", csv_row(r)}, {"error", err}});
               }});

  return s;
}

}  // namespace

bool VerifyOutcome::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

VerifyOutcome run_verify(const VerifyOptions& options) {
  if (options.trials < 1) throw PreconditionError("trials must be >= 1");
  if (!(options.tolerance > 0.0)) throw PreconditionError("tolerance must be > 0");

  Counters counters;
  const std::vector<Suite> suites = build_suites(options, counters);

  VerifyOutcome out;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const Suite& suite = suites[i];
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Engine rng(seq);

    SuiteResult result{suite.name, 0, suite.cases, std::nullopt};
    for (std::size_t t = 0; t < suite.cases; ++t) {
      CaseResult failure;
      try {
        failure = suite.run(rng, t);
      } catch (const std::exception& e) {
        failure = json{{"exception", e.what()}};
      }
      if (!failure) {
        ++result.passed;
        continue;
      }
      if (!result.counterexample) {
        json cx{{"suite", suite.name}, {"seed", options.seed}, {"trial", t}, {"tolerance", options.tolerance}};
        cx["case"] = std::move(*failure);
        result.counterexample = cx.dump();
      }
    }
    out.suites.push_back(std::move(result));
  }

  if (counters.u2_below_u1 > 0) {
    out.notes.push_back("bounds.validity_random: U2 < U1 on " + std::to_string(counters.u2_below_u1) + " of " +
                        std::to_string(counters.random_states) + " random states (reported, not a failure)");
  }
  return out;
}

std::string render_summary(const VerifyOutcome& outcome) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& s : outcome.suites) {
    os << s.name << std::string(s.name.size() < 42 ? 42 - s.name.size() : 1, ' ') << s.passed << "/" << s.total
       << (s.ok() ? "" : "  FAIL") << "\n";
    if (!s.ok()) ++failed;
  }
  if (failed == 0)
    os << "all " << outcome.suites.size() << " suites passed\n";
  else
    os << failed << " of " << outcome.suites.size() << " suites failed\n";
  return os.str();
}

}  // namespace eur
