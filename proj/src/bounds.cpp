#include "eur/bounds.hpp"

#include <cmath>
#include <sstream>

#include "eur/error.hpp"

namespace eur {
namespace {

double h_m_given_b(const DensityMatrix& rho_ab, const ProjectiveBasis& b) {
  return conditional_entropy(classical_quantum_state(measure_ensemble(rho_ab, b, 0), b), 1);
}

void check_identity(const char* what, double a, double b) {
  if (std::abs(a - b) > kIdentityTol) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": " << a << " vs " << b << " (diff " << std::abs(a - b) << ")";
    throw ConsistencyError(os.str());
  }
}

}  // namespace

double mu_bound(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return -std::log2(overlap_table(b1, b2).c1);
}

double berta_no_memory(const DensityMatrix& rho_a, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return mu_bound(b1, b2) + von_neumann_entropy(rho_a);
}

double delta2(const DensityMatrix& rho_a, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return outcome_entropy(rho_a, b1) + outcome_entropy(rho_a, b2) - berta_no_memory(rho_a, b1, b2);
}

double lhs_uncertainty(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return h_m_given_b(rho_ab, b1) + h_m_given_b(rho_ab, b2);
}

double lhs_identity_route(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  const DensityMatrix rho_a = partial_trace(rho_ab, {0});
  return outcome_entropy(rho_a, b1) + outcome_entropy(rho_a, b2) - holevo_quantity(rho_ab, b1, 0) -
         holevo_quantity(rho_ab, b2, 0);
}

double u1_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return berta_no_memory(partial_trace(rho_ab, {0}), b1, b2) - mutual_information(rho_ab);
}

double u2_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return berta_no_memory(partial_trace(rho_ab, {0}), b1, b2) - holevo_quantity(rho_ab, b1, 0) -
         holevo_quantity(rho_ab, b2, 0);
}

BoundReport full_report(std::string label, const DensityMatrix& rho_ab, const ProjectiveBasis& b1,
                        const ProjectiveBasis& b2, std::optional<HorizonParams> params) {
  if (rho_ab.num_factors() != 2) throw PreconditionError("full_report: expected a bipartite state");

  BoundReport r;
  r.state_label = std::move(label);
  if (params) r.q_d = dilation_angle(*params);
  r.params = std::move(params);

  const DensityMatrix rho_a = partial_trace(rho_ab, {0});
  const DensityMatrix rho_b = partial_trace(rho_ab, {1});
  const MeasuredEnsemble e1 = measure_ensemble(rho_ab, b1, 0);
  const MeasuredEnsemble e2 = measure_ensemble(rho_ab, b2, 0);

  const double h_b = von_neumann_entropy(rho_b);
  const double h_ab = von_neumann_entropy(rho_ab);
  r.h_a = von_neumann_entropy(rho_a);
  r.mutual_info = r.h_a + h_b - h_ab;
  r.holevo_m1 = holevo_quantity(e1, rho_b);
  r.holevo_m2 = holevo_quantity(e2, rho_b);
  r.h_m1 = outcome_entropy(rho_a, b1);
  r.h_m2 = outcome_entropy(rho_a, b2);
  r.c1 = overlap_table(b1, b2).c1;
  r.mu_bound = -std::log2(r.c1);
  r.berta_no_memory = r.mu_bound + r.h_a;

  r.lhs = von_neumann_entropy(classical_quantum_state(e1, b1)) + von_neumann_entropy(classical_quantum_state(e2, b2)) -
          2.0 * h_b;
  check_identity("lhs channel route vs H(M) - J route", r.lhs, r.h_m1 + r.h_m2 - r.holevo_m1 - r.holevo_m2);

  r.u1 = r.berta_no_memory - r.mutual_info;
  r.u2 = r.berta_no_memory - r.holevo_m1 - r.holevo_m2;
  r.delta1 = r.lhs - r.u1;
  r.delta2 = r.lhs - r.u2;
  check_identity("delta2 vs memory-free formula", r.delta2, r.h_m1 + r.h_m2 - r.berta_no_memory);
  return r;
}

ExampleState parse_state_label(std::string_view label) {
  if (label == "bell") return ExampleState::bell;
  if (label == "w") return ExampleState::w;
  throw PreconditionError("unknown state '" + std::string(label) + "' (expected bell or w)");
}

std::string_view state_label(ExampleState s) { return s == ExampleState::bell ? "bell" : "w"; }

DensityMatrix example_state(ExampleState s) {
  return s == ExampleState::bell ? DensityMatrix::from_pure(state_bell_like()) : state_w_traced();
}

namespace {

BoundReport evaluate(ExampleState s, double q, std::optional<HorizonParams> params, const ProjectiveBasis& b1,
                     const ProjectiveBasis& b2) {
  const DensityMatrix before = example_state(s);
  const DensityMatrix after = transform_memory(before, 1, q);
  const double drift =
      (partial_trace(after, {0}).entries() - partial_trace(before, {0}).entries()).cwiseAbs().maxCoeff();
  if (drift > 1e-10)
    throw ConsistencyError("Alice's marginal changed under a map on Bob's mode (" + std::to_string(drift) + ")");
  BoundReport r = full_report(std::string(state_label(s)), after, b1, b2, std::move(params));
  r.q_d = q;
  return r;
}

}  // namespace

BoundReport evaluate_point(ExampleState s, const HorizonParams& params, const ProjectiveBasis& b1,
                           const ProjectiveBasis& b2) {
  return evaluate(s, dilation_angle(params), params, b1, b2);
}

BoundReport evaluate_at_angle(ExampleState s, double q, const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  return evaluate(s, q, std::nullopt, b1, b2);
}

}  // namespace eur
