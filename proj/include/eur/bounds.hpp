#pragma once

// Memory-assisted entropic uncertainty: the left-hand side
// H(M1|B) + H(M2|B), the mutual-information bound U1, the Holevo bound U2,
// and their gaps.

#include <optional>
#include <string>
#include <string_view>

#include "eur/horizon.hpp"
#include "eur/measurement.hpp"

namespace eur {

/// Tolerance for the identities full_report checks before returning.
inline constexpr double kIdentityTol = 1e-9;

struct BoundReport {
  std::string state_label;
  std::optional<HorizonParams> params;
  std::optional<double> q_d;

  double lhs = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double mu_bound = 0.0;
  double berta_no_memory = 0.0;
  double h_a = 0.0;
  double mutual_info = 0.0;
  double holevo_m1 = 0.0;
  double holevo_m2 = 0.0;
  double h_m1 = 0.0;
  double h_m2 = 0.0;
  double c1 = 0.0;
};

/// H(M1|B) + H(M2|B) via the entropies of the two classical-quantum states.
/// Measurements act on factor 0.
double lhs_uncertainty(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// H(M1) + H(M2) - J(B|M1) - J(B|M2); equals lhs_uncertainty.
double lhs_identity_route(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// -log c1 + H(A) - I(A:B)
double u1_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// -log c1 + H(A) - J(B|M1) - J(B|M2)
double u2_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// H(M1) + H(M2) + log c1 - H(A). Needs only Alice's state.
double delta2(const DensityMatrix& rho_a, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// -log c1
double mu_bound(const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// -log c1 + H(A)
double berta_no_memory(const DensityMatrix& rho_a, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

/// Every quantity at once. Throws ConsistencyError if the two lhs routes or
/// the two delta2 routes disagree by more than kIdentityTol.
BoundReport full_report(std::string state_label, const DensityMatrix& rho_ab, const ProjectiveBasis& b1,
                        const ProjectiveBasis& b2, std::optional<HorizonParams> params = std::nullopt);

enum class ExampleState { bell, w };

ExampleState parse_state_label(std::string_view label);
std::string_view state_label(ExampleState s);

/// Untransformed two-mode state (A, B) for an example.
DensityMatrix example_state(ExampleState s);

/// Builds the example, moves Bob's mode near the horizon, checks that
/// Alice's marginal is unchanged and returns the full report.
BoundReport evaluate_point(ExampleState s, const HorizonParams& params, const ProjectiveBasis& b1,
                           const ProjectiveBasis& b2);

/// Same as evaluate_point with the dilation angle given directly.
BoundReport evaluate_at_angle(ExampleState s, double q, const ProjectiveBasis& b1, const ProjectiveBasis& b2);

}  // namespace eur
