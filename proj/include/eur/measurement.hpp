#pragma once

// Projective measurements on one factor of a bipartite state, the
// Maassen-Uffink overlap constant, and the Holevo quantity of the ensemble a
// measurement induces on the other factor.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eur/entropy.hpp"
#include "eur/matrix.hpp"

namespace eur {

struct Observable {
  std::string name;
  Matrix matrix;

  Observable(std::string name, Matrix matrix);
};

/// sigma_x, sigma_y, sigma_z of a four-level Dirac mode (spin-3/2 form),
/// in basis order (0, up, down, pair).
std::array<Observable, 3> spin_observables();

/// Looks up "x", "y" or "z"; throws PreconditionError otherwise.
Observable spin_observable(const std::string& label);

class ProjectiveBasis {
 public:
  /// Throws PreconditionError unless the d vectors are orthonormal in C^d.
  ProjectiveBasis(std::vector<Vector> vectors, std::string source);

  /// Columns of a unitary matrix.
  static ProjectiveBasis from_unitary(const Matrix& u, std::string source);

  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t j) const { return vectors_.at(j); }
  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::string& source() const noexcept { return source_; }

 private:
  std::vector<Vector> vectors_;
  std::string source_;
};

/// Eigenvectors ordered by descending eigenvalue, phase-fixed.
ProjectiveBasis eigenbasis(const Observable& obs);

struct OverlapTable {
  Eigen::MatrixXd c;  // c(j, k) = |<u_j|v_k>|^2
  double c1;          // max over j, k
};

OverlapTable overlap_table(const ProjectiveBasis& b1, const ProjectiveBasis& b2);

struct MeasuredEnsemble {
  ProbDist outcome_probs;
  /// Post-measurement state of the unmeasured factor per outcome; nullopt
  /// when the outcome probability is below kZeroOutcome.
  std::vector<std::optional<DensityMatrix>> conditional_states;
};

inline constexpr double kZeroOutcome = 1e-14;

/// Measures factor `measured` of a bipartite state in `basis`.
MeasuredEnsemble measure_ensemble(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured);

/// sum_j p_j |u_j><u_j| (x) rho_j, with the measurement register as factor 0.
DensityMatrix classical_quantum_state(const MeasuredEnsemble& ens, const ProjectiveBasis& basis);

/// sum_j (P_j (x) I) rho (P_j (x) I) applied directly to the joint state; the
/// measured factor keeps its position.
DensityMatrix dephase(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured);

/// Outcome probabilities <u_j|rho|u_j> of a single-system state.
ProbDist outcome_distribution(const DensityMatrix& rho, const ProjectiveBasis& basis);

/// H(M): Shannon entropy of the outcome distribution.
double outcome_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis);

/// J(B|M) = H(B) - sum_j p_j H(rho_{B|u_j}).
double holevo_quantity(const DensityMatrix& rho_ab, const ProjectiveBasis& basis, std::size_t measured);
double holevo_quantity(const MeasuredEnsemble& ens, const DensityMatrix& rho_b);

}  // namespace eur
