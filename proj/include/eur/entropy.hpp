#pragma once

// Entropies in bits.

#include <cstddef>
#include <span>
#include <vector>

#include "eur/matrix.hpp"

namespace eur {

/// Discrete probability distribution. Entries in [0, 1] summing to 1 within
/// 1e-10; entries within 1e-12 of the interval are clamped into it.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_.at(i); }

 private:
  std::vector<double> p_;
};

double shannon_entropy(const ProbDist& p);
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const DensityMatrix& rho);

/// H(AB) - H(B), where B is factor `condition_on` of a bipartite state.
double conditional_entropy(const DensityMatrix& rho_ab, std::size_t condition_on);

/// I(A:B) = H(A) + H(B) - H(AB) for a bipartite state.
double mutual_information(const DensityMatrix& rho_ab);

}  // namespace eur
