#include "eur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eur/error.hpp"

namespace eur {
namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.num_factors() != 2)
    throw PreconditionError(std::string(what) + ": expected a bipartite state, got " +
                            std::to_string(rho.num_factors()) + " factors");
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probabilities) : p_(std::move(probabilities)) {
  if (p_.empty()) throw PreconditionError("ProbDist: empty distribution");
  for (double& x : p_) {
    if (!(x >= -1e-12 && x <= 1.0 + 1e-12))
      throw PreconditionError("ProbDist: probability " + std::to_string(x) + " outside [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
  }
  double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-10)
    throw PreconditionError("ProbDist: probabilities sum to " + std::to_string(sum));
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p <= 0.0) continue;  // 0 log 0 = 0
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

double shannon_entropy(const ProbDist& p) { return shannon_entropy(std::span<const double>(p.probabilities())); }

double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum s = hermitian_spectrum(rho);
  return shannon_entropy(std::span<const double>(s.eigenvalues.data(), static_cast<std::size_t>(s.eigenvalues.size())));
}

double conditional_entropy(const DensityMatrix& rho_ab, std::size_t condition_on) {
  require_bipartite(rho_ab, "conditional_entropy");
  if (condition_on > 1) throw PreconditionError("conditional_entropy: condition_on must be 0 or 1");
  return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace(rho_ab, {condition_on}));
}

double mutual_information(const DensityMatrix& rho_ab) {
  require_bipartite(rho_ab, "mutual_information");
  return von_neumann_entropy(partial_trace(rho_ab, {0})) + von_neumann_entropy(partial_trace(rho_ab, {1})) -
         von_neumann_entropy(rho_ab);
}

}  // namespace eur
