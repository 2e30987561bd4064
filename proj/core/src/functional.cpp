#include "fsz/functional.hpp"

#include <cmath>
#include <stdexcept>

namespace fsz {

double fekete_szego_gen(const CoeffPair& pair, const FunctionalParams& params) {
  if (!(params.mu > 0.0)) {
    throw std::invalid_argument("fekete_szego_gen: mu must be positive");
  }
  return std::abs(pair.a3 - params.lambda * pair.a2 * pair.a2) - params.mu * std::abs(pair.a2);
}

double fs_residual(const CoeffPair& pair) {
  return std::abs(pair.a3 - pair.a2 * pair.a2);
}

double trimble_slack(const CoeffPair& pair) {
  const double t = std::abs(pair.a2);
  return (1.0 - t * t) / 3.0 - fs_residual(pair);
}

double classical_fs_bound(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::domain_error("classical_fs_bound: lambda must lie in [0, 1]");
  }
  if (lambda == 1.0) return 1.0;
  return 1.0 + 2.0 * std::exp(-2.0 * lambda / (1.0 - lambda));
}

}  // namespace fsz
