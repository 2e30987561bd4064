#pragma once

#include <complex>

namespace fsz {

using Complex = std::complex<double>;

/// The pair (a2, a3) of second and third Taylor coefficients of a normalized
/// function f(z) = z + a2 z^2 + a3 z^3 + ... . The functionals below are
/// defined for any finite pair; class membership is the caller's concern.
struct CoeffPair {
  Complex a2;
  Complex a3;
};

/// Parameters (lambda, mu) of the generalized Fekete-Szego functional
///   F(f) = |a3 - lambda a2^2| - mu |a2|,  lambda complex, mu > 0.
struct FunctionalParams {
  Complex lambda;
  double mu = 0.0;
};

/// |a3 - lambda a2^2| - mu |a2|. Throws std::invalid_argument if mu <= 0.
double fekete_szego_gen(const CoeffPair& pair, const FunctionalParams& params);

/// The Fekete-Szego quantity at lambda = 1, |a3 - a2^2|. At most 1 on the
/// univalent class, with equality exactly on the two-parameter family
/// z / (1 - b zeta z + zeta^2 z^2).
double fs_residual(const CoeffPair& pair);

/// (1 - |a2|^2)/3 - |a3 - a2^2|: the slack in the Trimble inequality.
/// Nonnegative for convex functions, zero exactly on the convex extremal
/// family f_alpha.
double trimble_slack(const CoeffPair& pair);

/// The classical Fekete-Szego bound for real lambda in [0, 1]:
///   1 + 2 exp(-2 lambda / (1 - lambda)) for lambda < 1, and 1 at lambda = 1.
/// Throws std::domain_error outside [0, 1].
double classical_fs_bound(double lambda);

}  // namespace fsz
