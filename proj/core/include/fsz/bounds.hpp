#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsz/families.hpp"
#include "fsz/functional.hpp"

namespace fsz {

enum class Side { Upper, Lower };
enum class FunctionClass { S, K };

std::string_view side_name(Side side);
std::string_view function_class_name(FunctionClass fc);

/// A family on which a bound's equality case occurs, with the parameter
/// pinned where the bound pins it (alpha for the convex family) and the
/// free parameters described in `note`.
struct ExtremalRecipe {
  Family family;
  std::optional<double> alpha;  // set for ConvexAlpha recipes
  std::string note;             // e.g. "any |zeta| = 1", "any rotation"

  std::string description() const;
};

/// One sharp-bound evaluation: the value of the piecewise bound at
/// (lambda, mu), the active branch, and whether equality is attained in the
/// class (with the attaining family when it is).
struct BoundReport {
  double value = 0.0;
  Side side = Side::Upper;
  FunctionClass function_class = FunctionClass::S;
  std::string regime;
  bool attainable = false;
  std::vector<ExtremalRecipe> extremals;  // non-empty iff attainable
};

/// Sharp upper bound of F over the univalent class S:
///   1                      if |1 - lambda| <= mu/2,
///   4|1 - lambda| - 2mu + 1 otherwise.
/// Attained by the zero-a2 family in the first branch, and by Koebe
/// rotations for real lambda >= 1 + mu/2 (both families at equality).
BoundReport upper_S(const FunctionalParams& params);

/// Sharp lower bound of F over S:
///   -mu / sqrt(|1 - lambda|)  if |1 - lambda| > mu^2/4,
///   -2 mu                     otherwise (also the universal bound at lambda = 1).
/// Attained by the lower-extremal family for real lambda <= 3/4 with
/// lambda < 1 - mu^2/4, and by Koebe rotations at lambda = 3/4, mu >= 1.
BoundReport lower_S(const FunctionalParams& params);

/// Sharp upper bound of F over the convex class K:
///   1/3                 if |1 - lambda| <= 1/3 + mu,
///   |1 - lambda| - mu   otherwise.
/// Attained by f_0 and f_1 respectively, for every complex lambda.
BoundReport upper_K(const FunctionalParams& params);

/// Sharp lower bound of F over K. For mu > 2/3:
///   -1/3 - mu^2 / (4(|1 - lambda| + 1/3))  if |1 - lambda| >= mu/2 - 1/3,
///   |1 - lambda| - mu                      otherwise.
/// For mu <= 2/3 the theorem hypothesis fails and the universal bound -mu is
/// returned with regime "trivial". The first branch is attained by
/// f_{t0}, t0 = mu / (2(|1 - lambda| + 1/3)), for real lambda with
/// 1/3 - (3/4)mu^2 <= 1 - lambda <= 1/3 - mu/2; the second by f_1 and its
/// rotations.
BoundReport lower_K(const FunctionalParams& params);

/// Upper bound for S obtained by folding mu into the classical bound:
/// classical_fs_bound(lambda + mu/2). Requires mu > 0 and
/// 0 <= lambda + mu/2 <= 1 (real lambda); throws std::domain_error otherwise.
double shifted_classical_upper(double lambda, double mu);

/// The better of the two lower bounds for S:
///   -mu / sqrt(|1 - lambda|)  if |1 - lambda| >= max(mu^2/4, 1/4),
///   -2 mu                     otherwise.
double combined_lower_S(const FunctionalParams& params);

/// Envelope quadratic in t = |a2| for the S upper bound:
///   |1 - lambda| t^2 - mu t + 1,  t in [0, 2].
/// upper_S equals max{envelope(0), envelope(2)}.
double envelope_upper_S(double t, const FunctionalParams& params);

/// Envelope quadratic for the K upper bound:
///   (|1 - lambda| - 1/3) t^2 - mu t + 1/3,  t in [0, 1].
double envelope_upper_K(double t, const FunctionalParams& params);

/// Envelope quadratic for the K lower bound:
///   (|1 - lambda| + 1/3) t^2 - mu t - 1/3,  t in [0, 1].
/// Its minimum over [0, 1] is the first branch of lower_K when the vertex
/// t0 = mu / (2(|1 - lambda| + 1/3)) lies in [0, 1].
double envelope_lower_K(double t, const FunctionalParams& params);

}  // namespace fsz
