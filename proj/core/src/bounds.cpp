#include "fsz/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fsz {

namespace {

void require_positive_mu(const FunctionalParams& params) {
  if (!(params.mu > 0.0)) {
    throw std::invalid_argument("bound: mu must be positive");
  }
}

double offset(const FunctionalParams& params) { return std::abs(1.0 - params.lambda); }

bool is_real(Complex z) { return z.imag() == 0.0; }

ExtremalRecipe zero_a2_recipe() {
  return {Family::ZeroA2, std::nullopt, "any |zeta| = 1"};
}
ExtremalRecipe koebe_recipe() {
  return {Family::KoebeRotation, std::nullopt, "any rotation angle"};
}
ExtremalRecipe lower_extremal_recipe() {
  return {Family::LowerExtremal, std::nullopt, "any |zeta| = 1"};
}
ExtremalRecipe convex_recipe(double alpha, std::string note = {}) {
  return {Family::ConvexAlpha, alpha, std::move(note)};
}

}  // namespace

std::string_view side_name(Side side) {
  return side == Side::Upper ? "upper" : "lower";
}

std::string_view function_class_name(FunctionClass fc) {
  return fc == FunctionClass::S ? "S" : "K";
}

std::string ExtremalRecipe::description() const {
  std::string out{family_name(family)};
  if (alpha.has_value()) {
    out += " alpha=" + std::to_string(*alpha);
  }
  if (!note.empty()) {
    out += ", " + note;
  }
  return out;
}

BoundReport upper_S(const FunctionalParams& params) {
  require_positive_mu(params);
  const double d = offset(params);
  const double mu = params.mu;
  BoundReport r;
  r.side = Side::Upper;
  r.function_class = FunctionClass::S;

  const bool koebe_attains = is_real(params.lambda) && params.lambda.real() >= 1.0 + mu / 2.0;
  if (d <= mu / 2.0) {
    r.value = 1.0;
    r.regime = "|1-lambda|<=mu/2";
    r.extremals.push_back(zero_a2_recipe());
    if (koebe_attains) r.extremals.push_back(koebe_recipe());  // lambda = 1 + mu/2
  } else {
    r.value = 4.0 * d - 2.0 * mu + 1.0;
    r.regime = "|1-lambda|>mu/2";
    if (koebe_attains) r.extremals.push_back(koebe_recipe());
  }
  r.attainable = !r.extremals.empty();
  return r;
}

BoundReport lower_S(const FunctionalParams& params) {
  require_positive_mu(params);
  const double d = offset(params);
  const double mu = params.mu;
  BoundReport r;
  r.side = Side::Lower;
  r.function_class = FunctionClass::S;

  if (params.lambda == Complex{1.0, 0.0}) {
    // The sqrt/Koebe dichotomy excludes lambda = 1; only the universal
    // -2 mu estimate applies and nothing is claimed sharp.
    r.value = -2.0 * mu;
    r.regime = "lambda=1";
    r.attainable = false;
    return r;
  }
  if (d > mu * mu / 4.0) {
    r.value = -mu / std::sqrt(d);
    r.regime = "|1-lambda|>mu^2/4";
    if (is_real(params.lambda) && params.lambda.real() <= 0.75 &&
        params.lambda.real() < 1.0 - mu * mu / 4.0) {
      r.extremals.push_back(lower_extremal_recipe());
    }
  } else {
    r.value = -2.0 * mu;
    r.regime = "|1-lambda|<=mu^2/4";
    if (is_real(params.lambda) && params.lambda.real() == 0.75 && mu >= 1.0) {
      r.extremals.push_back(koebe_recipe());
    }
  }
  r.attainable = !r.extremals.empty();
  return r;
}

BoundReport upper_K(const FunctionalParams& params) {
  require_positive_mu(params);
  const double d = offset(params);
  const double mu = params.mu;
  BoundReport r;
  r.side = Side::Upper;
  r.function_class = FunctionClass::K;

  if (d <= 1.0 / 3.0 + mu) {
    r.value = 1.0 / 3.0;
    r.regime = "|1-lambda|<=1/3+mu";
    r.extremals.push_back(convex_recipe(0.0));
  } else {
    r.value = d - mu;
    r.regime = "|1-lambda|>1/3+mu";
    r.extremals.push_back(convex_recipe(1.0));
  }
  r.attainable = true;
  return r;
}

BoundReport lower_K(const FunctionalParams& params) {
  require_positive_mu(params);
  const double d = offset(params);
  const double mu = params.mu;
  BoundReport r;
  r.side = Side::Lower;
  r.function_class = FunctionClass::K;

  if (mu <= 2.0 / 3.0) {
    // Outside the theorem hypothesis; fall back to F >= -mu |a2| >= -mu.
    r.value = -mu;
    r.regime = "trivial";
    if (params.lambda == Complex{1.0, 0.0}) {
      r.extremals.push_back(convex_recipe(1.0, "and rotations"));
    }
    r.attainable = !r.extremals.empty();
    return r;
  }

  const double a = d + 1.0 / 3.0;
  if (d >= mu / 2.0 - 1.0 / 3.0) {
    r.value = -1.0 / 3.0 - mu * mu / (4.0 * a);
    r.regime = "|1-lambda|>=mu/2-1/3";
    const double one_minus = 1.0 - params.lambda.real();
    if (is_real(params.lambda) && 1.0 / 3.0 - 0.75 * mu * mu <= one_minus &&
        one_minus <= 1.0 / 3.0 - mu / 2.0) {
      r.extremals.push_back(convex_recipe(mu / (2.0 * a), "vertex of the envelope"));
    }
  } else {
    r.value = d - mu;
    r.regime = "|1-lambda|<mu/2-1/3";
    r.extremals.push_back(convex_recipe(1.0, "and rotations"));
  }
  r.attainable = !r.extremals.empty();
  return r;
}

double shifted_classical_upper(double lambda, double mu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("shifted_classical_upper: mu must be positive");
  }
  const double s = lambda + mu / 2.0;
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("shifted_classical_upper: lambda + mu/2 must lie in [0, 1]");
  }
  return classical_fs_bound(s);
}

double combined_lower_S(const FunctionalParams& params) {
  require_positive_mu(params);
  const double d = offset(params);
  const double mu = params.mu;
  if (d >= std::max(mu * mu / 4.0, 0.25)) {
    return -mu / std::sqrt(d);
  }
  return -2.0 * mu;
}

double envelope_upper_S(double t, const FunctionalParams& params) {
  if (!(t >= 0.0 && t <= 2.0)) {
    throw std::domain_error("envelope_upper_S: t must lie in [0, 2]");
  }
  return offset(params) * t * t - params.mu * t + 1.0;
}

double envelope_upper_K(double t, const FunctionalParams& params) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("envelope_upper_K: t must lie in [0, 1]");
  }
  return (offset(params) - 1.0 / 3.0) * t * t - params.mu * t + 1.0 / 3.0;
}

double envelope_lower_K(double t, const FunctionalParams& params) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("envelope_lower_K: t must lie in [0, 1]");
  }
  return (offset(params) + 1.0 / 3.0) * t * t - params.mu * t - 1.0 / 3.0;
}

}  // namespace fsz
