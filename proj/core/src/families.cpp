#include "fsz/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsz {

namespace {

constexpr double kUnitModulusTol = 1e-12;

void require_unit_modulus(Complex zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > kUnitModulusTol) {
    throw std::invalid_argument("zeta must have unit modulus");
  }
}

Complex unit_phase(double theta) { return std::polar(1.0, theta); }

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::KoebeRotation: return "KoebeRotation";
    case Family::TwoParam: return "TwoParam";
    case Family::ZeroA2: return "ZeroA2";
    case Family::LowerExtremal: return "LowerExtremal";
    case Family::ConvexAlpha: return "ConvexAlpha";
  }
  return "unknown";
}

FamilyMember koebe_rotation(double theta) {
  FamilyMember m;
  m.family = Family::KoebeRotation;
  m.params.theta = theta;
  m.a2 = 2.0 * unit_phase(theta);
  m.a3 = 3.0 * unit_phase(2.0 * theta);
  return m;
}

FamilyMember two_param(Complex b, Complex zeta) {
  require_unit_modulus(zeta);
  if (std::abs(b) > 2.0) {
    throw std::domain_error("two_param: |b| > 2, the map is not univalent in the disk");
  }
  FamilyMember m;
  m.family = Family::TwoParam;
  m.params.b = b;
  m.params.zeta = zeta;
  m.a2 = b * zeta;
  m.a3 = (b * b - 1.0) * zeta * zeta;
  return m;
}

FamilyMember zero_a2(Complex zeta) {
  require_unit_modulus(zeta);
  FamilyMember m;
  m.family = Family::ZeroA2;
  m.params.zeta = zeta;
  m.a2 = 0.0;
  m.a3 = -zeta * zeta;
  return m;
}

FamilyMember lower_extremal(Complex lambda, Complex zeta) {
  require_unit_modulus(zeta);
  if (lambda == Complex{1.0, 0.0}) {
    throw std::domain_error("lower_extremal: undefined at lambda = 1");
  }
  const double d = std::abs(1.0 - lambda);
  if (d < 0.25) {
    throw std::domain_error(
        "lower_extremal: |1 - lambda| < 1/4 makes 1/sqrt(|1 - lambda|) > 2, not univalent");
  }
  const double b = 1.0 / std::sqrt(d);
  FamilyMember m = two_param(Complex{b, 0.0}, zeta);
  m.family = Family::LowerExtremal;
  m.params.lambda = lambda;
  return m;
}

FamilyMember convex_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("convex_alpha: alpha must lie in [0, 1]");
  }
  FamilyMember m;
  m.family = Family::ConvexAlpha;
  m.params.alpha = alpha;
  m.a2 = alpha;
  m.a3 = (2.0 * alpha * alpha + 1.0) / 3.0;
  return m;
}

namespace {

// z * recip(denominator), with the denominator given by its coefficients up
// to degree 2. Exact for all rational inputs up to roundoff.
TruncatedSeries rational_expansion(Complex d1, Complex d2, int order) {
  auto den = TruncatedSeries::one(order);
  den = add(den, TruncatedSeries::monomial(order, 1, d1));
  den = add(den, TruncatedSeries::monomial(order, 2, d2));
  return mul(TruncatedSeries::monomial(order, 1), recip(den));
}

TruncatedSeries convex_alpha_expansion(double alpha, int order) {
  // Integrand ((1+t)/(1-t))^alpha / (1-t^2) at order-1, then integrate.
  const int n = order - 1;
  auto one_plus = add(TruncatedSeries::one(n), TruncatedSeries::monomial(n, 1));
  auto one_minus = add(TruncatedSeries::one(n), TruncatedSeries::monomial(n, 1, {-1.0, 0.0}));
  auto ratio = mul(one_plus, recip(one_minus));
  auto powered = binomial_pow(ratio, alpha);
  auto one_minus_sq = add(TruncatedSeries::one(n), TruncatedSeries::monomial(n, 2, {-1.0, 0.0}));
  return integrate(mul(powered, recip(one_minus_sq)));
}

}  // namespace

TruncatedSeries expand(const FamilyMember& member, int order) {
  if (order < 3) {
    throw std::invalid_argument("expand: order must be >= 3");
  }
  switch (member.family) {
    case Family::KoebeRotation: {
      // (1 - e^{i theta} z)^2 = 1 - 2 e^{i theta} z + e^{2 i theta} z^2.
      const Complex e = std::polar(1.0, member.params.theta);
      return rational_expansion(-2.0 * e, e * e, order);
    }
    case Family::TwoParam:
    case Family::LowerExtremal: {
      const Complex z2 = member.params.zeta * member.params.zeta;
      return rational_expansion(-member.params.b * member.params.zeta, z2, order);
    }
    case Family::ZeroA2: {
      const Complex z2 = member.params.zeta * member.params.zeta;
      return rational_expansion({0.0, 0.0}, z2, order);
    }
    case Family::ConvexAlpha:
      return convex_alpha_expansion(member.params.alpha, order);
  }
  throw std::logic_error("expand: unknown family");
}

CoeffPair rotate(const FamilyMember& member, double theta) {
  return {unit_phase(theta) * member.a2, unit_phase(2.0 * theta) * member.a3};
}

}  // namespace fsz
