#pragma once

#include <string_view>

#include "fsz/functional.hpp"
#include "fsz/series.hpp"

namespace fsz {

enum class Family {
  KoebeRotation,   // z / (1 - e^{i theta} z)^2
  TwoParam,        // z / (1 - b zeta z + zeta^2 z^2), |b| <= 2, |zeta| = 1
  ZeroA2,          // z / (1 + zeta^2 z^2)
  LowerExtremal,   // TwoParam with b = 1/sqrt(|1 - lambda|)
  ConvexAlpha,     // integral of ((1+t)/(1-t))^alpha / (1 - t^2)
};

std::string_view family_name(Family family);

/// Flat parameter record; the family tag says which fields are meaningful.
struct FamilyParams {
  double theta = 0.0;          // KoebeRotation
  Complex b{0.0, 0.0};         // TwoParam
  Complex zeta{1.0, 0.0};      // TwoParam, ZeroA2, LowerExtremal
  Complex lambda{0.0, 0.0};    // LowerExtremal
  double alpha = 0.0;          // ConvexAlpha
};

/// A named extremal function with its closed-form (a2, a3). The coefficients
/// are fixed at construction from the closed form; series expansion is a
/// separate verification path (expand below).
struct FamilyMember {
  Family family;
  FamilyParams params;
  Complex a2;
  Complex a3;
};

/// Koebe rotation k_theta(z) = z / (1 - e^{i theta} z)^2:
/// a2 = 2 e^{i theta}, a3 = 3 e^{2 i theta}.
FamilyMember koebe_rotation(double theta);

/// z / (1 - b zeta z + zeta^2 z^2): a2 = b zeta, a3 = (b^2 - 1) zeta^2.
/// Satisfies |a3 - a2^2| = 1 exactly. Throws std::domain_error if |b| > 2
/// (the map has a pole in the disk) and std::invalid_argument if |zeta| is
/// not 1 within 1e-12.
FamilyMember two_param(Complex b, Complex zeta);

/// z / (1 + zeta^2 z^2): a2 = 0, a3 = -zeta^2. Equals two_param(0, zeta).
FamilyMember zero_a2(Complex zeta);

/// two_param(1/sqrt(|1 - lambda|), zeta), the family attaining the sharp
/// lower bound on S. Requires lambda != 1 and |1 - lambda| >= 1/4 (at
/// equality b = 2 and the map is a Koebe rotation, still univalent).
FamilyMember lower_extremal(Complex lambda, Complex zeta);

/// Convex extremal f_alpha(z) = integral_0^z ((1+t)/(1-t))^alpha / (1-t^2) dt:
/// a2 = alpha, a3 = (2 alpha^2 + 1)/3. Requires 0 <= alpha <= 1.
FamilyMember convex_alpha(double alpha);

/// Taylor expansion of the member's defining formula via series arithmetic,
/// independent of the stored closed-form coefficients. Requires order >= 3.
TruncatedSeries expand(const FamilyMember& member, int order);

/// Coefficients of the rotation e^{-i theta} f(e^{i theta} z):
/// (e^{i theta} a2, e^{2 i theta} a3).
CoeffPair rotate(const FamilyMember& member, double theta);

inline CoeffPair coeff_pair(const FamilyMember& member) { return {member.a2, member.a3}; }

}  // namespace fsz
