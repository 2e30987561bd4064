#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fsz {

using Complex = std::complex<double>;

/// Finite Taylor coefficient vector c_0..c_order (coefficient of z^k at
/// index k). Arithmetic truncates to the minimum order of the operands, so
/// no operation fabricates coefficients it cannot know.
class TruncatedSeries {
 public:
  /// Default order used throughout: far above the k = 3 coefficients the
  /// bound computations need, cheap, and deep enough for truncation tests.
  static constexpr int kDefaultOrder = 16;

  /// order = coeffs.size() - 1; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  /// The unit series 1 + 0z + ... (multiplicative identity).
  static TruncatedSeries one(int order);
  /// scale * z^k, padded with zeros up to `order`. Requires 0 <= k <= order.
  static TruncatedSeries monomial(int order, int k, Complex scale = {1.0, 0.0});

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// c_k; throws std::out_of_range unless 0 <= k <= order.
  Complex coeff(int k) const;

  /// c_0 = 0 and c_1 = 1 within `tol`, the normalization of class-S expansions.
  bool is_normalized(double tol = 1e-12) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Coefficientwise sum, truncated to min(order_a, order_b).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product, truncated to min(order_a, order_b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse via the standard recurrence
///   r_0 = 1/c_0,  r_n = -(1/c_0) * sum_{k=1..n} c_k r_{n-k}.
/// Throws std::domain_error if c_0 = 0.
TruncatedSeries recip(const TruncatedSeries& a);

/// Term-by-term antiderivative with zero constant term; result order is
/// order + 1.
TruncatedSeries integrate(const TruncatedSeries& a);

/// Formal derivative; result order is max(order - 1, 0).
TruncatedSeries differentiate(const TruncatedSeries& a);

/// a^exponent for series with c_0 = 1 (principal branch anchored at 1),
/// computed by the recurrence obtained from (a^p)' * a = p * a' * a^p.
/// exponent 0 and 1 return exact results. Throws std::domain_error if
/// c_0 != 1.
TruncatedSeries binomial_pow(const TruncatedSeries& a, double exponent);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

}  // namespace fsz
