#include "fsz/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fsz {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: coefficient vector must be non-empty");
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::one(int order) {
  auto s = zero(order);
  s.coeffs_[0] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, Complex scale) {
  if (k < 0 || k > order) {
    throw std::out_of_range("TruncatedSeries::monomial: k must satisfy 0 <= k <= order");
  }
  auto s = zero(order);
  s.coeffs_[static_cast<size_t>(k)] = scale;
  return s;
}

Complex TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) {
    throw std::out_of_range("TruncatedSeries::coeff: index " + std::to_string(k) +
                            " outside [0, " + std::to_string(order()) + "]");
  }
  return coeffs_[static_cast<size_t>(k)];
}

bool TruncatedSeries::is_normalized(double tol) const {
  if (order() < 1) return false;
  return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - Complex{1.0, 0.0}) <= tol;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
    c[static_cast<size_t>(k)] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries recip(const TruncatedSeries& a) {
  const Complex c0 = a.coeff(0);
  if (c0 == Complex{0.0, 0.0}) {
    throw std::domain_error("recip: series has zero constant term");
  }
  const int n = a.order();
  std::vector<Complex> r(static_cast<size_t>(n) + 1);
  r[0] = 1.0 / c0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) acc += a.coeff(j) * r[static_cast<size_t>(k - j)];
    r[static_cast<size_t>(k)] = -acc / c0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
  const int n = a.order();
  std::vector<Complex> c(static_cast<size_t>(n) + 2);
  c[0] = 0.0;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<size_t>(k) + 1] = a.coeff(k) / static_cast<double>(k + 1);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  const int n = a.order();
  if (n == 0) return TruncatedSeries::zero(0);
  std::vector<Complex> c(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    c[static_cast<size_t>(k) - 1] = a.coeff(k) * static_cast<double>(k);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_pow(const TruncatedSeries& a, double exponent) {
  if (a.coeff(0) != Complex{1.0, 0.0}) {
    throw std::domain_error("binomial_pow: constant term must be exactly 1");
  }
  const int n = a.order();
  if (exponent == 0.0) return TruncatedSeries::one(n);
  if (exponent == 1.0) return a;

  // g = a^p from g' a = p a' g:
  //   g_n = (1/n) * sum_{j=1..n} ((p+1) j - n) a_j g_{n-j},  g_0 = 1.
  std::vector<Complex> g(static_cast<size_t>(n) + 1);
  g[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) {
      const double w = (exponent + 1.0) * static_cast<double>(j) - static_cast<double>(k);
      acc += w * a.coeff(j) * g[static_cast<size_t>(k - j)];
    }
    g[static_cast<size_t>(k)] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(g));
}

}  // namespace fsz
