#pragma once

// Power series in a distinguished variable t, truncated modulo t^(N+1).

#include <string>
#include <utility>
#include <vector>

#include "gwadams/errors.hpp"
#include "gwadams/polyring.hpp"

namespace gwadams::poly {

template <class R>
class TruncSeries {
 public:
  /// Coefficients of t^0..t^order; missing trailing coefficients are zero.
  TruncSeries(std::vector<R> coeffs, int order, const R& one) : order_(order), one_(one) {
    if (order < 0) throw OrderError("truncation order must be non-negative");
    if (static_cast<int>(coeffs.size()) > order + 1) coeffs.resize(order + 1, zero());
    while (static_cast<int>(coeffs.size()) < order + 1) coeffs.push_back(zero());
    coeffs_ = std::move(coeffs);
  }

  static TruncSeries identity(int order, const R& one) { return TruncSeries({one}, order, one); }

  int order() const { return order_; }
  const R& one() const { return one_; }
  R zero() const { return one_ * Integer(0); }

  const R& operator[](int n) const {
    if (n < 0 || n > order_)
      throw OrderError("coefficient t^" + std::to_string(n) + " beyond truncation order " +
                       std::to_string(order_));
    return coeffs_[n];
  }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Same series seen at a lower truncation order.
  TruncSeries truncated(int order) const {
    if (order > order_) throw OrderError("cannot raise the truncation order of a series");
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1), order, one_);
  }

  bool operator==(const TruncSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }

 private:
  int order_;
  R one_;
  std::vector<R> coeffs_;
};

/// Product modulo t^(min(N_f, N_g) + 1).
template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<R> out(n + 1, f.zero());
  for (int i = 0; i <= n; ++i) {
    if (f[i] == f.zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g[j] == g.zero()) continue;
      out[i + j] += f[i] * g[j];
    }
  }
  return TruncSeries<R>(std::move(out), n, f.one());
}

/// Multiplicative inverse; the constant coefficient must be exactly 1.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
  if (!(f[0] == f.one())) throw InvertibilityError("series constant coefficient is not 1");
  const int n = f.order();
  std::vector<R> g(n + 1, f.zero());
  g[0] = f.one();
  for (int k = 1; k <= n; ++k) {
    R acc = f.zero();
    for (int i = 1; i <= k; ++i) {
      if (f[i] == f.zero()) continue;
      acc += f[i] * g[k - i];
    }
    g[k] = acc * Integer(-1);
  }
  return TruncSeries<R>(std::move(g), n, f.one());
}

/// f^e for any integer e (negative exponents go through series_inverse).
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& f, long e) {
  TruncSeries<R> base = e < 0 ? series_inverse(f) : f;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  TruncSeries<R> result = TruncSeries<R>::identity(f.order(), f.one());
  while (k) {
    if (k & 1UL) result = series_mul(result, base);
    k >>= 1;
    if (k) base = series_mul(base, base);
  }
  return result;
}

using PolySeries = TruncSeries<MultiPoly>;

}  // namespace gwadams::poly
