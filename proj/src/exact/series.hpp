#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exact/bigfloat.hpp"
#include "exact/rational.hpp"

namespace elsv {

namespace detail {

template <class T>
struct SeriesScalar;

template <>
struct SeriesScalar<Rat> {
  static bool is_zero(const Rat& x) { return x == 0; }
  static bool is_one(const Rat& x) { return x == 1; }
  static Rat from_long(long v) { return Rat(v); }
  static Rat from_rat(const Rat& v) { return v; }
  static Rat log_constant(const Rat& c) {
    if (c != 1) fail(ErrorCode::Precondition, "series_log: constant term must be 1 for exact series");
    return Rat(0);
  }
  static Rat exp_constant(const Rat& c) {
    if (c != 0) fail(ErrorCode::Precondition, "series_exp: constant term must be 0 for exact series");
    return Rat(1);
  }
  static Rat sqrt_constant(const Rat& c) {
    if (c != 1) fail(ErrorCode::Precondition, "series_sqrt: constant term must be 1 for exact series");
    return Rat(1);
  }
};

template <>
struct SeriesScalar<BigComplex> {
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
  static bool is_one(const BigComplex& x) { return x.im.is_zero() && x.re == BigFloat(1L); }
  static BigComplex from_long(long v) { return BigComplex(v); }
  static BigComplex from_rat(const Rat& v) { return BigComplex(v); }
  static BigComplex log_constant(const BigComplex& c) {
    if (c.is_zero()) fail(ErrorCode::Precondition, "series_log: zero constant term");
    return log(c);
  }
  static BigComplex exp_constant(const BigComplex& c) { return exp(c); }
  static BigComplex sqrt_constant(const BigComplex& c) {
    if (c.is_zero()) fail(ErrorCode::Precondition, "series_sqrt: zero constant term");
    return sqrt(c);
  }
};

}  // namespace detail

/// Power series c_0 + c_1 t + ... + c_M t^M modulo t^{M+1}.
template <class T>
class TruncSeries {
  using S = detail::SeriesScalar<T>;

 public:
  explicit TruncSeries(std::size_t order = 0) : c_(order + 1, S::from_long(0)) {}
  TruncSeries(std::vector<T> coeffs, std::size_t order) : c_(std::move(coeffs)) {
    c_.resize(order + 1, S::from_long(0));
  }

  static TruncSeries constant(T value, std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  /// The series t (zero when order is 0).
  static TruncSeries variable(std::size_t order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = S::from_long(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  /// Coefficient of t^k, zero above the truncation order.
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S::from_long(0); }
  const std::vector<T>& coefficients() const { return c_; }

  TruncSeries truncated(std::size_t order) const {
    std::vector<T> c(c_.begin(), c_.begin() + std::min(order + 1, c_.size()));
    return TruncSeries(std::move(c), order);
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    shrink_to(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    shrink_to(o.order());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncSeries& operator*=(const T& scalar) {
    for (auto& x : c_) x *= scalar;
    return *this;
  }
  TruncSeries operator-() const {
    TruncSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const T& s) { return a *= s; }
  friend TruncSeries operator*(const T& s, TruncSeries a) { return a *= s; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    std::size_t m = std::min(a.order(), b.order());
    TruncSeries r(m);
    for (std::size_t i = 0; i <= m; ++i) {
      if (S::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.c_ == b.c_;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const {
    if (S::is_zero(c_[0])) fail(ErrorCode::Precondition, "series_inverse: zero constant term");
    std::size_t m = order();
    TruncSeries r(m);
    T inv0 = S::from_long(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k <= m; ++k) {
      T acc = S::from_long(0);
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }

  TruncSeries derivative() const {
    std::size_t m = order();
    TruncSeries r(m == 0 ? 0 : m - 1);
    for (std::size_t k = 1; k <= m; ++k) r.c_[k - 1] = c_[k] * S::from_long(static_cast<long>(k));
    return r;
  }

  /// Antiderivative with zero constant term, one order higher.
  TruncSeries integral() const {
    TruncSeries r(order() + 1);
    for (std::size_t k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / S::from_long(static_cast<long>(k + 1));
    return r;
  }

  TruncSeries log() const {
    T c0 = S::log_constant(c_[0]);
    TruncSeries r = (derivative() * inverse()).integral().truncated(order());
    r.c_[0] = c0;
    return r;
  }

  TruncSeries exp() const {
    std::size_t m = order();
    T e0 = S::exp_constant(c_[0]);
    // f' = f g' solved coefficient by coefficient.
    TruncSeries r(m);
    r.c_[0] = e0;
    for (std::size_t k = 1; k <= m; ++k) {
      T acc = S::from_long(0);
      for (std::size_t j = 1; j <= k; ++j)
        acc += c_[j] * r.c_[k - j] * S::from_long(static_cast<long>(j));
      r.c_[k] = acc / S::from_long(static_cast<long>(k));
    }
    return r;
  }

  TruncSeries sqrt() const {
    std::size_t m = order();
    TruncSeries r(m);
    r.c_[0] = S::sqrt_constant(c_[0]);
    T two_r0 = r.c_[0] * S::from_long(2);
    for (std::size_t k = 1; k <= m; ++k) {
      T acc = c_[k];
      for (std::size_t j = 1; j < k; ++j) acc -= r.c_[j] * r.c_[k - j];
      r.c_[k] = acc / two_r0;
    }
    return r;
  }

  TruncSeries pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    TruncSeries result = constant(S::from_long(1), order());
    TruncSeries base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  /// this(inner(t)); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const {
    if (!S::is_zero(inner.c_[0]))
      fail(ErrorCode::Precondition, "series_compose: inner series has nonzero constant term");
    std::size_t m = std::min(order(), inner.order());
    TruncSeries r(m);
    // Horner from the top coefficient.
    for (std::size_t k = order() + 1; k-- > 0;) {
      r = r * inner.truncated(m);
      r.c_[0] += c_[k];
    }
    return r;
  }

  /// Compositional inverse g with this(g(t)) = t; requires c_0 = 0, c_1 != 0.
  TruncSeries reversion() const {
    if (!S::is_zero(c_[0]) || order() < 1 || S::is_zero(c_[1]))
      fail(ErrorCode::Precondition, "series_reversion: need zero constant and nonzero linear term");
    std::size_t m = order();
    TruncSeries g = variable(m) * (S::from_long(1) / c_[1]);
    // Newton iteration: g <- g - (f(g) - t) / f'(g). Each step doubles the
    // number of correct coefficients.
    TruncSeries fprime = derivative();
    for (std::size_t correct = 1; correct <= 2 * m; correct *= 2) {
      TruncSeries residual = compose(g) - variable(m);
      TruncSeries slope = fprime.compose(g.truncated(fprime.order())).inverse();
      TruncSeries step = (residual * TruncSeries(slope.c_, m));
      g -= step;
    }
    return g;
  }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<T> c_;
};

using RatSeries = TruncSeries<Rat>;
using ComplexSeries = TruncSeries<BigComplex>;

inline RatSeries series_log(const RatSeries& f) { return f.log(); }
inline RatSeries series_exp(const RatSeries& f) { return f.exp(); }
inline RatSeries series_inverse(const RatSeries& f) { return f.inverse(); }
inline RatSeries series_compose(const RatSeries& outer, const RatSeries& inner) { return outer.compose(inner); }

}  // namespace elsv
