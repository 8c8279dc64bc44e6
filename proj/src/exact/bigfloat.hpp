#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "exact/rational.hpp"

namespace elsv {

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Working precision (bits) for newly created BigFloat values on this thread.
unsigned working_precision() noexcept;

/// Sets the thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// MPFR-backed real number. Every result is rounded to the working precision
/// current at the time it is produced.
class BigFloat {
 public:
  BigFloat();
  BigFloat(long v);  // NOLINT(google-explicit-constructor)
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT
  explicit BigFloat(double v);
  explicit BigFloat(const Rat& v);
  explicit BigFloat(const BigInt& v);
  /// Decimal text such as "-1.25e-3".
  static BigFloat parse(std::string_view text);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  bool is_zero() const;
  int sign() const;
  unsigned precision() const;
  double to_double() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;
  /// Decimal digits plus precision annotation, e.g. "2.5e-1@256".
  std::string to_annotated_string() const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  static BigFloat pi();

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Parses the output of BigFloat::to_annotated_string, returning the value at
/// the annotated precision.
BigFloat parse_annotated(std::string_view text);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(BigFloat r) : re(std::move(r)) {}  // NOLINT
  BigComplex(long r) : re(r) {}                 // NOLINT
  BigComplex(int r) : re(static_cast<long>(r)) {}  // NOLINT
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const Rat& r) : re(r) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string(int digits) const;
};

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// Principal branch.
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex polar(const BigFloat& modulus, const BigFloat& angle);
/// exp(2 pi i k / n)
BigComplex unit_root(long k, long n);

}  // namespace elsv
