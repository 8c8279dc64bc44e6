#include "exact/bigfloat.hpp"

#include <cstdlib>
#include <memory>

#include "error.hpp"

namespace elsv {

namespace {

thread_local unsigned t_precision = kDefaultPrecisionBits;
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

unsigned working_precision() noexcept { return t_precision; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(t_precision) {
  if (bits < MPFR_PREC_MIN || bits > 1u << 20)
    fail(ErrorCode::InvalidArgument, "precision out of range: " + std::to_string(bits));
  t_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(value_, t_precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_si(value_, v, kRnd);
}

BigFloat::BigFloat(double v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_d(value_, v, kRnd);
}

BigFloat::BigFloat(const Rat& v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_q(value_, v.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigInt& v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_z(value_, v.get_mpz_t(), kRnd);
}

BigFloat BigFloat::parse(std::string_view text) {
  BigFloat r;
  std::string s(text);
  char* end = nullptr;
  if (mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd), end == s.c_str() || *end != '\0')
    fail(ErrorCode::Parse, "invalid decimal '" + s + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

// Results are produced at the working precision, not the operand precision.
void adopt_working_precision(mpfr_t v) {
  if (mpfr_get_prec(v) != static_cast<mpfr_prec_t>(t_precision))
    mpfr_prec_round(v, t_precision, kRnd);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  adopt_working_precision(value_);
  mpfr_add(value_, value_, o.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  adopt_working_precision(value_);
  mpfr_sub(value_, value_, o.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  adopt_working_precision(value_);
  mpfr_mul(value_, value_, o.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  adopt_working_precision(value_);
  mpfr_div(value_, value_, o.value_, kRnd);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r;
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }
int BigFloat::sign() const { return mpfr_sgn(value_); }
unsigned BigFloat::precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
double BigFloat::to_double() const { return mpfr_get_d(value_, kRnd); }

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) digits = 1;
  // mpfr_asprintf handles arbitrary exponents and digit counts.
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_annotated_string() const {
  // Enough decimal digits to round-trip the binary value.
  int digits = static_cast<int>(precision() * 0.30103) + 2;
  return to_string(digits) + "@" + std::to_string(precision());
}

BigFloat BigFloat::pi() {
  BigFloat r;
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

BigFloat parse_annotated(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) fail(ErrorCode::Parse, "missing precision annotation in '" + std::string(text) + "'");
  std::string bits_text(text.substr(at + 1));
  char* end = nullptr;
  unsigned long bits = std::strtoul(bits_text.c_str(), &end, 10);
  if (bits_text.empty() || *end != '\0') fail(ErrorCode::Parse, "invalid precision annotation in '" + std::string(text) + "'");
  PrecisionScope scope(static_cast<unsigned>(bits));
  return BigFloat::parse(text.substr(0, at));
}

#define ELSV_UNARY(name, fn)           \
  BigFloat name(const BigFloat& x) {   \
    BigFloat r;                        \
    fn(r.raw(), x.raw(), kRnd);        \
    return r;                          \
  }

ELSV_UNARY(abs, mpfr_abs)
ELSV_UNARY(sqrt, mpfr_sqrt)
ELSV_UNARY(exp, mpfr_exp)
ELSV_UNARY(log, mpfr_log)
ELSV_UNARY(sin, mpfr_sin)
ELSV_UNARY(cos, mpfr_cos)

#undef ELSV_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r;
  mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat r;
  mpfr_rootn_ui(r.raw(), x.raw(), k, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat d = o.re * o.re + o.im * o.im;
  if (d.is_zero()) fail(ErrorCode::InvalidArgument, "complex division by zero");
  BigFloat r = (re * o.re + im * o.im) / d;
  BigFloat i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  return "(" + re.to_string(digits) + "," + im.to_string(digits) + ")";
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigFloat abs(const BigComplex& z) {
  BigFloat r;
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), kRnd);
  return r;
}

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex polar(const BigFloat& modulus, const BigFloat& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

BigComplex exp(const BigComplex& z) { return polar(exp(z.re), z.im); }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) fail(ErrorCode::InvalidArgument, "complex log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return {};
  BigFloat two(2);
  return polar(sqrt(abs(z)), arg(z) / two);
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex result(1);
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

BigComplex unit_root(long k, long n) {
  long m = ((k % n) + n) % n;
  // Exact values where they exist, to keep symmetric configurations exact.
  if (m == 0) return BigComplex(1);
  if (2 * m == n) return BigComplex(-1);
  if (4 * m == n) return {BigFloat(0L), BigFloat(1L)};
  if (4 * m == 3 * n) return {BigFloat(0L), BigFloat(-1L)};
  BigFloat angle = BigFloat::pi() * BigFloat(2 * m) / BigFloat(n);
  return polar(BigFloat(1L), angle);
}

}  // namespace elsv
