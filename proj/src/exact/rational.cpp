#include "exact/rational.hpp"

#include <cctype>

#include "error.hpp"

namespace elsv {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Unstable: return "unstable moduli space";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "I/O error";
    case ErrorCode::Resource: return "resource limit exceeded";
    case ErrorCode::Precision: return "precision loss";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Consistency: return "consistency violation";
    case ErrorCode::MissingEntry: return "missing entry";
  }
  return "unknown";
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

std::string to_pq_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_display_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return to_pq_string(x);
}

namespace {

BigInt parse_int(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) fail(ErrorCode::Parse, "invalid rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorCode::Parse, "invalid rational '" + std::string(whole) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  BigInt num = parse_int(text.substr(0, slash), text);
  BigInt den = parse_int(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt odd_double_factorial(long k) {
  // (2k-1)!!; for negative k use (2k-1)!! = (2k+1)!! / (2k+1).
  if (k >= 0) {
    BigInt r = 1;
    for (long j = 1; j <= 2 * k - 1; j += 2) r *= j;
    return r;
  }
  fail(ErrorCode::InvalidArgument, "odd_double_factorial: negative k has a rational value");
}

BigInt double_factorial(long n) {
  if (n < -1) fail(ErrorCode::InvalidArgument, "double_factorial: n < -1");
  BigInt r = 1;
  for (long j = n; j > 1; j -= 2) r *= j;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat rat_pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorCode::InvalidArgument, "rat_pow: 0 to a negative power");
    return rat_pow(Rat(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rat(num, den);
}

}  // namespace elsv
