#include "chiodo/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "error.hpp"

namespace elsv {

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) fail(ErrorCode::Consistency, "cyclotomic division: degree too small");
  Poly q(a.size() - db, Rat(0));
  for (std::size_t k = a.size(); k-- > db;) {
    Rat lead = a[k];
    q[k - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= lead * b[j];
  }
  trim(a);
  if (!a.empty()) fail(ErrorCode::Consistency, "cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(int r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "cyclotomic polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<int, Poly> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
  }
  Poly p(r + 1, Rat(0));
  p[0] = -1;
  p[r] = 1;
  for (int d = 1; d < r; ++d)
    if (r % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return memo.try_emplace(r, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int r, const Rat& value) : r_(r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "cyclotomic field: order must be positive");
  c_.assign(cyclotomic_polynomial(r).size() - 1, Rat(0));
  c_[0] = value;
}

Cyclotomic Cyclotomic::root_power(int r, long k) {
  Cyclotomic x(r);
  long e = ((k % r) + r) % r;
  // J^e reduced via J^r = 1 first, then modulo the cyclotomic polynomial.
  std::vector<Rat> raw(static_cast<std::size_t>(std::max<long>(e + 1, static_cast<long>(x.c_.size()))), Rat(0));
  raw[e] = 1;
  x.c_ = std::move(raw);
  x.reduce();
  return x;
}

void Cyclotomic::reduce() {
  const Poly& m = cyclotomic_polynomial(r_);
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = c_.size(); k-- > dm;) {
    Rat lead = c_[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) c_[k - dm + j] -= lead * m[j];
  }
  c_.resize(dm, Rat(0));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational(Rat* value) const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  if (value) *value = c_[0];
  return true;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_display_string(c_[k]);
    if (k == 1) out += "*J";
    if (k > 1) out += "*J^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.r_ != r_) fail(ErrorCode::InvalidArgument, "cyclotomic: mismatched orders");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.r_ != r_) fail(ErrorCode::InvalidArgument, "cyclotomic: mismatched orders");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.r_ != b.r_) fail(ErrorCode::InvalidArgument, "cyclotomic: mismatched orders");
  Cyclotomic out(a.r_);
  out.c_.assign(a.c_.size() + b.c_.size(), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.reduce();
  return out;
}

std::vector<Cyclotomic> basis_change(const std::vector<Cyclotomic>& coords, BasisDirection direction) {
  const int r = static_cast<int>(coords.size());
  if (r == 0) fail(ErrorCode::InvalidArgument, "basis_change: empty vector");
  for (const auto& x : coords)
    if (x.order() != r) fail(ErrorCode::InvalidArgument, "basis_change: coordinates must live in Q(J) with J^r = 1");
  std::vector<Cyclotomic> out(r, Cyclotomic(r));
  for (int i = 1; i <= r; ++i)
    for (int a = 1; a <= r; ++a) {
      // Flat to idempotent: y_i = sum_a x_a J^{ai}/r. Inverse: x_a = sum_i J^{-ai} y_i.
      if (direction == BasisDirection::FlatToIdempotent)
        out[i - 1] += coords[a - 1] * Cyclotomic::root_power(r, static_cast<long>(a) * i) * Rat(1, r);
      else
        out[a - 1] += coords[i - 1] * Cyclotomic::root_power(r, -static_cast<long>(a) * i);
    }
  return out;
}

std::vector<std::vector<Cyclotomic>> idempotent_pairing(int r) {
  // e_i = sum_a J^{-ai} v_a.
  std::vector<std::vector<Cyclotomic>> eta(r, std::vector<Cyclotomic>(r, Cyclotomic(r)));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int a = 1; a <= r; ++a)
        for (int b = 1; b <= r; ++b) {
          if ((a + b) % r != 0) continue;
          eta[i - 1][j - 1] += Cyclotomic::root_power(r, -static_cast<long>(a) * i - static_cast<long>(b) * j) * Rat(1, r);
        }
  return eta;
}

}  // namespace elsv
