#pragma once

#include <string>
#include <vector>

#include "exact/rational.hpp"

namespace elsv {

/// Coefficients (increasing degree) of the r-th cyclotomic polynomial.
const std::vector<Rat>& cyclotomic_polynomial(int r);

/// Element of Q(J), J a primitive r-th root of unity, stored as its reduced
/// polynomial representative modulo the r-th cyclotomic polynomial.
class Cyclotomic {
 public:
  explicit Cyclotomic(int r, const Rat& value = Rat(0));
  /// J^k for any integer k.
  static Cyclotomic root_power(int r, long k);

  int order() const { return r_; }
  const std::vector<Rat>& coefficients() const { return c_; }
  bool is_zero() const;
  /// True if the element is rational; then `value` receives it.
  bool is_rational(Rat* value = nullptr) const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rat& s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rat& s) { return a *= s; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.r_ == b.r_ && a.c_ == b.c_; }

 private:
  void reduce();
  int r_;
  std::vector<Rat> c_;
};

enum class BasisDirection { FlatToIdempotent, IdempotentToFlat };

/// Converts coordinates between the flat basis v_1..v_r and the idempotent
/// basis e_1..e_r, related by v_a = sum_i (J^{ai}/r) e_i.
std::vector<Cyclotomic> basis_change(const std::vector<Cyclotomic>& coords, BasisDirection direction);

/// The pairing eta(v_a, v_b) = delta_{a+b = 0 mod r}/r expressed in the
/// idempotent basis: entry [i][j] is eta(e_{i+1}, e_{j+1}).
std::vector<std::vector<Cyclotomic>> idempotent_pairing(int r);

}  // namespace elsv
