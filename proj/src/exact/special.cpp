#include "exact/special.hpp"

#include <map>
#include <mutex>

#include "error.hpp"

namespace elsv {

namespace {

// Entries are immutable once inserted and std::map never moves nodes, so the
// returned references stay valid across later insertions.
std::mutex g_bernoulli_mutex;
std::map<unsigned, std::vector<Rat>> g_bernoulli;

// t / (e^t - 1) as the inverse of (e^t - 1)/t = sum t^k/(k+1)!.
RatSeries bernoulli_number_egf(std::size_t order) {
  RatSeries denom(order);
  for (std::size_t k = 0; k <= order; ++k) denom[k] = Rat(1) / Rat(factorial(static_cast<unsigned>(k + 1)));
  return denom.inverse();
}

std::vector<Rat> compute_bernoulli_polynomial(unsigned l) {
  // [t^l] e^{xt} t/(e^t-1) = sum_j x^j/j! * beta_{l-j}, where beta_m = B_m/m!.
  RatSeries beta = bernoulli_number_egf(l);
  Rat lfact(factorial(l));
  std::vector<Rat> coeffs(l + 1);
  for (unsigned j = 0; j <= l; ++j) coeffs[j] = lfact * beta[l - j] / Rat(factorial(j));
  return coeffs;
}

}  // namespace

const std::vector<Rat>& bernoulli_polynomial_coefficients(unsigned l) {
  {
    std::lock_guard lock(g_bernoulli_mutex);
    auto it = g_bernoulli.find(l);
    if (it != g_bernoulli.end()) return it->second;
  }
  std::vector<Rat> coeffs = compute_bernoulli_polynomial(l);
  std::lock_guard lock(g_bernoulli_mutex);
  return g_bernoulli.try_emplace(l, std::move(coeffs)).first->second;
}

Rat bernoulli_polynomial(unsigned l, const Rat& x) {
  const auto& c = bernoulli_polynomial_coefficients(l);
  Rat acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
  return acc;
}

std::vector<Rat> monotone_kappa_coefficients(unsigned count) {
  if (count < 1) fail(ErrorCode::InvalidArgument, "monotone_kappa_coefficients: need at least one coefficient");
  RatSeries f(count);
  for (unsigned k = 0; k <= count; ++k) f[k] = Rat(double_factorial(2L * k + 1));
  RatSeries lg = f.log();
  std::vector<Rat> out(count);
  for (unsigned l = 1; l <= count; ++l) out[l - 1] = -lg[l];
  return out;
}

Rat gaussian_moment_coefficient(unsigned m) {
  if (m % 2 == 1) return Rat(0);
  return Rat(double_factorial(static_cast<long>(m) - 1));
}

RatSeries gaussian_moment(unsigned k, std::size_t order) {
  RatSeries s(order);
  if (k <= order) s[k] = gaussian_moment_coefficient(2 * k);
  return s;
}

}  // namespace elsv
