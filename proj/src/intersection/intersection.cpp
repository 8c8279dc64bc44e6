#include "intersection/intersection.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace elsv {

void require_stable(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    fail(ErrorCode::Unstable, "unstable moduli space (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")");
}

namespace {

Rat dfact(long m) { return Rat(double_factorial(m)); }

Rat psi_rec(int g, std::vector<int> d, IntersectionCache& cache);

// Unstable correlators are zero inside the recursion.
Rat psi_or_zero(int g, std::vector<int> d, IntersectionCache& cache) {
  if (g < 0 || 2 * g - 2 + static_cast<int>(d.size()) <= 0) return Rat(0);
  return psi_rec(g, std::move(d), cache);
}

Rat psi_rec(int g, std::vector<int> d, IntersectionCache& cache) {
  const int n = static_cast<int>(d.size());
  long total = std::accumulate(d.begin(), d.end(), 0L);
  if (total != 3L * g - 3 + n) return Rat(0);
  std::sort(d.begin(), d.end());
  IntersectionKey key(g, d);
  if (auto hit = cache.find(key)) return *hit;

  Rat value;
  if (g == 0 && n == 3) {
    value = 1;
  } else if (g == 1 && n == 1) {
    // The genus-one seed; the recursion below would need the unstable
    // <tau_a tau_b>_0 terms to reach it.
    value = Rat(1, 24);
  } else {
    // Recurse on the largest exponent k = d.back() >= 1.
    const int k = d.back();
    std::vector<int> rest(d.begin(), d.end() - 1);
    Rat acc = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      std::vector<int> next = rest;
      int dj = next[j];
      next[j] = dj + k - 1;
      Rat c = dfact(2L * k + 2L * dj - 1) / dfact(2L * dj - 1);
      acc += c * psi_or_zero(g, next, cache);
    }
    Rat half_sum = 0;
    for (int a = 0; a <= k - 2; ++a) {
      int b = k - 2 - a;
      Rat c = dfact(2L * a + 1) * dfact(2L * b + 1);
      Rat inner = 0;
      std::vector<int> lower = rest;
      lower.push_back(a);
      lower.push_back(b);
      inner += psi_or_zero(g - 1, lower, cache);
      const std::size_t m = rest.size();
      for (int g1 = 0; g1 <= g; ++g1) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
          std::vector<int> left{a}, right{b};
          for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? left : right).push_back(rest[i]);
          Rat l = psi_or_zero(g1, left, cache);
          if (l == 0) continue;
          inner += l * psi_or_zero(g - g1, right, cache);
        }
      }
      half_sum += c * inner;
    }
    value = (acc + half_sum / 2) / dfact(2L * k + 1);
  }
  cache.insert(key, value);
  return value;
}

}  // namespace

Rat psi_intersection(int g, const std::vector<int>& psi, IntersectionCache& cache) {
  require_stable(g, static_cast<int>(psi.size()));
  for (int d : psi)
    if (d < 0) fail(ErrorCode::InvalidArgument, "negative psi exponent");
  return psi_rec(g, psi, cache);
}

namespace {

Rat kappa_rec(int g, std::vector<int> kappa, std::vector<int> psi, IntersectionCache& cache) {
  if (kappa.empty()) return psi_rec(g, std::move(psi), cache);
  const int n = static_cast<int>(psi.size());
  long total = std::accumulate(psi.begin(), psi.end(), 0L) + std::accumulate(kappa.begin(), kappa.end(), 0L);
  if (total != 3L * g - 3 + n) return Rat(0);
  IntersectionKey key(g, psi, kappa);
  if (auto hit = cache.find(key)) return *hit;

  // kappa_b (prod_j kappa_{a_j}) Psi = pi_*( psi_{n+1}^{b+1} prod_j pi^*kappa_{a_j} pi^*Psi )
  // with pi^*kappa_a = kappa_a - psi_{n+1}^a.
  std::vector<int> others(key.kappa.begin(), key.kappa.end() - 1);
  const int b = key.kappa.back();
  const std::size_t m = others.size();
  Rat value = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    int exponent = b + 1;
    std::vector<int> kept;
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        exponent += others[i];
        sign = -sign;
      } else {
        kept.push_back(others[i]);
      }
    }
    std::vector<int> lifted = key.psi;
    lifted.push_back(exponent);
    Rat term = kappa_rec(g, kept, lifted, cache);
    value += sign > 0 ? term : Rat(-term);
  }
  cache.insert(key, value);
  return value;
}

}  // namespace

Rat kappa_psi_intersection(int g, const std::vector<int>& kappa, const std::vector<int>& psi,
                           IntersectionCache& cache) {
  require_stable(g, static_cast<int>(psi.size()));
  for (int d : psi)
    if (d < 0) fail(ErrorCode::InvalidArgument, "negative psi exponent");
  std::vector<int> positive;
  Rat factor = 1;
  for (int b : kappa) {
    if (b < 0) fail(ErrorCode::InvalidArgument, "negative kappa index");
    // kappa_0 = 2g - 2 + n
    if (b == 0)
      factor *= 2 * g - 2 + static_cast<int>(psi.size());
    else
      positive.push_back(b);
  }
  return factor * kappa_rec(g, positive, psi, cache);
}

}  // namespace elsv
