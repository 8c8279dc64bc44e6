#include "chiodo/givental.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"
#include "exact/special.hpp"
#include "intersection/intersection.hpp"

namespace elsv {

int opposite_label(int r, int a) {
  int b = ((-a) % r + r) % r;
  return b == 0 ? r : b;
}

RMatrix RMatrix::inverse() const {
  RMatrix inv{r, {}};
  for (const auto& d : diagonal) inv.diagonal.push_back(d.inverse());
  return inv;
}

RMatrix chiodo_r_matrix(int r, std::size_t order) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "R-matrix: r must be positive");
  RMatrix R{r, {}};
  for (int a = 1; a <= r; ++a) {
    RatSeries e(order);
    for (std::size_t l = 1; l <= order; ++l) {
      Rat sign = l % 2 == 0 ? Rat(1) : Rat(-1);
      e[l] = sign * bernoulli_polynomial(static_cast<unsigned>(l + 1), make_rat(a, r)) / Rat(static_cast<long>(l * (l + 1)));
    }
    R.diagonal.push_back(e.exp());
  }
  return R;
}

bool satisfies_symplectic_condition(const RMatrix& R) {
  // eta pairs v_a with v_{-a}, so (R*)_{aa} = R_{-a,-a}.
  for (int a = 1; a <= R.r; ++a) {
    RatSeries reflected = R.entry(opposite_label(R.r, a));
    for (std::size_t k = 1; k <= reflected.order(); k += 2) reflected[k] = -reflected[k];
    if (R.entry(a) * reflected != RatSeries::constant(Rat(1), R.order())) return false;
  }
  return true;
}

Rat TFTData::pairing(int a, int b) const { return (a + b) % r == 0 ? Rat(1, r) : Rat(0); }

Rat TFTData::inverse_pairing(int a, int b) const { return (a + b) % r == 0 ? Rat(r) : Rat(0); }

Rat TFTData::amplitude(int g, const std::vector<int>& labels) const {
  const long n = static_cast<long>(labels.size());
  long total = std::accumulate(labels.begin(), labels.end(), 0L) - static_cast<long>(s) * (2 * g - 2 + n);
  if (total % r != 0) return Rat(0);
  return rat_pow(Rat(r), 2 * g - 1);
}

bool flat_unit_check(int r, int s) {
  if (r < 1 || s < 0 || s > r) fail(ErrorCode::InvalidArgument, "flat_unit_check: need r >= 1 and 0 <= s <= r");
  TFTData tft{r, s};
  const int unit = s == 0 ? r : s;
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      if (tft.amplitude(0, {unit, a, b}) != tft.pairing(a, b)) return false;
  return true;
}

KappaPoly dilaton_kappa_polynomial(const RMatrix& R_inverse, int s, int max_degree) {
  const int unit = s == 0 ? R_inverse.r : s;
  // t(u) = u (1 - R^{-1}_{ss}(u)) = sum_m t_m u^m, m >= 2.
  const RatSeries& rs = R_inverse.entry(unit);
  std::vector<Rat> t(max_degree + 2, Rat(0));
  for (int m = 2; m <= max_degree + 1; ++m) t[m] = -rs.coeff(static_cast<std::size_t>(m - 1));

  std::map<std::vector<int>, Rat> acc;
  acc[{}] = 1;
  // Non-decreasing exponent lists m_1 <= ... <= m_k; each ordered sequence
  // appears k!/prod(mult!) times, which cancels the 1/k! to 1/prod(mult!).
  std::vector<int> ms;
  std::function<void(int, int)> rec = [&](int min_m, int budget) {
    if (!ms.empty()) {
      Rat coeff = 1;
      for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        coeff /= Rat(factorial(static_cast<unsigned>(j - i)));
        i = j;
      }
      for (int m : ms) coeff *= t[m];
      if (coeff != 0) {
        // pi_* prod psi_{n+j}^{m_j} = sum over permutations of prod over
        // cycles of kappa_{sum (m_j - 1)}.
        std::vector<int> perm(ms.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<bool> seen(ms.size(), false);
          std::vector<int> kappas;
          for (std::size_t i = 0; i < ms.size(); ++i) {
            if (seen[i]) continue;
            int sum = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
              seen[j] = true;
              sum += ms[j] - 1;
            }
            kappas.push_back(sum);
          }
          std::sort(kappas.begin(), kappas.end());
          acc[kappas] += coeff;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    for (int m = min_m; m - 1 <= budget; ++m) {
      ms.push_back(m);
      rec(m, budget - (m - 1));
      ms.pop_back();
    }
  };
  rec(2, max_degree);

  KappaPoly out;
  for (auto& [kappas, coeff] : acc) {
    if (coeff == 0) continue;
    int degree = std::accumulate(kappas.begin(), kappas.end(), 0);
    out.push_back({kappas, degree, coeff});
  }
  return out;
}

TautExpression givental_action(int g, int n, const ChiodoParams& p, int max_degree) {
  if (static_cast<int>(p.a.size()) != n) fail(ErrorCode::InvalidArgument, "givental_action: need one label per leg");
  require_stable(g, n);
  validate_chiodo_params(g, p);
  if (max_degree < 0) max_degree = 3 * g - 3 + n;
  const int r = p.r;
  const TFTData tft{r, p.s};
  const RMatrix R_inv = chiodo_r_matrix(r, static_cast<std::size_t>(max_degree + 1)).inverse();

  TautExpression expr;
  expr.g = g;
  expr.n = n;
  expr.max_degree = max_degree;

  auto kappa = std::make_shared<const KappaPoly>(dilaton_kappa_polynomial(R_inv, p.s, max_degree));
  std::vector<std::shared_ptr<const RatSeries>> leg_by_label(r + 1);
  std::vector<std::shared_ptr<const Bivariate>> edge_by_label(r + 1);
  for (int a = 1; a <= r; ++a) {
    leg_by_label[a] = std::make_shared<const RatSeries>(R_inv.entry(a).truncated(static_cast<std::size_t>(max_degree)));
    // (1 - R^{-1}_aa(x) R^{-1}_bb(y)) / (x + y), the eta^{ab} factor kept in the prefactor.
    const int b = opposite_label(r, a);
    Bivariate fx(max_degree + 1), fy(max_degree + 1);
    for (int k = 0; k <= max_degree + 1; ++k) {
      fx.coeff(k, 0) = R_inv.entry(a).coeff(static_cast<std::size_t>(k));
      fy.coeff(0, k) = R_inv.entry(b).coeff(static_cast<std::size_t>(k));
    }
    Bivariate numerator = Bivariate::constant(Rat(1), max_degree + 1);
    Bivariate prod = fx * fy;
    prod *= Rat(-1);
    numerator += prod;
    edge_by_label[a] = std::make_shared<const Bivariate>(numerator.divide_by_sum());
  }

  for (const auto& eg : *cached_stable_graphs(g, n, max_degree)) {
    const StableGraph& gr = eg.graph;
    auto graph = std::make_shared<const StableGraph>(gr);
    const auto edges = gr.edges();
    std::vector<int> labels(edges.size(), 1);
    std::function<void(std::size_t)> assign = [&](std::size_t e) {
      if (e < edges.size()) {
        for (int a = 1; a <= r; ++a) {
          labels[e] = a;
          assign(e + 1);
        }
        return;
      }
      std::vector<std::vector<int>> at(gr.vertex_count());
      for (int i = 0; i < n; ++i) at[gr.leg_vertex[i]].push_back(p.a[i]);
      Rat prefactor = Rat(1) / Rat(eg.aut_order);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const int b = opposite_label(r, labels[k]);
        at[edges[k].first].push_back(labels[k]);
        at[edges[k].second].push_back(b);
        prefactor *= tft.inverse_pairing(labels[k], b);
      }
      for (int v = 0; v < gr.vertex_count() && prefactor != 0; ++v) prefactor *= tft.amplitude(gr.genus[v], at[v]);
      if (prefactor == 0) return;
      TautTerm t;
      t.graph = graph;
      t.prefactor = prefactor;
      t.vertex_kappa.assign(gr.vertex_count(), kappa);
      for (int x : p.a) t.leg_series.push_back(leg_by_label[x]);
      for (int x : labels) t.edge_factor.push_back(edge_by_label[x]);
      expr.terms.push_back(std::move(t));
    };
    assign(0);
  }
  return expr;
}

}  // namespace elsv
