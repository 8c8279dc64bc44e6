#include "chiodo/chiodo.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "error.hpp"
#include "exact/special.hpp"
#include "intersection/intersection.hpp"

namespace elsv {

void validate_chiodo_params(int g, const ChiodoParams& p) {
  if (p.r < 1) fail(ErrorCode::InvalidArgument, "Chiodo class: r must be positive");
  if (p.s < 0 || p.s > p.r) fail(ErrorCode::InvalidArgument, "Chiodo class: s must lie in 0..r");
  for (int x : p.a)
    if (x < 1 || x > p.r) fail(ErrorCode::InvalidArgument, "Chiodo class: leg weights must lie in 1..r");
  if (!chiodo_condition_holds(g, p.r, p.s, p.a))
    fail(ErrorCode::Precondition, "Chiodo class: (2g-2+n)s - sum a_i is not divisible by r");
}

namespace {

Rat bern(int l, int num, int r) { return bernoulli_polynomial(static_cast<unsigned>(l), make_rat(num, r)); }

Rat sign(int k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

Rat r_power(int r, long e) { return rat_pow(Rat(r), e); }

std::shared_ptr<const StableGraph> share(const StableGraph& g) { return std::make_shared<const StableGraph>(g); }

}  // namespace

std::vector<Rat> chiodo_vertex_coefficients(int r, int s, int max_l) {
  std::vector<Rat> c;
  for (int l = 1; l <= max_l; ++l) c.push_back(sign(l) * bern(l + 1, s, r) / Rat(l * (l + 1)));
  return c;
}

RatSeries chiodo_leg_series(int r, int a, int order) {
  RatSeries e(static_cast<std::size_t>(order));
  for (int l = 1; l <= order; ++l) e[l] = sign(l - 1) * bern(l + 1, a, r) / Rat(l * (l + 1));
  return e.exp();
}

Bivariate chiodo_edge_factor(int r, int w, int degree) {
  const int top = degree + 1;
  Bivariate exponent(top);
  for (int l = 1; l <= top; ++l) {
    Rat c = sign(l - 1) * bern(l + 1, w, r) / Rat(l * (l + 1));
    exponent.coeff(l, 0) += c;
    exponent.coeff(0, l) -= c * sign(l);
  }
  Bivariate numerator = Bivariate::constant(Rat(1), top);
  Bivariate e = exponent.exp();
  e *= Rat(-1);
  numerator += e;
  return numerator.divide_by_sum();
}

std::shared_ptr<const std::vector<EnumeratedGraph>> cached_stable_graphs(int g, int n, int max_edges) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const std::vector<EnumeratedGraph>>> cache;
  auto key = std::make_tuple(g, n, max_edges);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto graphs = std::make_shared<const std::vector<EnumeratedGraph>>(enumerate_stable_graphs(g, n, max_edges));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, graphs).first->second;
}

TautExpression chern_character(int l, const ChiodoParams& p, int g, int n) {
  if (l < 1) fail(ErrorCode::InvalidArgument, "chern_character: l must be positive");
  if (static_cast<int>(p.a.size()) != n) fail(ErrorCode::InvalidArgument, "chern_character: need one weight per leg");
  validate_chiodo_params(g, p);
  require_stable(g, n);

  TautExpression expr;
  expr.g = g;
  expr.n = n;
  expr.max_degree = l;
  const auto graphs = cached_stable_graphs(g, n, 1);
  const Rat lfact(factorial(static_cast<unsigned>(l + 1)));

  auto unit_kappa = std::make_shared<const KappaPoly>(KappaPoly{{{}, 0, Rat(1)}});
  auto unit_leg = std::make_shared<const RatSeries>(RatSeries::constant(Rat(1), static_cast<std::size_t>(l)));

  for (const auto& eg : *graphs) {
    const StableGraph& gr = eg.graph;
    auto graph = share(gr);
    if (gr.edge_count() == 0) {
      TautTerm kappa_term;
      kappa_term.graph = graph;
      kappa_term.prefactor = bern(l + 1, p.s, p.r) / lfact;
      kappa_term.vertex_kappa = {std::make_shared<const KappaPoly>(KappaPoly{{{l}, l, Rat(1)}})};
      kappa_term.leg_series.assign(n, unit_leg);
      expr.terms.push_back(kappa_term);
      for (int i = 0; i < n; ++i) {
        TautTerm leg_term;
        leg_term.graph = graph;
        leg_term.prefactor = -bern(l + 1, p.a[i], p.r) / lfact;
        leg_term.vertex_kappa = {unit_kappa};
        leg_term.leg_series.assign(n, unit_leg);
        RatSeries mono(static_cast<std::size_t>(l));
        mono[l] = 1;
        leg_term.leg_series[i] = std::make_shared<const RatSeries>(mono);
        expr.terms.push_back(leg_term);
      }
      continue;
    }
    // (x^l + (-1)^{l-1} y^l) / (x + y)
    Bivariate gamma(l);
    gamma.coeff(l, 0) = 1;
    gamma.coeff(0, l) = sign(l - 1);
    auto edge = std::make_shared<const Bivariate>(gamma.divide_by_sum());
    long vertex_exponent = 0;
    for (int v = 0; v < gr.vertex_count(); ++v) vertex_exponent += 2 * gr.genus[v] - 1;
    Rat base = r_power(p.r, 1 + vertex_exponent - (2 * g - 1)) / Rat(eg.aut_order);
    for (const auto& w : enumerate_weightings(gr, p.r, p.s, p.a)) {
      TautTerm t;
      t.graph = graph;
      t.prefactor = base * bern(l + 1, w.edges[0].first, p.r) / lfact;
      t.vertex_kappa.assign(gr.vertex_count(), unit_kappa);
      t.leg_series.assign(n, unit_leg);
      t.edge_factor = {edge};
      expr.terms.push_back(t);
    }
  }
  return expr;
}

namespace {

TautExpression build_chiodo_class(int g, int n, const ChiodoParams& p, int max_degree) {
  TautExpression expr;
  expr.g = g;
  expr.n = n;
  expr.max_degree = max_degree;
  const auto graphs = cached_stable_graphs(g, n, max_degree);

  auto kappa = std::make_shared<const KappaPoly>(kappa_exponential(chiodo_vertex_coefficients(p.r, p.s, max_degree), max_degree));
  std::map<int, std::shared_ptr<const RatSeries>> legs;
  for (int x : p.a)
    if (!legs.count(x)) legs[x] = std::make_shared<const RatSeries>(chiodo_leg_series(p.r, x, max_degree));
  std::map<int, std::shared_ptr<const Bivariate>> edge_by_weight;
  auto edge_factor = [&](int w) {
    auto it = edge_by_weight.find(w);
    if (it != edge_by_weight.end()) return it->second;
    return edge_by_weight[w] = std::make_shared<const Bivariate>(chiodo_edge_factor(p.r, w, max_degree));
  };

  for (const auto& eg : *graphs) {
    const StableGraph& gr = eg.graph;
    auto graph = share(gr);
    long exponent = gr.edge_count();
    for (int v = 0; v < gr.vertex_count(); ++v) exponent += 2 * gr.genus[v] - 1;
    Rat prefactor = r_power(p.r, exponent) / Rat(eg.aut_order);
    for (const auto& w : enumerate_weightings(gr, p.r, p.s, p.a)) {
      TautTerm t;
      t.graph = graph;
      t.prefactor = prefactor;
      t.vertex_kappa.assign(gr.vertex_count(), kappa);
      for (int x : p.a) t.leg_series.push_back(legs[x]);
      for (const auto& [w1, w2] : w.edges) t.edge_factor.push_back(edge_factor(w1));
      expr.terms.push_back(std::move(t));
    }
  }
  return expr;
}

}  // namespace

std::shared_ptr<const TautExpression> chiodo_class(int g, int n, const ChiodoParams& p, int max_degree) {
  if (static_cast<int>(p.a.size()) != n) fail(ErrorCode::InvalidArgument, "chiodo_class: need one weight per leg");
  require_stable(g, n);
  validate_chiodo_params(g, p);
  if (max_degree < 0) max_degree = 3 * g - 3 + n;

  using Key = std::tuple<int, int, int, int, std::vector<int>, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const TautExpression>> cache;
  Key key{g, n, p.r, p.s, p.a, max_degree};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto expr = std::make_shared<const TautExpression>(build_chiodo_class(g, n, p, max_degree));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, expr).first->second;
}

std::vector<int> elsv_leg_weights(int r, const std::vector<int>& mu) {
  std::vector<int> a;
  for (int m : mu) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    a.push_back(r - m % r);
  }
  return a;
}

Rat chiodo_integral_elsv(int g, int r, int s, const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  require_stable(g, n);
  ChiodoParams p{r, s, elsv_leg_weights(r, mu)};
  if (!chiodo_condition_holds(g, r, s, p.a)) return Rat(0);
  auto cls = chiodo_class(g, n, p);
  const auto dim = static_cast<std::size_t>(3 * g - 3 + n);
  std::vector<RatSeries> insertions;
  for (int m : mu) {
    RatSeries geo(dim);
    Rat x = make_rat(m, r);
    Rat power = 1;
    for (std::size_t k = 0; k <= dim; ++k, power *= x) geo[k] = power;
    insertions.push_back(std::move(geo));
  }
  return integrate_with_leg_series(*cls, insertions);
}

}  // namespace elsv
