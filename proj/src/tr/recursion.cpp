#include "tr/recursion.hpp"

#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "error.hpp"

namespace elsv {

namespace {

using Tensor = std::vector<BigComplex>;

std::size_t power(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

int max_pole_order(int g, int n) { return 6 * g - 4 + 2 * n; }

BigFloat two_to_minus(unsigned bits) { return BigFloat(1L) / pow(BigFloat(2L), static_cast<long>(bits)); }

BigFloat max_abs(const Tensor& t) {
  BigFloat m(0L);
  for (const auto& x : t) m = max(m, abs(x));
  return m;
}

// (z - p_i)^{-k} for every basis index of a form with the given shape.
Tensor basis_values(const std::vector<BigComplex>& points, int max_pole, const BigComplex& z) {
  Tensor v(points.size() * static_cast<std::size_t>(max_pole));
  for (std::size_t i = 0; i < points.size(); ++i) {
    BigComplex inv = BigComplex(1) / (z - points[i]);
    BigComplex acc = inv;
    for (int k = 1; k <= max_pole; ++k) {
      v[i * max_pole + k - 1] = acc;
      acc *= inv;
    }
  }
  return v;
}

Tensor contract_first(const Tensor& t, std::size_t dim, const Tensor& v) {
  const std::size_t rest = t.size() / dim;
  Tensor out(rest);
  for (std::size_t a = 0; a < dim; ++a) {
    if (v[a].is_zero()) continue;
    for (std::size_t j = 0; j < rest; ++j)
      if (!t[a * rest + j].is_zero()) out[j] += v[a] * t[a * rest + j];
  }
  return out;
}

// Re-indexes a tensor of m variables from pole bound k_in to k_out >= k_in.
Tensor embed(const Tensor& t, int m, int branches, int k_in, int k_out) {
  if (k_in == k_out) return t;
  const std::size_t d_in = static_cast<std::size_t>(branches * k_in);
  const std::size_t d_out = static_cast<std::size_t>(branches * k_out);
  Tensor out(power(d_out, m));
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    std::size_t rem = flat, target = 0, scale = 1;
    for (int v = 0; v < m; ++v) {
      std::size_t digit = rem % d_in;
      rem /= d_in;
      std::size_t i = digit / k_in, k = digit % k_in;
      target += (i * k_out + k) * scale;
      scale *= d_out;
    }
    out[target] = t[flat];
  }
  return out;
}

// B(u, z_j) = sum_m (m+1) (u-p)^m / (z_j-p)^{m+2} for z_j outside the circle
// around branch point i, as a vector in z_j's polar basis.
Tensor bergman_expansion(const BigComplex& u, const BigComplex& p, std::size_t i, int branches, int max_pole) {
  Tensor v(static_cast<std::size_t>(branches * max_pole));
  BigComplex step = u - p;
  BigComplex acc(1);
  for (int k = 2; k <= max_pole; ++k) {
    v[i * max_pole + k - 1] = BigComplex(k - 1) * acc;
    acc *= step;
  }
  return v;
}

BigComplex deck_point(const SpectralCurve& curve, const LocalChart& chart, const BigComplex& z) {
  BigComplex s = chart.point + evaluate_series(chart.sigma, z - chart.point);
  const BigFloat tol = two_to_minus(working_precision() - 8);
  for (int iter = 0; iter < 60; ++iter) {
    BigComplex step = curve.x_difference(s, z) / curve.dx(s);
    s -= step;
    if (abs(step) <= tol * abs(s)) return s;
  }
  fail(ErrorCode::Precision, "deck transformation: Newton iteration did not converge");
}

struct CacheKey {
  std::string curve;
  int g, n;
  unsigned bits;
  int nodes, max_nodes;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const PolarForm>> cache;

class Recursion {
 public:
  Recursion(const SpectralCurve& curve, int g, int n, const TrOptions& opts)
      : curve_(curve), g_(g), n_(n), opts_(opts), points_(curve.branch_points()),
        branches_(static_cast<int>(points_.size())), max_pole_(max_pole_order(g, n)),
        dim_(static_cast<std::size_t>(branches_ * max_pole_)) {
    for (std::size_t i = 0; i < points_.size(); ++i) charts_.push_back(local_chart(curve, i, 30));
    if (g_ >= 1 && !(g_ == 1 && n_ == 1)) inner_[{g_ - 1, n_ + 1}] = correlator_polar_form(curve_, g_ - 1, n_ + 1, opts_);
    for (int h = 0; h <= g_; ++h)
      for (int m = 1; m <= n_; ++m)
        if (2 * h - 2 + m > 0 && !(h == g_ && m == n_)) inner_[{h, m}] = correlator_polar_form(curve_, h, m, opts_);
  }

  PolarForm run() {
    const std::size_t size = power(dim_, n_);
    Tensor total(size);
    int count = opts_.nodes;
    add_nodes(total, count, 0, 1);
    Tensor previous = scaled(total, count);
    const BigFloat tol = two_to_minus(working_precision() - 40);
    while (true) {
      if (2 * count > opts_.max_nodes)
        fail(ErrorCode::Precision, "residue quadrature did not stabilise within " + std::to_string(opts_.max_nodes) +
                                       " nodes");
      add_nodes(total, count, 1, 2);
      count *= 2;
      Tensor current = scaled(total, count);
      BigFloat diff(0L);
      for (std::size_t j = 0; j < size; ++j) diff = max(diff, abs(current[j] - previous[j]));
      if (diff <= tol * max(BigFloat(1L), max_abs(current))) {
        PolarForm f;
        f.n = n_;
        f.branch_count = branches_;
        f.max_pole = max_pole_;
        f.points = points_;
        f.coefficients = std::move(current);
        return f;
      }
      previous = std::move(current);
    }
  }

 private:
  static Tensor scaled(const Tensor& t, int count) {
    Tensor out = t;
    BigComplex inv = BigComplex(1) / BigComplex(count);
    for (auto& x : out) x *= inv;
    return out;
  }

  // Nodes at angles 2 pi (l * step + offset) / (step * count), l < count.
  void add_nodes(Tensor& total, int count, int offset, int step) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      BigFloat radius = curve_.residue_radius(i);
      for (int l = 0; l < count; ++l) {
        BigComplex u = BigComplex(radius) * unit_root(static_cast<long>(l) * step + offset, static_cast<long>(step) * count);
        add_node(total, i, points_[i] + u);
      }
    }
  }

  // Polar part of omega_{h,m}(u, .) in the remaining m-1 variables, in the
  // target's basis.
  Tensor inner_at(int h, int m, const BigComplex& u) const {
    const PolarForm& f = *inner_.at({h, m});
    Tensor t = contract_first(f.coefficients, static_cast<std::size_t>(f.dim()), basis_values(points_, f.max_pole, u));
    return embed(t, m - 1, branches_, f.max_pole, max_pole_);
  }

  // Factor omega_{h, 1+|vars|}(u, vars) in the bracket; unstable (0,2) is B.
  Tensor factor(int h, int vars, const BigComplex& u, std::size_t i) const {
    if (h == 0 && vars == 1) return bergman_expansion(u, points_[i], i, branches_, max_pole_);
    return inner_at(h, vars + 1, u);
  }

  void add_node(Tensor& total, std::size_t i, const BigComplex& z) {
    const BigComplex& p = points_[i];
    const BigComplex s = deck_point(curve_, charts_[i], z);
    const BigComplex dxz = curve_.dx(z);
    const BigComplex ds = dxz / curve_.dx(s);
    const int J = n_ - 1;
    Tensor bracket(power(dim_, J));

    if (g_ >= 1) {
      if (g_ == 1 && J == 0) {
        BigComplex d = z - s;
        bracket[0] += BigComplex(1) / (d * d);
      } else {
        const PolarForm& f = *inner_.at({g_ - 1, J + 2});
        Tensor t = contract_first(f.coefficients, static_cast<std::size_t>(f.dim()), basis_values(points_, f.max_pole, z));
        t = contract_first(t, static_cast<std::size_t>(f.dim()), basis_values(points_, f.max_pole, s));
        t = embed(t, J, branches_, f.max_pole, max_pole_);
        for (std::size_t j = 0; j < t.size(); ++j) bracket[j] += t[j];
      }
    }

    for (int h = 0; h <= g_; ++h)
      for (unsigned mask = 0; mask < (1u << J); ++mask) {
        const int in = std::popcount(mask), out = J - in;
        if ((h == 0 && in == 0) || (h == g_ && out == 0)) continue;
        Tensor first = factor(h, in, z, i);
        Tensor second = factor(g_ - h, out, s, i);
        scatter(bracket, first, second, mask, J);
      }

    // (1/2) int_{sigma z}^{z} B(z0, .) / ((y(z) - y(sigma z)) dx(z)) expanded in
    // z0 around p, times the quadrature factor (z - p).
    BigComplex pre = ds * (z - p) / (BigComplex(2) * (curve_.y(z) - curve_.y(s)) * dxz);
    Tensor kernel(dim_);
    BigComplex a = z - p, b = s - p, pa = a, pb = b;
    for (int k = 2; k <= max_pole_; ++k) {
      kernel[i * max_pole_ + k - 1] = pre * (pa - pb);
      pa *= a;
      pb *= b;
    }
    const std::size_t rest = bracket.size();
    for (std::size_t k = 0; k < dim_; ++k) {
      if (kernel[k].is_zero()) continue;
      for (std::size_t j = 0; j < rest; ++j) total[k * rest + j] += kernel[k] * bracket[j];
    }
  }

  // bracket[J-index] += first[digits in mask] * second[digits outside mask];
  // variable 0 is the most significant digit.
  void scatter(Tensor& bracket, const Tensor& first, const Tensor& second, unsigned mask, int J) const {
    for (std::size_t flat = 0; flat < bracket.size(); ++flat) {
      std::size_t rem = flat, a = 0, b = 0, sa = 1, sb = 1;
      for (int v = J - 1; v >= 0; --v) {
        std::size_t digit = rem % dim_;
        rem /= dim_;
        if (mask & (1u << v)) {
          a += digit * sa;
          sa *= dim_;
        } else {
          b += digit * sb;
          sb *= dim_;
        }
      }
      if (first[a].is_zero() || second[b].is_zero()) continue;
      bracket[flat] += first[a] * second[b];
    }
  }

  SpectralCurve curve_;
  int g_, n_;
  TrOptions opts_;
  std::vector<BigComplex> points_;
  int branches_;
  int max_pole_;
  std::size_t dim_;
  std::vector<LocalChart> charts_;
  std::map<std::pair<int, int>, std::shared_ptr<const PolarForm>> inner_;
};

std::vector<std::vector<int>> decreasing_tuples(int n, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int x = bound; x >= 1; --x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(max_part);
  return out;
}

// Coefficient of the expansion variable^m in x~^mu.
Rat xtilde_transition(const SpectralCurve& curve, int mu, int m) {
  if (m < mu) return 0;
  if (curve.expands_at_infinity()) {
    // x = t - t^2
    int k = m - mu;
    if (k > mu) return 0;
    Rat c(binomial(static_cast<unsigned>(mu), static_cast<unsigned>(k)));
    return k % 2 == 0 ? c : Rat(-c);
  }
  // z^mu e^{-mu z^r}
  const int r = curve.r();
  if ((m - mu) % r != 0) return 0;
  int k = (m - mu) / r;
  return rat_pow(Rat(-mu), k) / Rat(factorial(static_cast<unsigned>(k)));
}

std::vector<CorrelatorCoefficient> extract_at(const SpectralCurve& curve, int g, int n, int mu_max, TrOptions opts) {
  PrecisionScope scope(opts.precision_bits);
  auto form = correlator_polar_form(curve, g, n, opts);
  const auto& points = form->points;
  const bool at_infinity = curve.expands_at_infinity();

  // Modulus of the nearest branch point in the expansion variable.
  std::optional<BigFloat> nearest_opt;
  for (const auto& p : points) {
    BigFloat m = at_infinity ? BigFloat(1L) / abs(p) : abs(p);
    if (!nearest_opt || m < *nearest_opt) nearest_opt = m;
  }
  const BigFloat nearest = *nearest_opt;
  BigFloat radius = opts.extraction_radius ? BigFloat(*opts.extraction_radius) : nearest / BigFloat(2L);
  if (!(radius > BigFloat(0L)) || !(radius < nearest))
    fail(ErrorCode::InvalidArgument, "extraction radius must be positive and below the nearest branch point modulus " +
                                         nearest.to_string(6));

  int nodes = 64;
  while (nodes < 2 * static_cast<int>(opts.precision_bits)) nodes *= 2;

  // Per basis function: coefficients of x~^mu, mu = 1..mu_max, of its primitive.
  const std::size_t dim = static_cast<std::size_t>(form->dim());
  std::vector<std::vector<BigComplex>> per_basis(dim, std::vector<BigComplex>(mu_max + 1));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const BigComplex& p = points[idx / form->max_pole];
    const int k = static_cast<int>(idx % form->max_pole) + 1;
    std::vector<BigComplex> taylor(mu_max);
    for (int l = 0; l < nodes; ++l) {
      BigComplex unit = unit_root(l, nodes);
      BigComplex t = BigComplex(radius) * unit;
      BigComplex value;
      if (at_infinity) {
        // (1/t - p)^{-k} d(1/t) = -t^{k-2} (1 - p t)^{-k} dt
        value = -pow(t, k - 2) * pow(BigComplex(1) - p * t, -k);
      } else {
        value = pow(t - p, -k);
      }
      BigComplex inv_t = BigComplex(1) / t;
      BigComplex weight(1);
      for (int m = 0; m < mu_max; ++m) {
        taylor[m] += value * weight;
        weight *= inv_t;
      }
    }
    // Primitive: coefficient of t^{m+1} is taylor[m] / (m + 1).
    std::vector<BigComplex> primitive(mu_max + 1);
    for (int m = 0; m < mu_max; ++m) primitive[m + 1] = taylor[m] / BigComplex(nodes * (m + 1));
    auto& out = per_basis[idx];
    for (int m = 1; m <= mu_max; ++m) {
      BigComplex acc = primitive[m];
      for (int mu = 1; mu < m; ++mu) {
        Rat c = xtilde_transition(curve, mu, m);
        if (c != 0) acc -= BigComplex(c) * out[mu];
      }
      out[m] = acc;
    }
  }

  std::vector<CorrelatorCoefficient> result;
  for (const auto& tuple : decreasing_tuples(n, mu_max)) {
    Tensor t = form->coefficients;
    for (int part : tuple) {
      Tensor v(dim);
      for (std::size_t idx = 0; idx < dim; ++idx) v[idx] = per_basis[idx][part];
      t = contract_first(t, dim, v);
    }
    BigComplex c = t.at(0);
    CorrelatorCoefficient entry;
    entry.curve = curve.name();
    entry.g = g;
    entry.mu = Partition(tuple);
    if (!at_infinity) {
      long numerator = static_cast<long>(2 * g - 2 + n) * curve.s() + entry.mu.size();
      if (numerator >= 0 && numerator % curve.r() == 0) {
        entry.branches = numerator / curve.r();
        c *= BigComplex(BigFloat(factorial(static_cast<unsigned>(*entry.branches))));
      }
    }
    entry.value = c.re;
    entry.imaginary = c.im;
    result.push_back(std::move(entry));
  }
  return result;
}

}  // namespace

BigComplex PolarForm::evaluate(const std::vector<BigComplex>& z) const {
  if (static_cast<int>(z.size()) != n) fail(ErrorCode::InvalidArgument, "PolarForm::evaluate: wrong number of points");
  Tensor t = coefficients;
  for (const auto& point : z) t = contract_first(t, static_cast<std::size_t>(dim()), basis_values(points, max_pole, point));
  return t.at(0);
}

std::shared_ptr<const PolarForm> correlator_polar_form(const SpectralCurve& curve, int g, int n, const TrOptions& opts) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
    fail(ErrorCode::Unstable, "omega_{" + std::to_string(g) + "," + std::to_string(n) + "} is not a stable correlator");
  if (opts.nodes < 4 || opts.max_nodes < opts.nodes) fail(ErrorCode::InvalidArgument, "invalid quadrature node counts");
  PrecisionScope scope(opts.precision_bits);
  CacheKey key{curve.name(), g, n, opts.precision_bits, opts.nodes, opts.max_nodes};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto form = std::make_shared<const PolarForm>(Recursion(curve, g, n, opts).run());
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, form).first->second;
}

void clear_correlator_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

BigComplex omega(const SpectralCurve& curve, int g, int n, const std::vector<BigComplex>& points, const TrOptions& opts) {
  if (static_cast<int>(points.size()) != n) fail(ErrorCode::InvalidArgument, "omega: expected " + std::to_string(n) + " points");
  PrecisionScope scope(opts.precision_bits);
  if (g == 0 && n == 1) return curve.y(points[0]) * curve.dx(points[0]);
  if (g == 0 && n == 2) {
    BigComplex d = points[0] - points[1];
    return BigComplex(1) / (d * d);
  }
  return correlator_polar_form(curve, g, n, opts)->evaluate(points);
}

std::vector<CorrelatorCoefficient> extract_coefficients(const SpectralCurve& curve, int g, int n, int mu_max,
                                                        const TrOptions& opts) {
  if (mu_max < 1) fail(ErrorCode::InvalidArgument, "extract_coefficients: mu_max must be positive");
  auto result = extract_at(curve, g, n, mu_max, opts);
  if (!opts.check_precision) return result;
  TrOptions doubled = opts;
  doubled.precision_bits *= 2;
  auto finer = extract_at(curve, g, n, mu_max, doubled);
  PrecisionScope scope(doubled.precision_bits);
  const BigFloat tol = BigFloat::parse("1e-20");
  for (std::size_t i = 0; i < result.size(); ++i) {
    BigFloat scale = max(BigFloat(1L), abs(finer[i].value));
    if (abs(result[i].value - finer[i].value) > tol * scale)
      fail(ErrorCode::Precision, "coefficient " + result[i].mu.to_string() + " changed beyond 1e-20 when precision doubled");
  }
  return finer;
}

}  // namespace elsv
