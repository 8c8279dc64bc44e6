#include "chiodo/taut.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "error.hpp"
#include "intersection/intersection.hpp"

namespace elsv {

Bivariate::Bivariate(int degree) : degree_(degree), c_(degree + 1) {
  for (int i = 0; i <= degree; ++i) c_[i].assign(degree - i + 1, Rat(0));
}

Bivariate Bivariate::constant(const Rat& c, int degree) {
  Bivariate b(degree);
  b.c_[0][0] = c;
  return b;
}

Bivariate& Bivariate::operator+=(const Bivariate& o) {
  int d = std::min(degree_, o.degree_);
  if (d < degree_) *this = truncated_copy(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) c_[i][j] += o.c_[i][j];
  return *this;
}

Bivariate& Bivariate::operator*=(const Rat& s) {
  for (auto& row : c_)
    for (auto& x : row) x *= s;
  return *this;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  int d = std::min(a.degree_, b.degree_);
  Bivariate r(d);
  for (int i1 = 0; i1 <= d; ++i1)
    for (int j1 = 0; i1 + j1 <= d; ++j1) {
      const Rat& x = a.c_[i1][j1];
      if (x == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= d; ++i2)
        for (int j2 = 0; i1 + j1 + i2 + j2 <= d; ++j2) {
          const Rat& y = b.c_[i2][j2];
          if (y != 0) r.c_[i1 + i2][j1 + j2] += x * y;
        }
    }
  return r;
}

Bivariate Bivariate::truncated_copy(int degree) const {
  Bivariate r(degree);
  for (int i = 0; i <= std::min(degree, degree_); ++i)
    for (int j = 0; i + j <= std::min(degree, degree_); ++j) r.c_[i][j] = c_[i][j];
  return r;
}

Bivariate Bivariate::exp() const {
  if (c_[0][0] != 0) fail(ErrorCode::Precondition, "Bivariate::exp: nonzero constant term");
  Bivariate result = constant(Rat(1), degree_);
  Bivariate power = constant(Rat(1), degree_);
  for (int k = 1; k <= degree_; ++k) {
    power = power * *this;
    power *= Rat(1, k);
    result += power;
  }
  return result;
}

Bivariate Bivariate::divide_by_sum() const {
  if (c_[0][0] != 0) fail(ErrorCode::Consistency, "edge numerator has a constant term; not divisible by the psi sum");
  int d = degree_ - 1;
  if (d < 0) return Bivariate(0);
  Bivariate q(d);
  // Degree-k part: n_{i,k-i} = q_{i-1,k-i} + q_{i,k-1-i}.
  for (int k = 1; k <= degree_; ++k) {
    for (int i = 0; i <= k - 1; ++i) {
      Rat prev = i >= 1 ? q.c_[i - 1][k - i] : Rat(0);
      q.c_[i][k - 1 - i] = c_[i][k - i] - prev;
    }
    if (c_[k][0] != q.c_[k - 1][0])
      fail(ErrorCode::Consistency, "edge numerator is not divisible by the psi sum");
  }
  return q;
}

Bivariate Bivariate::swapped() const {
  Bivariate r(degree_);
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) r.c_[j][i] = c_[i][j];
  return r;
}

bool Bivariate::is_zero() const {
  for (const auto& row : c_)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

KappaPoly kappa_exponential(const std::vector<Rat>& coeffs, int max_degree) {
  KappaPoly out;
  std::vector<int> current;
  std::function<void(int, int, Rat)> rec = [&](int min_index, int remaining, Rat coeff) {
    out.push_back({current, max_degree - remaining, coeff});
    for (int l = min_index; l <= remaining && l <= static_cast<int>(coeffs.size()); ++l) {
      if (coeffs[l - 1] == 0) continue;
      // Count the multiplicity of l so far to apply the 1/m! factor.
      int m = static_cast<int>(std::count(current.begin(), current.end(), l)) + 1;
      current.push_back(l);
      rec(l, remaining - l, coeff * coeffs[l - 1] / m);
      current.pop_back();
    }
  };
  rec(1, max_degree, Rat(1));
  return out;
}

namespace {

// Per-leg series combined with an insertion: table[e][q] is the coefficient of
// psi^e where q of the e powers come from the insertion.
using LegTable = std::vector<std::vector<Rat>>;

LegTable leg_table(const RatSeries& chiodo, const RatSeries& insertion, int max_degree) {
  LegTable t(max_degree + 1);
  for (int e = 0; e <= max_degree; ++e) {
    t[e].assign(e + 1, Rat(0));
    for (int q = 0; q <= e; ++q) t[e][q] = chiodo.coeff(static_cast<std::size_t>(e - q)) * insertion.coeff(static_cast<std::size_t>(q));
  }
  return t;
}

void add_scaled_product(std::vector<Rat>& acc, const std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& scale) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < acc.size(); ++j)
      if (b[j] != 0) acc[i + j] += scale * a[i] * b[j];
  }
}

std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t size) {
  std::vector<Rat> r(size, Rat(0));
  add_scaled_product(r, a, b, Rat(1));
  return r;
}

class TermIntegrator {
 public:
  TermIntegrator(int dim, const std::vector<RatSeries>& insertions) : dim_(dim), insertions_(insertions) {}

  // Contribution of one term as a polynomial in the insertion degree.
  std::vector<Rat> integrate(const TautTerm& term) {
    const StableGraph& gr = *term.graph;
    const int nv = gr.vertex_count();
    edges_ = gr.edges();
    budget_.assign(nv, 0);
    for (int v = 0; v < nv; ++v) budget_[v] = 3 * gr.genus[v] - 3 + gr.valence(v);
    half_exps_.assign(nv, {});
    std::vector<Rat> total(dim_ + 1, Rat(0));
    term_ = &term;
    dfs(0, Rat(1), total);
    for (auto& x : total) x *= term.prefactor;
    return total;
  }

 private:
  void dfs(std::size_t e, const Rat& coeff, std::vector<Rat>& total) {
    const StableGraph& gr = *term_->graph;
    if (e == edges_.size()) {
      std::vector<Rat> prod{Rat(1)};
      prod.resize(dim_ + 1, Rat(0));
      for (int v = 0; v < gr.vertex_count(); ++v) {
        const std::vector<Rat>& loc = local(v);
        bool nonzero = std::any_of(loc.begin(), loc.end(), [](const Rat& x) { return x != 0; });
        if (!nonzero) return;
        prod = multiply(prod, loc, dim_ + 1);
      }
      for (int i = 0; i <= dim_; ++i) total[i] += coeff * prod[i];
      return;
    }
    auto [v, w] = edges_[e];
    const Bivariate& poly = *term_->edge_factor[e];
    for (int i = 0; i <= poly.degree() && i <= budget_[v]; ++i) {
      for (int j = 0; i + j <= poly.degree(); ++j) {
        const Rat& c = poly.coeff(i, j);
        if (c == 0) continue;
        if (v == w ? i + j > budget_[v] : j > budget_[w]) continue;
        budget_[v] -= i;
        budget_[w] -= j;
        half_exps_[v].push_back(i);
        half_exps_[w].push_back(j);
        dfs(e + 1, coeff * c, total);
        half_exps_[w].pop_back();
        half_exps_[v].pop_back();
        budget_[v] += i;
        budget_[w] += j;
      }
    }
  }

  const std::vector<Rat>& local(int v) {
    const StableGraph& gr = *term_->graph;
    std::vector<int> hs = half_exps_[v];
    std::sort(hs.begin(), hs.end());
    std::vector<std::intptr_t> key;
    key.push_back(gr.genus[v]);
    key.push_back(reinterpret_cast<std::intptr_t>(term_->vertex_kappa[v].get()));
    auto legs = gr.legs_at(v);
    key.push_back(static_cast<std::intptr_t>(legs.size()));
    for (int leg : legs) {
      key.push_back(leg);
      key.push_back(reinterpret_cast<std::intptr_t>(term_->leg_series[leg - 1].get()));
    }
    key.insert(key.end(), hs.begin(), hs.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const int dim_v = 3 * gr.genus[v] - 3 + gr.valence(v);
    int used = 0;
    for (int h : hs) used += h;
    const int rest = dim_v - used;
    std::vector<Rat> result(dim_ + 1, Rat(0));
    if (rest >= 0) {
      std::vector<LegTable> tables;
      for (int leg : legs) tables.push_back(leg_table(*term_->leg_series[leg - 1], insertions_[leg - 1], rest));
      for (const auto& mono : *term_->vertex_kappa[v]) {
        if (mono.degree > rest) continue;
        int leg_total = rest - mono.degree;
        std::vector<int> e(legs.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
          if (i + 1 >= legs.size()) {
            if (legs.empty()) {
              if (left != 0) return;
            } else {
              e[i] = left;
            }
            std::vector<int> psi(e.begin(), e.end());
            psi.insert(psi.end(), hs.begin(), hs.end());
            Rat value = kappa_psi_intersection(gr.genus[v], mono.kappas, psi);
            if (value == 0) return;
            std::vector<Rat> poly{Rat(1)};
            for (std::size_t k = 0; k < legs.size(); ++k) poly = multiply(poly, tables[k][e[k]], dim_ + 1);
            for (std::size_t q = 0; q < poly.size(); ++q) result[q] += mono.coeff * value * poly[q];
            return;
          }
          for (int x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
          }
        };
        rec(0, leg_total);
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  int dim_;
  const std::vector<RatSeries>& insertions_;
  const TautTerm* term_ = nullptr;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> budget_;
  std::vector<std::vector<int>> half_exps_;
  std::map<std::vector<std::intptr_t>, std::vector<Rat>> memo_;
};

}  // namespace

Rat integrate_with_leg_series(const TautExpression& expr, const std::vector<RatSeries>& insertions) {
  if (static_cast<int>(insertions.size()) != expr.n)
    fail(ErrorCode::InvalidArgument, "integrate: need one insertion series per leg");
  const int dim = expr.dimension();
  if (dim < 0) fail(ErrorCode::Unstable, "integrate: unstable moduli space");
  // The class may only contribute in degrees <= max_degree, i.e. the
  // insertions must carry at least dim - max_degree powers of psi.
  const int min_insertion = std::max(0, dim - expr.max_degree);
  TermIntegrator integrator(dim, insertions);
  Rat total = 0;
  for (const auto& term : expr.terms) {
    auto contribution = integrator.integrate(term);
    for (int q = min_insertion; q <= dim; ++q) total += contribution[q];
  }
  return total;
}

Rat integrate_class(const TautExpression& expr, const std::vector<int>& psi_powers) {
  if (static_cast<int>(psi_powers.size()) != expr.n)
    fail(ErrorCode::InvalidArgument, "integrate_class: need one psi power per leg");
  std::vector<RatSeries> insertions;
  const auto dim = static_cast<std::size_t>(std::max(0, expr.dimension()));
  for (int d : psi_powers) {
    if (d < 0) fail(ErrorCode::InvalidArgument, "integrate_class: negative psi power");
    RatSeries s(dim);
    if (static_cast<std::size_t>(d) <= dim) s[d] = 1;
    insertions.push_back(std::move(s));
  }
  return integrate_with_leg_series(expr, insertions);
}

std::string describe(const TautExpression& expr) {
  std::string out;
  for (const auto& term : expr.terms) {
    out += to_display_string(term.prefactor) + " * " + term.graph->dump();
    out += '\n';
  }
  return out;
}

}  // namespace elsv
