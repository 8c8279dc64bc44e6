#include "campaign/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "chiodo/chiodo.hpp"
#include "chiodo/givental.hpp"
#include "error.hpp"
#include "exact/bigfloat.hpp"
#include "exact/special.hpp"
#include "graphs/stable_graph.hpp"
#include "hurwitz/hurwitz.hpp"
#include "intersection/intersection.hpp"
#include "tr/ingredients.hpp"
#include "tr/recursion.hpp"

namespace elsv {

namespace {

constexpr int kFloatDigits = 25;
constexpr const char* kTrTolerance = "1e-20";
constexpr const char* kSeriesTolerance = "1e-30";

struct Task {
  CheckRow identity;
  std::function<std::vector<CheckRow>()> run;
};

std::string mu_text(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + std::to_string(parts[i]);
  return out;
}

CheckRow make_row(std::string check, int g, int r, int s, std::string mu) {
  CheckRow row;
  row.check = std::move(check);
  row.g = g;
  row.r = r;
  row.s = s;
  row.mu = std::move(mu);
  return row;
}

CheckRow exact_row(CheckRow row, const Rat& lhs, const Rat& rhs) {
  row.lhs = to_display_string(lhs);
  row.rhs = to_display_string(rhs);
  row.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
  return row;
}

bool within(const BigFloat& a, const BigFloat& b, const char* tol) {
  BigFloat scale = max(BigFloat(1L), max(abs(a), abs(b)));
  return abs(a - b) <= BigFloat::parse(tol) * scale;
}

CheckRow float_row(CheckRow row, const BigFloat& lhs, const Rat& rhs, const char* tol) {
  row.lhs = lhs.to_string(kFloatDigits);
  row.rhs = to_display_string(rhs);
  row.tolerance = tol;
  row.verdict = within(lhs, BigFloat(rhs), tol) ? Verdict::Pass : Verdict::Fail;
  return row;
}

CheckRow bool_row(CheckRow row, bool got, bool expected) {
  row.lhs = got ? "satisfied" : "violated";
  row.rhs = expected ? "satisfied" : "violated";
  row.verdict = got == expected ? Verdict::Pass : Verdict::Fail;
  return row;
}

// Every exponent vector of length n with the given total.
std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      d[i] = left;
      out.push_back(d);
      return;
    }
    for (int x = left; x >= 0; --x) {
      d[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (total == 0) out.push_back({});
  } else {
    rec(0, total);
  }
  return out;
}

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

Rat labelled_count(HurwitzFlavor flavor, int r, int g, const Partition& mu) {
  return Rat(mu.aut_order()) * count_connected(HurwitzQuery{flavor, r, g, mu});
}

int pick(const std::optional<int>& v, int standard, int wide, bool extended) {
  return v ? *v : (extended ? wide : standard);
}

std::vector<int> pick_r(const CampaignConfig& cfg, std::vector<int> standard, std::vector<int> wide) {
  if (!cfg.r_values.empty()) return cfg.r_values;
  return cfg.extended ? wide : standard;
}

TrOptions tr_options(const CampaignConfig& cfg) {
  TrOptions opts;
  opts.precision_bits = cfg.precision;
  return opts;
}

// ---------------------------------------------------------------- checks

void elsv_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const int g_max = pick(cfg.g_max, 2, 2, cfg.extended);
  const int d_max = pick(cfg.d_max, 5, 6, cfg.extended);
  for (int g = 0; g <= g_max; ++g)
    for (int d = 1; d <= d_max; ++d)
      for (const auto& mu : partitions_of(d)) {
        if (!stable(g, mu.length())) continue;
        CheckRow id = make_row("elsv", g, 1, 1, mu_text(mu.parts));
        tasks.push_back({id, [id, g, mu] {
                           HurwitzQuery q{HurwitzFlavor::Simple, 1, g, mu};
                           auto b = branch_count(q);
                           Rat lhs = labelled_count(HurwitzFlavor::Simple, 1, g, mu) / Rat(factorial(static_cast<unsigned>(*b)));
                           return std::vector<CheckRow>{exact_row(id, lhs, simple_elsv_rhs(g, mu.parts))};
                         }});
      }
}

void monotone_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const int g_max = pick(cfg.g_max, 1, 2, cfg.extended);
  const int d_max = pick(cfg.d_max, 4, 5, cfg.extended);
  for (int g = 0; g <= g_max; ++g)
    for (int d = 1; d <= d_max; ++d)
      for (const auto& mu : partitions_of(d)) {
        if (!stable(g, mu.length())) continue;
        CheckRow id = make_row("monotone-elsv", g, 1, 1, mu_text(mu.parts));
        tasks.push_back({id, [id, g, mu] {
                           Rat lhs = labelled_count(HurwitzFlavor::Monotone, 1, g, mu);
                           return std::vector<CheckRow>{exact_row(id, lhs, monotone_elsv_rhs(g, mu.parts))};
                         }});
      }
}

// b! r^b prod (mu_i/r)^{[mu_i]}/[mu_i]! int C(r, r; a) / prod (1 - mu_i psi_i / r).
Rat orbifold_rhs(int g, const Partition& mu, int r) {
  const long b = 2L * g - 2 + mu.length() + mu.size() / r;
  Rat out = Rat(factorial(static_cast<unsigned>(b))) * rat_pow(Rat(r), b);
  for (int m : mu.parts) {
    const int q = m / r;
    out *= rat_pow(make_rat(m, r), q) / Rat(factorial(static_cast<unsigned>(q)));
  }
  return out * chiodo_integral_elsv(g, r, r, mu.parts);
}

void jpt_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const int g_max = pick(cfg.g_max, 1, 1, cfg.extended);
  const int d_max = pick(cfg.d_max, 4, 6, cfg.extended);
  for (int r : pick_r(cfg, {2, 3}, {2, 3, 4}))
    for (int g = 0; g <= g_max; ++g)
      for (int d = r; d <= d_max; d += r)
        for (const auto& mu : partitions_of(d)) {
          if (!stable(g, mu.length())) continue;
          CheckRow id = make_row("jpt", g, r, r, mu_text(mu.parts));
          tasks.push_back({id, [id, g, mu, r] {
                             Rat lhs = labelled_count(HurwitzFlavor::Orbifold, r, g, mu);
                             return std::vector<CheckRow>{exact_row(id, lhs, orbifold_rhs(g, mu, r))};
                           }});
        }
}

std::vector<std::pair<int, int>> tr_shapes(int g_max, int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= g_max; ++g)
    for (int n = 1; n <= n_max; ++n)
      if (stable(g, n)) out.emplace_back(g, n);
  return out;
}

// One task per (curve, g, n): a single recursion run yields every mu. The
// curve is built inside the task so that unsupported parameters become an
// error row.
void push_tr_task(std::vector<Task>& tasks, const std::string& check, const std::string& curve_id, int r, int s, int g,
                  int n, int mu_max, const TrOptions& opts, std::function<Rat(int, const Partition&)> expected) {
  CheckRow id = make_row(check, g, r, s, "*");
  tasks.push_back({id, [=] {
                     std::vector<CheckRow> rows;
                     auto curve = SpectralCurve::parse(curve_id);
                     for (const auto& e : extract_coefficients(curve, g, n, mu_max, opts)) {
                       CheckRow row = make_row(check, g, r, s, mu_text(e.mu.parts));
                       rows.push_back(float_row(row, e.value, expected(g, e.mu), kTrTolerance));
                     }
                     return rows;
                   }});
}

std::string srs_id(int r, int s) { return "S(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

void rspin_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const int g_max = pick(cfg.g_max, 1, 1, cfg.extended);
  const int mu_max = pick(cfg.mu_max, 3, 4, cfg.extended);
  const int n_max = cfg.extended ? 3 : 2;
  for (int r : pick_r(cfg, {2, 3}, {2, 3, 4}))
    for (auto [g, n] : tr_shapes(g_max, n_max))
      push_tr_task(tasks, "rspin-rhs", srs_id(r, 1), r, 1, g, n, mu_max, tr_options(cfg),
                   [r](int g, const Partition& mu) { return closed_form_N(g, mu.parts, r, 1); });
}

void tr_equivalence_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const int g_max = pick(cfg.g_max, 1, 1, cfg.extended);
  const int mu_max = pick(cfg.mu_max, 4, 5, cfg.extended);
  const int n_max = cfg.extended ? 3 : 2;
  const auto opts = tr_options(cfg);
  for (int r : pick_r(cfg, {1, 2}, {1, 2, 3}))
    for (int s : cfg.s_values(r, {"1", "r"}))
      for (auto [g, n] : tr_shapes(g_max, n_max))
        push_tr_task(tasks, "tr-equivalence", srs_id(r, s), r, s, g, n, mu_max, opts,
                     [r, s](int g, const Partition& mu) { return closed_form_N(g, mu.parts, r, s); });
  // n = 3 with mu_i <= 5 would need degree-15 Hurwitz counts.
  for (auto [g, n] : tr_shapes(g_max, std::min(n_max, 2))) {
    push_tr_task(tasks, "tr-equivalence:simple", "S(1,1)", 1, 1, g, n, mu_max, opts,
                 [](int g, const Partition& mu) { return labelled_count(HurwitzFlavor::Simple, 1, g, mu); });
    push_tr_task(tasks, "tr-equivalence:monotone", "monotone", 1, 1, g, n, mu_max, opts,
                 [](int g, const Partition& mu) { return labelled_count(HurwitzFlavor::Monotone, 1, g, mu); });
  }
}

// Solves sum_j x_j t_i^j = v_i exactly.
std::vector<Rat> solve_vandermonde(const std::vector<Rat>& t, std::vector<Rat> v) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rat_pow(t[i], static_cast<long>(j));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(v[p], v[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      v[i] -= f * v[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= m[i][i];
  return v;
}

void mumford_tasks(const CampaignConfig&, std::vector<Task>& tasks) {
  CheckRow id1 = make_row("mumford", 1, 1, 1, "psi^0");
  tasks.push_back({id1, [id1] {
                     Rat lhs = integrate_class(*chiodo_class(1, 1, ChiodoParams{1, 1, {1}}), {0});
                     return std::vector<CheckRow>{exact_row(id1, lhs, make_rat(-1, 24))};
                   }});
  // On M_{2,1}, h_{2,(d)} d! / (b! d^d) = sum_j I_j d^j with I_j the integral
  // of the degree 4-j part against psi^j. Five degrees determine all I_j.
  CheckRow id2 = make_row("mumford", 2, 1, 1, "*");
  tasks.push_back({id2, [] {
                     std::vector<Rat> t, v;
                     for (int d = 1; d <= 5; ++d) {
                       Partition mu({d});
                       auto b = branch_count(HurwitzQuery{HurwitzFlavor::Simple, 1, 2, mu});
                       t.push_back(Rat(d));
                       v.push_back(count_connected(HurwitzQuery{HurwitzFlavor::Simple, 1, 2, mu}) *
                                   Rat(factorial(static_cast<unsigned>(d))) /
                                   (Rat(factorial(static_cast<unsigned>(*b))) * rat_pow(Rat(d), d)));
                     }
                     auto from_hurwitz = solve_vandermonde(t, v);
                     auto c21 = chiodo_class(2, 1, ChiodoParams{1, 1, {1}});
                     std::vector<CheckRow> rows;
                     for (int j = 4; j >= 0; --j) {
                       CheckRow row = make_row("mumford", 2, 1, 1, "psi^" + std::to_string(j));
                       rows.push_back(exact_row(row, integrate_class(*c21, {j}), from_hurwitz[static_cast<std::size_t>(j)]));
                     }
                     return rows;
                   }});
}

std::vector<std::vector<int>> admissible_labels(int g, int n, int r, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (chiodo_condition_holds(g, r, s, a)) out.push_back(a);
      return;
    }
    for (int x = 1; x <= r; ++x) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void givental_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  std::vector<std::pair<int, int>> shapes{{0, 3}, {0, 4}, {1, 1}, {1, 2}};
  if (cfg.extended) {
    shapes.emplace_back(0, 5);
    shapes.emplace_back(2, 1);
  }
  for (auto [g, n] : shapes)
    for (int r : pick_r(cfg, {1, 2, 3}, {1, 2, 3, 4}))
      for (int s : cfg.s_values(r, {"all"}))
        for (const auto& a : admissible_labels(g, n, r, s)) {
          CheckRow id = make_row("givental-consistency", g, r, s, mu_text(a));
          tasks.push_back({id, [id, g = g, n = n, r, s, a] {
                             ChiodoParams p{r, s, a};
                             auto graph_sum = chiodo_class(g, n, p);
                             auto action = givental_action(g, n, p);
                             const int dim = 3 * g - 3 + n;
                             std::vector<Rat> lhs, rhs;
                             for (int total = 0; total <= dim; ++total)
                               for (const auto& d : compositions(n, total)) {
                                 lhs.push_back(integrate_class(*graph_sum, d));
                                 rhs.push_back(integrate_class(action, d));
                               }
                             CheckRow row = id;
                             for (std::size_t i = 0; i < lhs.size(); ++i) {
                               row.lhs += (i ? ";" : "") + to_display_string(lhs[i]);
                               row.rhs += (i ? ";" : "") + to_display_string(rhs[i]);
                             }
                             row.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
                             return std::vector<CheckRow>{row};
                           }});
        }
}

// exp(-sum_k B_{k+1}(a/r) zeta^k / (k(k+1))).
RatSeries bernoulli_diagonal(int r, int a, std::size_t order) {
  RatSeries exponent(order);
  for (std::size_t k = 1; k <= order; ++k)
    exponent[k] = -bernoulli_polynomial(static_cast<unsigned>(k + 1), make_rat(a, r)) / Rat(static_cast<long>(k * (k + 1)));
  return exponent.exp();
}

void doss_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const std::size_t symplectic_order = cfg.extended ? 10 : 8;
  for (int r : pick_r(cfg, {1, 2, 3, 4}, {1, 2, 3, 4, 5})) {
    CheckRow id = make_row("doss:symplectic", 0, r, 0, "order " + std::to_string(symplectic_order));
    tasks.push_back({id, [id, r, symplectic_order] {
                       auto R = chiodo_r_matrix(r, symplectic_order);
                       return std::vector<CheckRow>{bool_row(id, satisfies_symplectic_condition(R), true)};
                     }});
  }
  const std::size_t b_order = 4;
  for (int r : pick_r(cfg, {1, 2, 3}, {1, 2, 3, 4}))
    for (int a = 1; a <= r; ++a) {
      CheckRow id = make_row("doss:r-from-b", 0, r, 1, "a=" + std::to_string(a));
      tasks.push_back({id, [id, r, a, b_order] {
                         auto R = r_matrix_from_B(SpectralCurve::srs(r, 1), b_order);
                         RatSeries expected = bernoulli_diagonal(r, a, b_order);
                         const BigFloat tol = BigFloat::parse(kSeriesTolerance);
                         CheckRow row = id;
                         row.tolerance = kSeriesTolerance;
                         bool ok = true;
                         for (std::size_t k = 0; k <= b_order; ++k) {
                           const BigComplex& got = R.at(a - 1, a - 1)[k];
                           row.lhs += (k ? ";" : "") + got.re.to_string(kFloatDigits);
                           row.rhs += (k ? ";" : "") + to_display_string(expected[k]);
                           ok = ok && abs(got - BigComplex(expected[k])) <= tol * max(BigFloat(1L), abs(got));
                           for (int b = 1; b <= r; ++b)
                             if (b != a) ok = ok && abs(R.at(a - 1, b - 1)[k]) <= tol;
                         }
                         row.verdict = ok ? Verdict::Pass : Verdict::Fail;
                         return std::vector<CheckRow>{row};
                       }});
    }
  const std::size_t doss_order = cfg.extended ? 4 : 3;
  for (int r : pick_r(cfg, {1, 2, 3}, {1, 2, 3, 4}))
    for (int s : cfg.s_values(r, {"1", "r"}))
      for (bool perturbed : {false, true}) {
        CheckRow id = make_row(perturbed ? "doss:perturbed" : "doss", 0, r, s, "order " + std::to_string(doss_order));
        tasks.push_back({id, [id, r, s, perturbed, doss_order] {
                           auto curve = SpectralCurve::srs(r, s);
                           if (perturbed) curve = curve.perturbed();
                           return std::vector<CheckRow>{bool_row(id, doss_test(curve, doss_order), !perturbed)};
                         }});
      }
}

void table_tasks(const CampaignConfig& cfg, std::vector<Task>& tasks) {
  const auto opts = tr_options(cfg);
  const int mu_max = pick(cfg.mu_max, 3, 4, cfg.extended);
  const std::vector<std::pair<int, int>> shapes{{0, 3}, {1, 1}};
  struct Family {
    std::string name;
    std::string curve;
    int r;
    int s;
    std::optional<HurwitzFlavor> flavor;
    std::function<Rat(int, const Partition&)> intersection;
  };
  std::vector<Family> families{
      {"simple", "S(1,1)", 1, 1, HurwitzFlavor::Simple,
       [](int g, const Partition& mu) { return closed_form_N(g, mu.parts, 1, 1); }},
      {"monotone", "monotone", 1, 1, HurwitzFlavor::Monotone,
       [](int g, const Partition& mu) { return monotone_elsv_rhs(g, mu.parts); }},
      {"orbifold", "S(2,2)", 2, 2, HurwitzFlavor::Orbifold,
       [](int g, const Partition& mu) { return closed_form_N(g, mu.parts, 2, 2); }},
      {"r-spin", "S(2,1)", 2, 1, std::nullopt,
       [](int g, const Partition& mu) { return closed_form_N(g, mu.parts, 2, 1); }},
      {"r-spin", "S(3,1)", 3, 1, std::nullopt,
       [](int g, const Partition& mu) { return closed_form_N(g, mu.parts, 3, 1); }},
  };
  for (const auto& f : families)
    for (auto [g, n] : shapes) {
      const int bound = n == 3 ? std::min(mu_max, 2) : mu_max;
      push_tr_task(tasks, "table:" + f.name + ":tr", f.curve, f.r, f.s, g, n, bound, opts, f.intersection);
      if (!f.flavor) continue;
      const int r = f.r;
      const HurwitzFlavor flavor = *f.flavor;
      CheckRow id = make_row("table:" + f.name + ":hurwitz", g, r, f.s, "*");
      tasks.push_back({id, [id, f, g = g, n = n, r, flavor, bound] {
                         std::vector<CheckRow> rows;
                         for (int d = n; d <= n * bound; ++d)
                           for (const auto& mu : partitions_of(d)) {
                             if (mu.length() != n || mu.parts.front() > bound) continue;
                             if (flavor == HurwitzFlavor::Orbifold && d % r != 0) continue;
                             CheckRow row = id;
                             row.mu = mu_text(mu.parts);
                             rows.push_back(exact_row(row, labelled_count(flavor, r, g, mu), f.intersection(g, mu)));
                           }
                         return rows;
                       }});
    }
}

std::vector<Task> build_tasks(const CampaignConfig& cfg) {
  std::vector<Task> tasks;
  switch (cfg.check) {
    case CheckId::Elsv: elsv_tasks(cfg, tasks); break;
    case CheckId::MonotoneElsv: monotone_tasks(cfg, tasks); break;
    case CheckId::Jpt: jpt_tasks(cfg, tasks); break;
    case CheckId::RspinRhs: rspin_tasks(cfg, tasks); break;
    case CheckId::TrEquivalence: tr_equivalence_tasks(cfg, tasks); break;
    case CheckId::Mumford: mumford_tasks(cfg, tasks); break;
    case CheckId::GiventalConsistency: givental_tasks(cfg, tasks); break;
    case CheckId::Doss: doss_tasks(cfg, tasks); break;
    case CheckId::Table: table_tasks(cfg, tasks); break;
    case CheckId::All:
      for (CheckId id : all_checks()) {
        CampaignConfig sub = cfg;
        sub.check = id;
        auto more = build_tasks(sub);
        tasks.insert(tasks.end(), more.begin(), more.end());
      }
      break;
  }
  return tasks;
}

std::vector<CheckRow> run_task(const Task& task, const CampaignConfig& cfg) {
  PrecisionScope scope(cfg.precision);
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckRow> rows;
  try {
    rows = task.run();
  } catch (const Error& e) {
    CheckRow row = task.identity;
    row.lhs = "-";
    row.rhs = "-";
    row.verdict = Verdict::Error;
    row.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    rows = {row};
  }
  if (cfg.timing) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& row : rows) row.seconds = std::round(secs * 1000.0) / 1000.0;
  }
  return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& row : rows)
    if (row.verdict != Verdict::Pass) return false;
  return true;
}

}  // namespace

Rat simple_elsv_rhs(int g, const std::vector<int>& mu) {
  Rat out = 1;
  for (int m : mu) out *= rat_pow(Rat(m), m) / Rat(factorial(static_cast<unsigned>(m)));
  return out * chiodo_integral_elsv(g, 1, 1, mu);
}

Rat monotone_elsv_rhs(int g, const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  require_stable(g, n);
  const int dim = 3 * g - 3 + n;
  KappaPoly kappas = dim > 0 ? kappa_exponential(monotone_kappa_coefficients(static_cast<unsigned>(dim)), dim)
                             : KappaPoly{KappaMonomial{{}, 0, Rat(1)}};
  Rat integral = 0;
  for (const auto& m : kappas) {
    if (m.degree > dim) continue;
    for (const auto& d : compositions(n, dim - m.degree)) {
      Rat weight = m.coeff;
      for (int i = 0; i < n; ++i)
        weight *= Rat(odd_double_factorial(mu[i] + d[i])) / Rat(odd_double_factorial(mu[i]));
      integral += weight * kappa_psi_intersection(g, m.kappas, d);
    }
  }
  Rat prefactor = 1;
  for (int m : mu) prefactor *= Rat(binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(m)));
  return prefactor * integral;
}

CheckReport run_campaign(const CampaignConfig& cfg) {
  auto& cache = IntersectionCache::global();
  if (!cfg.cache_path.empty()) cache.load(cfg.cache_path);
  const std::size_t hits_before = cache.stats().hits;

  std::vector<Task> tasks = build_tasks(cfg);
  std::vector<std::vector<CheckRow>> results(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = run_task(tasks[i], cfg);
      done[i] = 1;
      if (cfg.fail_fast && !all_pass(results[i])) stop.store(true);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CheckReport report;
  report.campaign = check_name(cfg.check);
  report.precision = cfg.precision;
  // Claims are made in index order, so every task before the first failure
  // has finished and the truncated report does not depend on scheduling.
  for (std::size_t i = 0; i < tasks.size() && done[i]; ++i) {
    report.rows.insert(report.rows.end(), results[i].begin(), results[i].end());
    if (cfg.fail_fast && !all_pass(results[i])) break;
  }
  if (!cfg.cache_path.empty()) cache.flush(cfg.cache_path);
  auto stats = cache.stats();
  report.cache_hits = stats.hits - hits_before;
  report.cache_entries = stats.entries;
  return report;
}

}  // namespace elsv
