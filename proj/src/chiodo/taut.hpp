#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exact/rational.hpp"
#include "exact/series.hpp"
#include "graphs/stable_graph.hpp"

namespace elsv {

/// Polynomial in two variables x, y (the psi classes on the two halves of an
/// edge), truncated at total degree `degree`. coeff(i, j) multiplies x^i y^j.
class Bivariate {
 public:
  explicit Bivariate(int degree = 0);
  static Bivariate constant(const Rat& c, int degree);

  int degree() const { return degree_; }
  const Rat& coeff(int i, int j) const { return c_[i][j]; }
  Rat& coeff(int i, int j) { return c_[i][j]; }

  Bivariate& operator+=(const Bivariate& o);
  Bivariate& operator*=(const Rat& s);
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
  /// Exponential of a polynomial with zero constant term.
  Bivariate exp() const;
  /// Exact quotient by (x + y), one degree lower. Throws Consistency if the
  /// division leaves a remainder.
  Bivariate divide_by_sum() const;
  Bivariate truncated_copy(int degree) const;
  /// The same polynomial with the roles of x and y exchanged.
  Bivariate swapped() const;
  bool is_zero() const;
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.degree_ == b.degree_ && a.c_ == b.c_; }

 private:
  int degree_;
  std::vector<std::vector<Rat>> c_;
};

/// Polynomial in kappa classes: monomials are sorted lists of kappa indices.
struct KappaMonomial {
  std::vector<int> kappas;
  int degree = 0;
  Rat coeff;
};
using KappaPoly = std::vector<KappaMonomial>;

/// exp(sum_l coeffs[l-1] kappa_l) expanded up to total degree max_degree.
KappaPoly kappa_exponential(const std::vector<Rat>& coeffs, int max_degree);

/// One decorated stable graph: prefactor times, at every vertex, a kappa
/// polynomial, on every leg a series in its psi class, on every edge (in
/// graph.edges() order) a polynomial in the psi classes of its two halves.
struct TautTerm {
  std::shared_ptr<const StableGraph> graph;
  Rat prefactor;
  std::vector<std::shared_ptr<const KappaPoly>> vertex_kappa;
  std::vector<std::shared_ptr<const RatSeries>> leg_series;
  std::vector<std::shared_ptr<const Bivariate>> edge_factor;
};

/// Sum of decorated stable graphs representing a tautological class on the
/// moduli space of genus g curves with n marked points, truncated in degree.
struct TautExpression {
  int g = 0;
  int n = 0;
  int max_degree = 0;
  std::vector<TautTerm> terms;

  int dimension() const { return 3 * g - 3 + n; }
};

/// Integral of the class times prod_i psi_i^{d_i}.
Rat integrate_class(const TautExpression& expr, const std::vector<int>& psi_powers);

/// Integral of the class times prod_i f_i(psi_i) for the given leg series.
Rat integrate_with_leg_series(const TautExpression& expr, const std::vector<RatSeries>& insertions);

/// Human-readable listing, one term per line.
std::string describe(const TautExpression& expr);

}  // namespace elsv
