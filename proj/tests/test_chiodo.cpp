#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>

#include "chiodo/chiodo.hpp"
#include "chiodo/cyclotomic.hpp"
#include "chiodo/givental.hpp"
#include "error.hpp"
#include "exact/special.hpp"

using namespace elsv;

namespace {

// Every psi exponent vector of length n with total at most `total`.
std::vector<std::vector<int>> psi_monomials(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(d);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
  return out;
}

std::vector<std::vector<int>> admissible_weights(int g, int n, int r, int s) {
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

int sum(const std::vector<int>& v) {
  int t = 0;
  for (int x : v) t += x;
  return t;
}

}  // namespace

TEST_CASE("chern character terms") {
  ChiodoParams p{1, 1, {1}};
  auto ch = chern_character(1, p, 1, 1);
  REQUIRE(!ch.terms.empty());
  CHECK(ch.terms[0].prefactor == Rat(1, 12));
  CHECK(ch.terms[1].prefactor == Rat(-1, 12));
  CHECK_THROWS_AS(chern_character(1, ChiodoParams{2, 1, {2}}, 1, 1), Error);
  CHECK_THROWS_AS(chern_character(0, p, 1, 1), Error);
}

TEST_CASE("Hodge integrals from the r = 1 class") {
  // The r = s = 1 class is 1 - lambda_1 + lambda_2 - ...; compare with the
  // lambda_g formula int lambda_g prod psi^{d_i} = multinomial(2g-3+n; d) b_g,
  // b_1 = 1/24, b_2 = 7/5760, and the known int_{M_{2,1}} lambda_1 psi^3 = 1/480.
  auto c11 = chiodo_class(1, 1, ChiodoParams{1, 1, {1}});
  CHECK(integrate_class(*c11, {0}) == Rat(-1, 24));
  CHECK(integrate_class(*c11, {1}) == Rat(1, 24));

  auto c13 = chiodo_class(1, 3, ChiodoParams{1, 1, {1, 1, 1}});
  CHECK(integrate_class(*c13, {2, 0, 0}) == Rat(-1, 24));
  CHECK(integrate_class(*c13, {1, 1, 0}) == Rat(-1, 12));
  CHECK(integrate_class(*c13, {3, 0, 0}) == Rat(1, 24));

  auto c21 = chiodo_class(2, 1, ChiodoParams{1, 1, {1}});
  CHECK(integrate_class(*chiodo_class(2, 1, ChiodoParams{1, 1, {1}}, 0), {4}) == Rat(1, 1152));
  auto c21_1 = chiodo_class(2, 1, ChiodoParams{1, 1, {1}}, 1);
  CHECK(integrate_class(*c21_1, {3}) == Rat(-1, 480));
  CHECK(integrate_class(*c21, {4}) == Rat(1, 1152));
  auto c21_2 = chiodo_class(2, 1, ChiodoParams{1, 1, {1}}, 2);
  CHECK(integrate_class(*c21_2, {2}) == Rat(7, 5760));
  // lambda_3 and lambda_4 vanish in genus 2.
  auto c21_3 = chiodo_class(2, 1, ChiodoParams{1, 1, {1}}, 3);
  CHECK(integrate_class(*c21_3, {1}) == 0);
  CHECK(integrate_class(*c21, {0}) == 0);

  auto c22 = chiodo_class(2, 2, ChiodoParams{1, 1, {1, 1}}, 2);
  CHECK(integrate_class(*c22, {2, 1}) == Rat(7, 1920));
}

TEST_CASE("degree-zero part is r^{2g-1}") {
  for (int r = 1; r <= 3; ++r)
    for (int s = 0; s <= r; ++s)
      for (const auto& a : admissible_weights(1, 1, r, s)) {
        auto c = chiodo_class(1, 1, ChiodoParams{r, s, a}, 0);
        CHECK(integrate_class(*c, {1}) == Rat(r) / Rat(24));
      }
}

TEST_CASE("degree-one part equals -r^{2g-1} ch_1") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {0, 5}, {2, 1}})
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; s <= r; ++s)
        for (const auto& a : admissible_weights(g, n, r, s)) {
          ChiodoParams p{r, s, a};
          auto c = chiodo_class(g, n, p, 1);
          auto ch = chern_character(1, p, g, n);
          const int dim = 3 * g - 3 + n;
          for (const auto& d : psi_monomials(n, dim - 1)) {
            if (sum(d) != dim - 1) continue;
            CHECK(integrate_class(*c, d) == -rat_pow(Rat(r), 2 * g - 1) * integrate_class(ch, d));
          }
        }
}

TEST_CASE("ELSV right-hand side integrals") {
  CHECK(chiodo_integral_elsv(1, 1, 1, {2}) == Rat(1, 24));
  CHECK(chiodo_integral_elsv(1, 2, 2, {2}) == Rat(1, 16));
  // (2g-2+n)s - a = 1 - 2 is odd: no square root exists.
  CHECK(chiodo_integral_elsv(1, 2, 1, {2}) == 0);
  CHECK(elsv_leg_weights(3, {1, 3, 5}) == std::vector<int>{2, 3, 1});
  // Genus zero, three points: only the degree-zero part r^{-1}.
  CHECK(chiodo_integral_elsv(0, 2, 1, {1, 1, 1}) == Rat(1, 2));
  CHECK(chiodo_integral_elsv(0, 2, 1, {1, 1, 2}) == 0);
  CHECK_THROWS_AS(chiodo_integral_elsv(0, 1, 1, {1, 1}), Error);
}

TEST_CASE("class is independent of term order") {
  auto c = chiodo_class(1, 2, ChiodoParams{3, 1, {1, 1}});
  TautExpression reversed = *c;
  std::reverse(reversed.terms.begin(), reversed.terms.end());
  for (const auto& d : psi_monomials(2, 2)) CHECK(integrate_class(*c, d) == integrate_class(reversed, d));
}

TEST_CASE("R-matrix symplectic condition") {
  for (int r = 1; r <= 4; ++r) {
    CAPTURE(r);
    auto R = chiodo_r_matrix(r, 8);
    CHECK(satisfies_symplectic_condition(R));
    CHECK(satisfies_symplectic_condition(R.inverse()));
    // A single perturbed coefficient breaks it.
    auto bad = R;
    bad.diagonal[0][3] += Rat(1, 7);
    CHECK_FALSE(satisfies_symplectic_condition(bad));
  }
}

TEST_CASE("TFT flat unit") {
  CHECK(flat_unit_check(2, 2));
  CHECK(flat_unit_check(3, 1));
  for (int r = 1; r <= 5; ++r)
    for (int s = 0; s <= r; ++s) CHECK(flat_unit_check(r, s));
  TFTData tft{3, 1};
  CHECK(tft.amplitude(0, {1, 1, 1}) == 0);
  CHECK(tft.amplitude(0, {1, 2, 1}) == Rat(1, 3));
  CHECK(tft.amplitude(1, {1}) == 3);
}

TEST_CASE("dilaton leaves reproduce the kappa exponential") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 0; s <= r; ++s) {
      const int D = 5;
      auto R_inv = chiodo_r_matrix(r, D + 1).inverse();
      auto from_leaves = dilaton_kappa_polynomial(R_inv, s, D);
      auto direct = kappa_exponential(chiodo_vertex_coefficients(r, s, D), D);
      std::map<std::vector<int>, Rat> a, b;
      for (const auto& m : from_leaves) a[m.kappas] += m.coeff;
      for (const auto& m : direct) b[m.kappas] += m.coeff;
      std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
      CHECK(a == b);
    }
}

TEST_CASE("Givental action agrees with the graph formula") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}})
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; s <= r; ++s)
        for (const auto& a : admissible_weights(g, n, r, s)) {
          ChiodoParams p{r, s, a};
          auto c = chiodo_class(g, n, p);
          auto giv = givental_action(g, n, p);
          for (const auto& d : psi_monomials(n, 3 * g - 3 + n)) CHECK(integrate_class(*c, d) == integrate_class(giv, d));
        }
  // (0,3), degree 0: r^{-1} on admissible labels.
  auto giv = givental_action(0, 3, ChiodoParams{3, 1, {1, 1, 2}});
  CHECK(integrate_class(giv, {0, 0, 0}) == Rat(1, 3));
}

TEST_CASE("cyclotomic arithmetic and basis change") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rat>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rat>{1, -1, 1});
  for (int r = 1; r <= 6; ++r) {
    CAPTURE(r);
    CHECK(Cyclotomic::root_power(r, r) == Cyclotomic(r, Rat(1)));
    CHECK(Cyclotomic::root_power(r, 2) * Cyclotomic::root_power(r, -2) == Cyclotomic(r, Rat(1)));
    Cyclotomic total(r);
    for (int k = 0; k < r; ++k) total += Cyclotomic::root_power(r, k);
    CHECK(total == Cyclotomic(r, Rat(r == 1 ? 1 : 0)));
  }
  CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic(2, Rat(-1)));

  // r = 2: v_a = sum_i (J^{ai}/2) e_i with J = -1.
  std::vector<Cyclotomic> v1{Cyclotomic(2, Rat(1)), Cyclotomic(2)};
  auto e = basis_change(v1, BasisDirection::FlatToIdempotent);
  CHECK(e[0] == Cyclotomic(2, Rat(-1, 2)));
  CHECK(e[1] == Cyclotomic(2, Rat(1, 2)));

  for (int r = 1; r <= 4; ++r) {
    std::vector<Cyclotomic> x;
    for (int k = 0; k < r; ++k) x.push_back(Cyclotomic(r, Rat(k * k - 3, k + 2)) + Cyclotomic::root_power(r, k));
    auto there = basis_change(x, BasisDirection::FlatToIdempotent);
    CHECK(basis_change(there, BasisDirection::IdempotentToFlat) == x);
    CHECK(basis_change(basis_change(x, BasisDirection::IdempotentToFlat), BasisDirection::FlatToIdempotent) == x);
    auto eta = idempotent_pairing(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(eta[i][j] == Cyclotomic(r, Rat(i == j ? 1 : 0)));
  }
  CHECK(basis_change({Cyclotomic(1, Rat(5))}, BasisDirection::FlatToIdempotent)[0] == Cyclotomic(1, Rat(5)));
}
