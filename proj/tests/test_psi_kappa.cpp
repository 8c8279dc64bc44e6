#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>

#include "error.hpp"
#include "intersection/cache.hpp"
#include "intersection/intersection.hpp"

using namespace elsv;

namespace {

// Genus zero closed form <tau_d1...tau_dn>_0 = (n-3)! / prod d_i!.
Rat genus_zero_closed_form(const std::vector<int>& d) {
  Rat v(factorial(static_cast<unsigned>(d.size() - 3)));
  for (int x : d) v /= Rat(factorial(static_cast<unsigned>(x)));
  return v;
}

void for_each_composition(int total, int parts, std::vector<int>& cur, const std::function<void()>& fn) {
  if (parts == 0) {
    if (total == 0) fn();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    for_each_composition(total - x, parts - 1, cur, fn);
    cur.pop_back();
  }
}

// Sum over S_k of prod over cycles of kappa_{sum of m in the cycle}: the
// pushforward of prod psi_{n+j}^{m_j+1} along the map forgetting k points.
void cycle_kappas(const std::vector<int>& m, std::vector<std::vector<int>>& out) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<bool> seen(m.size(), false);
    std::vector<int> kappas;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (seen[i]) continue;
      int sum = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = true;
        sum += m[j];
      }
      kappas.push_back(sum);
    }
    out.push_back(kappas);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TEST_CASE("psi intersections: base values") {
  CHECK(psi_intersection(0, {0, 0, 0}) == 1);
  CHECK(psi_intersection(1, {1}) == Rat(1, 24));
  CHECK(psi_intersection(0, {0, 0, 0, 1}) == 1);
  CHECK(psi_intersection(2, {4}) == Rat(1, 1152));
  CHECK(psi_intersection(3, {7}) == Rat(1, 82944));
  CHECK(psi_intersection(2, {2, 3}) == Rat(29, 5760));
  CHECK(psi_intersection(1, {1, 1}) == Rat(1, 24));
  CHECK(psi_intersection(1, {0, 2}) == Rat(1, 24));
  CHECK(psi_intersection(1, {2, 0}) == psi_intersection(1, {0, 2}));
  CHECK(psi_intersection(2, {1, 1}) == 0);
  CHECK_THROWS_AS(psi_intersection(0, {0, 0}), Error);
  CHECK_THROWS_AS(psi_intersection(1, {}), Error);
}

TEST_CASE("psi intersections: independent closed forms") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> cur;
    for_each_composition(n - 3, n, cur, [&] { CHECK(psi_intersection(0, cur) == genus_zero_closed_form(cur)); });
  }
  for (int g = 1; g <= 4; ++g) {
    Rat expected = Rat(1) / (rat_pow(Rat(24), g) * Rat(factorial(static_cast<unsigned>(g))));
    CHECK(psi_intersection(g, {3 * g - 2}) == expected);
  }
}

TEST_CASE("kappa intersections") {
  CHECK(kappa_psi_intersection(1, {1}, {0}) == Rat(1, 24));
  CHECK(kappa_psi_intersection(0, {1}, {0, 0, 0, 0}) == 1);
  CHECK(kappa_psi_intersection(0, {1, 1}, {0, 0, 0, 0, 0}) == 5);
  CHECK(kappa_psi_intersection(2, {1, 1, 1}, {}) == Rat(43, 2880));
  CHECK(kappa_psi_intersection(2, {1, 2}, {}) == Rat(1, 240));
  CHECK(kappa_psi_intersection(2, {3}, {}) == Rat(1, 1152));
  CHECK(kappa_psi_intersection(1, {}, {1}) == psi_intersection(1, {1}));
  CHECK(kappa_psi_intersection(1, {0}, {1}) == psi_intersection(1, {1}));

  // Pushforward along forgetting k points, summed over permutation cycles.
  struct Case {
    int g;
    std::vector<int> psi;
    std::vector<int> m;
  };
  std::vector<Case> cases = {{0, {0, 0, 0}, {1, 1}},  {1, {0}, {1, 1}},    {1, {1, 0}, {1, 1}},
                             {2, {1}, {1, 2}},        {1, {0}, {1, 1, 1}}, {0, {0, 0, 0, 0}, {1, 1, 1}},
                             {2, {0}, {2, 1, 1}},     {1, {}, {}},         {2, {2}, {1, 1, 1}}};
  for (const auto& c : cases) {
    if (c.m.empty()) continue;
    int n = static_cast<int>(c.psi.size());
    if (2 * c.g - 2 + n <= 0) continue;
    std::vector<int> lifted = c.psi;
    for (int mj : c.m) lifted.push_back(mj + 1);
    Rat upstairs = psi_intersection(c.g, lifted);
    std::vector<std::vector<int>> terms;
    cycle_kappas(c.m, terms);
    Rat downstairs = 0;
    for (const auto& kappas : terms) downstairs += kappa_psi_intersection(c.g, kappas, c.psi);
    CHECK(upstairs == downstairs);
  }
}

TEST_CASE("string and dilaton equations on cached values") {
  // Populate a spread of entries first.
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      std::vector<int> cur;
      for_each_composition(3 * g - 3 + n, n, cur, [&] { psi_intersection(g, cur); });
    }
  auto snap = IntersectionCache::global().snapshot();
  int checked = 0;
  for (const auto& [key, value] : snap) {
    if (!key.kappa.empty() || key.psi.empty()) continue;
    std::vector<int> d = key.psi;
    int g = key.g;
    if (d.front() == 0 && 2 * g - 2 + key.n() - 1 > 0) {
      std::vector<int> rest(d.begin() + 1, d.end());
      Rat sum = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue;
        auto lower = rest;
        --lower[i];
        sum += psi_intersection(g, lower);
      }
      CHECK(value == sum);
      ++checked;
    }
    auto one = std::find(d.begin(), d.end(), 1);
    if (one != d.end() && 2 * g - 2 + key.n() - 1 > 0) {
      std::vector<int> rest = d;
      rest.erase(rest.begin() + (one - d.begin()));
      CHECK(value == Rat(2 * g - 2 + key.n() - 1) * psi_intersection(g, rest));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("cache round trip") {
  IntersectionCache cache;
  psi_intersection(2, {2, 2, 1}, cache);
  kappa_psi_intersection(1, {1, 1}, {0, 1}, cache);
  auto dir = std::filesystem::temp_directory_path() / "elsvkit_cache_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "cache.txt";
  cache.flush(path);
  IntersectionCache loaded;
  loaded.load(path);
  CHECK(loaded.snapshot() == cache.snapshot());
  CHECK(loaded.serialize() == cache.serialize());

  std::ofstream(dir / "empty.txt").close();
  IntersectionCache empty;
  empty.load(dir / "empty.txt");
  CHECK(empty.stats().entries == 0);

  std::ofstream(dir / "bad.txt") << "1|1|=1/24\n0|0,0,0|=1/0\n";
  IntersectionCache bad;
  try {
    bad.load(dir / "bad.txt");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }

  IntersectionCache conflict;
  conflict.insert(IntersectionKey(1, {1}), Rat(1, 24));
  CHECK_NOTHROW(conflict.insert(IntersectionKey(1, {1}), Rat(1, 24)));
  CHECK_THROWS_AS(conflict.insert(IntersectionKey(1, {1}), Rat(1, 12)), Error);
  CHECK(IntersectionKey::parse("2|3,1|2").to_string() == "2|1,3|2");
  std::filesystem::remove_all(dir);
}
