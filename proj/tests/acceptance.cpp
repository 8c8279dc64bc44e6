// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "campaign/campaign.hpp"
#include "error.hpp"
#include "graphs/stable_graph.hpp"
#include "hurwitz/hurwitz.hpp"
#include "intersection/intersection.hpp"
#include "tr/ingredients.hpp"

using namespace elsv;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char budget[96];
  std::snprintf(budget, sizeof budget, "%.1fs of %.0fs", secs, budget_seconds);
  out.require(secs <= budget_seconds, std::string("over time budget: ") + budget);
  std::printf("[%s] criterion %d: %s (%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), budget,
              out.note.empty() ? "" : " - ", out.note.c_str());
  std::fflush(stdout);
  failures += !out.ok;
}

CheckReport run(CheckId id) {
  CampaignConfig cfg;
  cfg.check = id;
  return run_campaign(cfg);
}

std::string first_bad_row(const CheckReport& rep) {
  for (const auto& row : rep.rows)
    if (row.verdict != Verdict::Pass)
      return row.check + " g=" + std::to_string(row.g) + " r=" + std::to_string(row.r) + " s=" + std::to_string(row.s) +
             " mu=" + row.mu + ": " + row.lhs + " vs " + row.rhs + (row.detail.empty() ? "" : " (" + row.detail + ")");
  return "";
}

const CheckRow* find_row(const CheckReport& rep, const std::string& check, int g, int r, const std::string& mu) {
  for (const auto& row : rep.rows)
    if (row.check == check && row.g == g && row.r == r && row.mu == mu) return &row;
  return nullptr;
}

void require_all_pass(Outcome& out, const CheckReport& rep, std::size_t min_rows) {
  out.require(rep.rows.size() >= min_rows, "only " + std::to_string(rep.rows.size()) + " rows");
  out.require(rep.passed(), "failing row " + first_bad_row(rep));
}

std::size_t count_rows(const CheckReport& rep, const std::string& check) {
  return static_cast<std::size_t>(
      std::count_if(rep.rows.begin(), rep.rows.end(), [&](const CheckRow& r) { return r.check == check; }));
}

}  // namespace

int main() {
  criterion(1, "ELSV formula, g <= 2, |mu| <= 5", 120, [](Outcome& out) {
    auto rep = run(CheckId::Elsv);
    // 7 + 18 + 18 stable (g, mu) with |mu| <= 5.
    require_all_pass(out, rep, 43);
    const CheckRow* pinned = find_row(rep, "elsv", 1, 1, "2");
    out.require(pinned && pinned->lhs == "1/12" && pinned->rhs == "1/12", "pinned row g=1 mu=(2) is not 1/12 = 1/12");
  });

  criterion(2, "monotone ELSV formula, g <= 1, |mu| <= 4", 120, [](Outcome& out) {
    auto rep = run(CheckId::MonotoneElsv);
    require_all_pass(out, rep, 14);
    // C(4,2) (A_1 <kappa_1> + (5!!/3!!) <psi>) with A_1 = -3.
    Rat expected = Rat(6) * (make_rat(-3, 24) + make_rat(5, 24));
    const CheckRow* pinned = find_row(rep, "monotone-elsv", 1, 1, "2");
    out.require(pinned && pinned->lhs == to_display_string(expected) && pinned->rhs == "1/2",
                "pinned row g=1 mu=(2) differs from 1/2");
  });

  criterion(3, "orbifold ELSV formula, r in {2,3}, g <= 1, |mu| <= 4", 300, [](Outcome& out) {
    auto rep = run(CheckId::Jpt);
    require_all_pass(out, rep, 13);
    for (const auto& row : rep.rows) {
      std::vector<int> parts;
      std::istringstream ss(row.mu);
      for (int p; ss >> p;) parts.push_back(p);
      out.require(row.rhs == to_display_string(closed_form_N(row.g, parts, row.r, row.r)),
                  "right side differs from closed_form_N at mu=" + row.mu);
    }
    const CheckRow* pinned = find_row(rep, "jpt", 1, 2, "2");
    out.require(pinned && pinned->lhs == "1/2" && pinned->rhs == "1/2", "pinned row r=2 g=1 mu=(2) is not 1/2");
  });

  criterion(4, "Mumford specialization", 120, [](Outcome& out) {
    auto rep = run(CheckId::Mumford);
    require_all_pass(out, rep, 6);
    const CheckRow* deg1 = find_row(rep, "mumford", 1, 1, "psi^0");
    out.require(deg1 && deg1->lhs == "-1/24", "degree-one integral on M_{1,1} is not -1/24");
    // Hodge values: int lambda_2 psi^2 = 7/5760, int lambda_1 psi^3 = 1/480 on M_{2,1}.
    const CheckRow* deg2 = find_row(rep, "mumford", 2, 1, "psi^2");
    const CheckRow* deg3 = find_row(rep, "mumford", 2, 1, "psi^1");
    out.require(deg2 && deg2->lhs == "7/5760", "degree-two integral on M_{2,1}");
    out.require(deg3 && deg3->lhs == "0", "degree-three integral on M_{2,1}");
  });

  criterion(5, "Givental action equals the graph sum, r <= 3", 600, [](Outcome& out) {
    auto rep = run(CheckId::GiventalConsistency);
    require_all_pass(out, rep, 100);
    for (auto [g, n] : {std::pair{0, 3}, std::pair{0, 4}, std::pair{1, 1}, std::pair{1, 2}}) {
      bool seen = std::any_of(rep.rows.begin(), rep.rows.end(), [&](const CheckRow& r) {
        return r.g == g && r.r == 3 && static_cast<int>(std::count(r.mu.begin(), r.mu.end(), ' ')) + 1 == n;
      });
      out.require(seen, "no r = 3 rows for (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
    }
  });

  criterion(6, "R-matrix symplecticity, R from B, flat-unit test", 300, [](Outcome& out) {
    auto rep = run(CheckId::Doss);
    require_all_pass(out, rep, 20);
    out.require(count_rows(rep, "doss:symplectic") == 4, "symplectic rows for r = 1..4");
    out.require(count_rows(rep, "doss:r-from-b") == 6, "R-from-B rows for r = 1..3");
    out.require(count_rows(rep, "doss") == 5, "flat-unit rows for r <= 3, s in {1,r}");
    out.require(count_rows(rep, "doss:perturbed") == 5, "perturbed negative controls");
    for (const auto& row : rep.rows)
      if (row.check == "doss:perturbed") out.require(row.lhs == "violated", "perturbed y passed at r=" + std::to_string(row.r));
  });

  criterion(7, "recursion agrees with the intersection formula and Hurwitz counts", 1200, [](Outcome& out) {
    auto rep = run(CheckId::TrEquivalence);
    require_all_pass(out, rep, 60);
    for (const auto& row : rep.rows) out.require(row.tolerance == "1e-20", "row compared at tolerance " + row.tolerance);
    out.require(count_rows(rep, "tr-equivalence:simple") > 0, "no simple Hurwitz rows");
    out.require(count_rows(rep, "tr-equivalence:monotone") > 0, "no monotone Hurwitz rows");
    for (auto [r, s] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
      out.require(std::any_of(rep.rows.begin(), rep.rows.end(),
                              [&](const CheckRow& row) { return row.check == "tr-equivalence" && row.r == r && row.s == s; }),
                  "missing curve S(" + std::to_string(r) + "," + std::to_string(s) + ")");
  });

  criterion(8, "string/dilaton, brute force vs Frobenius, graph census, cache round trip", 300, [](Outcome& out) {
    // Every pure-psi entry the campaigns above left in the cache.
    auto snap = IntersectionCache::global().snapshot();
    int checked = 0;
    for (const auto& [key, value] : snap) {
      if (!key.kappa.empty() || key.psi.empty()) continue;
      const int g = key.g;
      const int n = key.n();
      if (2 * g - 2 + n - 1 <= 0) continue;
      const auto& d = key.psi;
      if (d.front() == 0) {
        std::vector<int> rest(d.begin() + 1, d.end());
        Rat sum = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (rest[i] == 0) continue;
          auto lower = rest;
          --lower[i];
          sum += psi_intersection(g, lower);
        }
        out.require(value == sum, "string equation at " + key.to_string());
        ++checked;
      }
      auto one = std::find(d.begin(), d.end(), 1);
      if (one != d.end()) {
        std::vector<int> rest = d;
        rest.erase(rest.begin() + (one - d.begin()));
        out.require(value == Rat(2 * g - 2 + n - 1) * psi_intersection(g, rest), "dilaton equation at " + key.to_string());
        ++checked;
      }
    }
    out.require(checked > 50, "only " + std::to_string(checked) + " string/dilaton checks");

    int compared = 0;
    for (int d = 1; d <= 5; ++d)
      for (const auto& mu : partitions_of(d))
        for (int g = 0; g <= 3; ++g)
          for (auto flavor : {HurwitzFlavor::Simple, HurwitzFlavor::Monotone, HurwitzFlavor::Orbifold})
            for (int r = 1; r <= (flavor == HurwitzFlavor::Orbifold ? d : 1); ++r) {
              HurwitzQuery q{flavor, r, g, mu};
              auto b = branch_count(q);
              if (!b || *b > 6) continue;
              std::string where = std::string(flavor_name(flavor)) + " r=" + std::to_string(r) + " g=" + std::to_string(g) +
                                  " mu=" + mu.to_string();
              out.require(count_disconnected_bruteforce(q) == count_disconnected_frobenius(q), "disconnected " + where);
              out.require(count_connected_bruteforce(q) == count_connected(q), "connected " + where);
              ++compared;
            }
    out.require(compared > 60, "only " + std::to_string(compared) + " Hurwitz comparisons");

    out.require(enumerate_stable_graphs(1, 1).size() == 2, "census (1,1) != 2");
    out.require(enumerate_stable_graphs(2, 0).size() == 7, "census (2,0) != 7");

    auto path = std::filesystem::temp_directory_path() / "elsvkit_acceptance.cache";
    IntersectionCache::global().flush(path);
    std::ifstream in(path, std::ios::binary);
    std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    IntersectionCache reloaded;
    reloaded.load(path);
    out.require(on_disk == IntersectionCache::global().serialize(), "flushed file differs from serialize()");
    out.require(reloaded.serialize() == on_disk, "reloaded cache is not byte-identical");
    std::filesystem::remove(path);
  });

  return failures == 0 ? 0 : 1;
}
