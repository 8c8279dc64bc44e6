#include "doctest.h"

#include "error.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"

using namespace elsv;

namespace {

HurwitzQuery query(HurwitzFlavor f, int g, std::vector<int> mu, int r = 1) { return HurwitzQuery{f, r, g, Partition(mu)}; }

Rat rising(long x, long k) {
  Rat out = 1;
  if (k >= 0)
    for (long i = 0; i < k; ++i) out *= x + i;
  else
    for (long i = 1; i <= -k; ++i) out /= x - i;
  return out;
}

// Genus-zero closed forms: Hurwitz's formula for simple numbers and the
// rising-factorial formula for monotone ones.
Rat hurwitz_genus_zero(const Partition& mu) {
  const int d = mu.size(), l = mu.length();
  Rat out = Rat(factorial(static_cast<unsigned>(d + l - 2))) / Rat(mu.aut_order());
  out *= rat_pow(Rat(d), l - 3);
  for (int m : mu.parts) out *= rat_pow(Rat(m), m) / Rat(factorial(static_cast<unsigned>(m)));
  return out;
}

Rat monotone_genus_zero(const Partition& mu) {
  const int d = mu.size(), l = mu.length();
  Rat out = rising(2 * d + 1, l - 3) / Rat(mu.aut_order());
  for (int m : mu.parts) out *= Rat(binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(m)));
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  Partition mu = Partition::parse("1, 3,1");
  CHECK(mu.parts == std::vector<int>{3, 1, 1});
  CHECK(mu.to_string() == "3,1,1");
  CHECK(Partition::parse("1,2") == Partition::parse("2,1"));
  CHECK(mu.aut_order() == 2);
  CHECK(mu.centralizer_order() == 6);
  CHECK(mu.class_size() == 20);
  CHECK(Partition({3, 2}).dimension() == 5);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
  CHECK(sub_partitions(mu).size() == 5);
  CHECK(partition_difference(mu, Partition({1})) == Partition({3, 1}));
  CHECK_THROWS_AS(Partition::parse("2,x"), Error);
  CHECK_THROWS_AS(Partition::parse("2,0"), Error);
  CHECK_THROWS_AS(Partition({0}), Error);
}

TEST_CASE("character tables satisfy orthogonality") {
  for (int d = 1; d <= 7; ++d) {
    const auto& t = character_table(d);
    const auto n = t.partitions.size();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(t.values[a][n - 1] == t.partitions[a].dimension());
      for (std::size_t b = 0; b < n; ++b) {
        BigInt s = 0;
        for (std::size_t m = 0; m < n; ++m) s += t.partitions[m].class_size() * t.values[a][m] * t.values[b][m];
        CHECK(s == (a == b ? factorial(static_cast<unsigned>(d)) : BigInt(0)));
      }
    }
  }
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
}

TEST_CASE("small Hurwitz numbers") {
  CHECK(count_connected(query(HurwitzFlavor::Simple, 0, {1})) == 1);
  CHECK(count_connected(query(HurwitzFlavor::Simple, 1, {2})) == Rat(1, 2));
  CHECK(count_connected(query(HurwitzFlavor::Monotone, 1, {2})) == Rat(1, 2));
  CHECK(count_connected(query(HurwitzFlavor::Orbifold, 0, {2}, 2)) == Rat(1, 2));
  CHECK(count_connected(query(HurwitzFlavor::Orbifold, 1, {2}, 2)) == Rat(1, 2));
  CHECK(count_disconnected_frobenius(query(HurwitzFlavor::Simple, 0, {2})) == Rat(1, 2));
  CHECK(count_connected(query(HurwitzFlavor::Simple, 0, {1, 1, 1})) == 4);
  CHECK(count_connected_bruteforce(query(HurwitzFlavor::Simple, 1, {2})) == Rat(1, 2));
  CHECK(count_connected_bruteforce(query(HurwitzFlavor::Orbifold, 0, {2}, 2)) == Rat(1, 2));
  // r does not divide |mu|.
  CHECK(count_connected(query(HurwitzFlavor::Orbifold, 0, {2}, 3)) == 0);
  CHECK_FALSE(branch_count(query(HurwitzFlavor::Orbifold, 0, {2}, 3)).has_value());
  CHECK(*branch_count(query(HurwitzFlavor::Simple, 2, {3, 1})) == 8);
  CHECK(*branch_count(query(HurwitzFlavor::Orbifold, 1, {3, 3}, 3)) == 4);
}

TEST_CASE("genus zero closed forms") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& mu : partitions_of(d)) {
      CAPTURE(mu.to_string());
      CHECK(count_connected(HurwitzQuery{HurwitzFlavor::Simple, 1, 0, mu}) == hurwitz_genus_zero(mu));
      CHECK(count_connected(HurwitzQuery{HurwitzFlavor::Monotone, 1, 0, mu}) == monotone_genus_zero(mu));
    }
}

TEST_CASE("brute force agrees with the character formula") {
  int compared = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : partitions_of(d))
      for (int g = 0; g <= 3; ++g)
        for (auto flavor : {HurwitzFlavor::Simple, HurwitzFlavor::Monotone, HurwitzFlavor::Orbifold})
          for (int r = 1; r <= (flavor == HurwitzFlavor::Orbifold ? d : 1); ++r) {
            HurwitzQuery q{flavor, r, g, mu};
            auto b = branch_count(q);
            if (!b || *b > 6) continue;
            CAPTURE(flavor_name(flavor));
            CAPTURE(r);
            CAPTURE(g);
            CAPTURE(mu.to_string());
            Rat dis = count_disconnected_bruteforce(q);
            Rat con = count_connected_bruteforce(q);
            CHECK(dis == count_disconnected_frobenius(q));
            CHECK(con == count_connected(q));
            CHECK(con <= dis);
            ++compared;
          }
  CHECK(compared > 60);
}

TEST_CASE("Hurwitz structural properties") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : partitions_of(d))
      for (int g = 0; g <= 2; ++g) {
        HurwitzQuery simple{HurwitzFlavor::Simple, 1, g, mu};
        HurwitzQuery monotone{HurwitzFlavor::Monotone, 1, g, mu};
        HurwitzQuery orbifold_one{HurwitzFlavor::Orbifold, 1, g, mu};
        CHECK(count_connected(monotone) <= count_connected(simple));
        CHECK(count_connected(orbifold_one) == count_connected(simple));
      }
}

TEST_CASE("connected and disconnected tables") {
  for (auto flavor : {HurwitzFlavor::Simple, HurwitzFlavor::Monotone, HurwitzFlavor::Orbifold})
    for (const auto& mu : {Partition({2, 2, 1}), Partition({1, 1, 1, 1}), Partition({3, 2}), Partition({2, 2})}) {
      auto dis = frobenius_disconnected_table(flavor, 2, mu, 7);
      auto con = connected_from_disconnected(dis);
      CHECK(disconnected_from_connected(con).entries == dis.entries);
      CHECK(connected_from_disconnected(disconnected_from_connected(con)).entries == con.entries);
    }
  // A single part cannot split: connected = disconnected.
  auto single = frobenius_disconnected_table(HurwitzFlavor::Simple, 1, Partition({4}), 5);
  CHECK(connected_from_disconnected(single).entries == single.entries);
  CHECK(connected_from_disconnected(HurwitzTable{}).entries.empty());

  auto holes = frobenius_disconnected_table(HurwitzFlavor::Simple, 1, Partition({2, 1}), 3);
  holes.entries.erase(HurwitzKey{Partition({1}), 2});
  CHECK_THROWS_AS(connected_from_disconnected(holes), Error);
  try {
    connected_from_disconnected(holes);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingEntry);
  }
}

TEST_CASE("Hurwitz search limits") {
  HurwitzQuery big{HurwitzFlavor::Simple, 1, 0, Partition({4, 4})};
  try {
    count_connected_bruteforce(big);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Resource);
    CHECK(std::string(e.what()).find("max_brute_degree") != std::string::npos);
  }
  CHECK_THROWS_AS(count_connected(HurwitzQuery{HurwitzFlavor::Simple, 1, 0, Partition({20})}), Error);
  CHECK(parse_flavor("monotone") == HurwitzFlavor::Monotone);
  CHECK_THROWS_AS(parse_flavor("spin"), Error);
}
