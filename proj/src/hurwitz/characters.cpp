#include "hurwitz/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "error.hpp"

namespace elsv {

namespace {

// Beta-set (first-column hook lengths) of lambda with exactly `beads` beads.
std::vector<int> beta_set(const Partition& lambda, int beads) {
  std::vector<int> beta;
  for (int i = 0; i < beads; ++i) beta.push_back((i < lambda.length() ? lambda.parts[i] : 0) + beads - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int beads = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) {
    int part = beta[i] - (beads - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  Partition p;
  p.parts = parts;
  return p;
}

std::mutex char_mutex;
std::map<std::pair<Partition, Partition>, BigInt> char_memo;

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) fail(ErrorCode::InvalidArgument, "character: partitions of different sizes");
  if (mu.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard lock(char_mutex);
    auto it = char_memo.find(key);
    if (it != char_memo.end()) return it->second;
  }
  const int k = mu.parts.front();
  Partition rest;
  rest.parts.assign(mu.parts.begin() + 1, mu.parts.end());
  const int beads = lambda.length() + k;
  std::vector<int> beta = beta_set(lambda, beads);
  BigInt total = 0;
  // Removing a rim hook of length k moves one bead from x to the free
  // position x - k; the sign counts the beads jumped over.
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int x = beta[i];
    if (x < k) continue;
    bool free = true;
    int between = 0;
    for (int y : beta) {
      if (y == x - k) free = false;
      if (y > x - k && y < x) ++between;
    }
    if (!free) continue;
    std::vector<int> moved = beta;
    moved[i] = x - k;
    BigInt term = character(from_beta(moved), rest);
    total += between % 2 == 0 ? term : BigInt(-term);
  }
  std::lock_guard lock(char_mutex);
  return char_memo.try_emplace(key, total).first->second;
}

const CharacterTable& character_table(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> tables;
  {
    std::lock_guard lock(mutex);
    auto it = tables.find(d);
    if (it != tables.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>();
  table->d = d;
  table->partitions = partitions_of(d);
  for (const auto& lambda : table->partitions) {
    std::vector<BigInt> row;
    for (const auto& mu : table->partitions) row.push_back(character(lambda, mu));
    table->values.push_back(std::move(row));
  }
  std::lock_guard lock(mutex);
  return *tables.try_emplace(d, std::move(table)).first->second;
}

Rat central_character(const Partition& lambda, const Partition& mu) {
  return Rat(mu.class_size() * character(lambda, mu)) / Rat(lambda.dimension());
}

}  // namespace elsv
