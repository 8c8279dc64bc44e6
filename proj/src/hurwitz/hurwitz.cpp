#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "error.hpp"
#include "hurwitz/characters.hpp"

namespace elsv {

const char* flavor_name(HurwitzFlavor flavor) {
  switch (flavor) {
    case HurwitzFlavor::Simple: return "simple";
    case HurwitzFlavor::Monotone: return "monotone";
    case HurwitzFlavor::Orbifold: return "orbifold";
  }
  return "?";
}

HurwitzFlavor parse_flavor(const std::string& name) {
  if (name == "simple") return HurwitzFlavor::Simple;
  if (name == "monotone") return HurwitzFlavor::Monotone;
  if (name == "orbifold") return HurwitzFlavor::Orbifold;
  fail(ErrorCode::Parse, "unknown Hurwitz flavor '" + name + "' (expected simple, monotone or orbifold)");
}

HurwitzLimits& hurwitz_limits() {
  static HurwitzLimits limits;
  return limits;
}

namespace {

void validate(const HurwitzQuery& q) {
  if (q.mu.empty()) fail(ErrorCode::InvalidArgument, "Hurwitz query: empty partition");
  if (q.g < 0) fail(ErrorCode::InvalidArgument, "Hurwitz query: negative genus");
  if (q.flavor == HurwitzFlavor::Orbifold && q.r < 1) fail(ErrorCode::InvalidArgument, "Hurwitz query: r must be positive");
  if (q.mu.size() > hurwitz_limits().max_degree)
    fail(ErrorCode::Resource, "Hurwitz query: degree " + std::to_string(q.mu.size()) + " exceeds the limit max_degree=" +
                                  std::to_string(hurwitz_limits().max_degree));
}

int orbifold_r(HurwitzFlavor flavor, int r) { return flavor == HurwitzFlavor::Orbifold ? r : 1; }

Partition infinity_profile(int d, int r) { return Partition(std::vector<int>(static_cast<std::size_t>(d / r), r)); }

// h_b of the given values.
BigInt complete_homogeneous(const std::vector<int>& xs, int b) {
  std::vector<BigInt> h(b + 1, BigInt(0));
  h[0] = 1;
  for (int x : xs)
    for (int k = 1; k <= b; ++k) h[k] += x * h[k - 1];
  return h[b];
}

Rat frobenius(HurwitzFlavor flavor, int r, const Partition& mu, int b) {
  const int d = mu.size();
  r = orbifold_r(flavor, r);
  if (d % r != 0 || b < 0) return Rat(0);
  const Partition inf = infinity_profile(d, r);
  Rat total = 0;
  for (const auto& lambda : partitions_of(d)) {
    BigInt dim = lambda.dimension();
    Rat term = Rat(dim * dim) * central_character(lambda, mu);
    if (flavor == HurwitzFlavor::Orbifold) term *= central_character(lambda, inf);
    if (flavor == HurwitzFlavor::Monotone) {
      term *= Rat(complete_homogeneous(lambda.contents(), b));
    } else {
      BigInt c;
      mpz_pow_ui(c.get_mpz_t(), BigInt(lambda.content_sum()).get_mpz_t(), static_cast<unsigned long>(b));
      term *= Rat(c);
    }
    total += term;
  }
  BigInt df = factorial(static_cast<unsigned>(d));
  return total / Rat(df * df);
}

using Perm = std::vector<std::uint8_t>;

int cycle_count(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(lengths);
}

// Canonical set partition: every point labelled by the smallest point of its block.
void merge_blocks(std::vector<std::uint8_t>& blocks, int a, int b) {
  std::uint8_t la = blocks[a], lb = blocks[b];
  if (la == lb) return;
  std::uint8_t keep = std::min(la, lb), drop = std::max(la, lb);
  for (auto& x : blocks)
    if (x == drop) x = keep;
}

class FactorizationCounter {
 public:
  FactorizationCounter(int d, bool monotone, bool connected) : d_(d), monotone_(monotone), connected_(connected) {}

  // Sequences tau_1..tau_k with tau_k...tau_1 P = id.
  BigInt count(const Perm& p, const std::vector<std::uint8_t>& blocks, int remaining, int max_top) {
    if (remaining == 0) {
      bool identity = true;
      for (int i = 0; i < d_; ++i) identity = identity && p[i] == i;
      if (!identity) return 0;
      if (connected_)
        for (auto x : blocks)
          if (x != 0) return 0;
      return 1;
    }
    const int distance = d_ - cycle_count(p);
    if (distance > remaining || (remaining - distance) % 2 != 0) return 0;
    std::string key(p.begin(), p.end());
    if (connected_) key.append(blocks.begin(), blocks.end());
    key.push_back(static_cast<char>(remaining));
    key.push_back(static_cast<char>(max_top));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    for (int top = 1; top <= (monotone_ ? max_top : d_ - 1); ++top)
      for (int low = 0; low < top; ++low) {
        Perm next = p;
        for (auto& x : next) {
          if (x == low) x = static_cast<std::uint8_t>(top);
          else if (x == top) x = static_cast<std::uint8_t>(low);
        }
        std::vector<std::uint8_t> merged = blocks;
        if (connected_) merge_blocks(merged, low, top);
        total += count(next, merged, remaining - 1, top);
      }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  int d_;
  bool monotone_;
  bool connected_;
  std::unordered_map<std::string, BigInt> memo_;
};

Rat brute_force(const HurwitzQuery& q, bool connected) {
  validate(q);
  auto b = branch_count(q);
  if (!b) return Rat(0);
  const int d = q.mu.size();
  const auto& limits = hurwitz_limits();
  if (d > limits.max_brute_degree)
    fail(ErrorCode::Resource, "brute-force Hurwitz count: degree " + std::to_string(d) + " exceeds the limit max_brute_degree=" +
                                  std::to_string(limits.max_brute_degree));
  if (*b > limits.max_brute_branch)
    fail(ErrorCode::Resource, "brute-force Hurwitz count: " + std::to_string(*b) +
                                  " branch points exceed the limit max_brute_branch=" + std::to_string(limits.max_brute_branch));
  const int r = orbifold_r(q.flavor, q.r);
  const Partition inf = infinity_profile(d, r);

  std::vector<Perm> zero_class, inf_class;
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    Partition type = cycle_type(p);
    if (type == q.mu) zero_class.push_back(p);
    if (type == inf) inf_class.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  FactorizationCounter counter(d, q.flavor == HurwitzFlavor::Monotone, connected);
  BigInt total = 0;
  for (const auto& s0 : zero_class)
    for (const auto& sinf : inf_class) {
      Perm prod(d);
      std::vector<std::uint8_t> blocks(d);
      std::iota(blocks.begin(), blocks.end(), 0);
      for (int i = 0; i < d; ++i) {
        prod[i] = s0[sinf[i]];
        merge_blocks(blocks, i, s0[i]);
        merge_blocks(blocks, i, sinf[i]);
      }
      total += counter.count(prod, blocks, *b, d - 1);
    }
  return Rat(total) / Rat(factorial(static_cast<unsigned>(d)));
}

void require_closed(const HurwitzTable& table) {
  for (const auto& [key, value] : table.entries)
    for (const auto& nu : sub_partitions(key.mu)) {
      if (nu == key.mu) continue;
      for (int b = 0; b <= key.b; ++b)
        if (!table.entries.count(HurwitzKey{nu, b}))
          fail(ErrorCode::MissingEntry, "Hurwitz table: entry (mu=" + nu.to_string() + ", b=" + std::to_string(b) +
                                            ") needed by (mu=" + key.mu.to_string() + ", b=" + std::to_string(key.b) +
                                            ") is missing");
    }
}

using Entries = std::map<HurwitzKey, Rat>;

Entries multiply(const Entries& a, const Entries& b, const Entries& shape, bool exponential) {
  Entries out;
  for (const auto& [ka, va] : a) {
    if (va == 0) continue;
    for (const auto& [kb, vb] : b) {
      if (vb == 0) continue;
      HurwitzKey k{partition_union(ka.mu, kb.mu), ka.b + kb.b};
      if (!shape.count(k)) continue;
      Rat w = va * vb;
      if (exponential) w *= Rat(binomial(static_cast<unsigned>(k.b), static_cast<unsigned>(ka.b)));
      out[k] += w;
    }
  }
  return out;
}

// sum_{k>=1} coeff(k) F^k restricted to the keys of F.
HurwitzTable power_series(const HurwitzTable& table, const std::function<Rat(int)>& coeff) {
  require_closed(table);
  HurwitzTable out{table.exponential_branch_weight, {}};
  for (const auto& [k, v] : table.entries) out.entries[k] = 0;
  int max_length = 0;
  for (const auto& [k, v] : table.entries) max_length = std::max(max_length, k.mu.length());
  Entries power = table.entries;
  for (int k = 1; k <= max_length && !power.empty(); ++k) {
    Rat c = coeff(k);
    for (const auto& [key, v] : power) out.entries[key] += c * v;
    power = multiply(power, table.entries, table.entries, table.exponential_branch_weight);
  }
  return out;
}

}  // namespace

std::optional<int> branch_count(const HurwitzQuery& q) {
  const int d = q.mu.size();
  int b = 2 * q.g - 2 + q.mu.length();
  if (q.flavor == HurwitzFlavor::Orbifold) {
    if (q.r < 1 || d % q.r != 0) return std::nullopt;
    b += d / q.r;
  } else {
    b += d;
  }
  if (b < 0) return std::nullopt;
  return b;
}

Rat count_disconnected_frobenius(const HurwitzQuery& q) {
  validate(q);
  auto b = branch_count(q);
  if (!b) return Rat(0);
  return frobenius(q.flavor, q.r, q.mu, *b);
}

Rat count_connected_bruteforce(const HurwitzQuery& q) { return brute_force(q, true); }

Rat count_disconnected_bruteforce(const HurwitzQuery& q) { return brute_force(q, false); }

HurwitzTable frobenius_disconnected_table(HurwitzFlavor flavor, int r, const Partition& mu, int b) {
  HurwitzTable table{flavor != HurwitzFlavor::Monotone, {}};
  for (const auto& nu : sub_partitions(mu))
    for (int k = 0; k <= b; ++k) table.entries[HurwitzKey{nu, k}] = frobenius(flavor, r, nu, k);
  return table;
}

HurwitzTable connected_from_disconnected(const HurwitzTable& disconnected) {
  return power_series(disconnected, [](int k) -> Rat { return Rat(k % 2 == 1 ? 1 : -1) / Rat(k); });
}

HurwitzTable disconnected_from_connected(const HurwitzTable& connected) {
  return power_series(connected, [](int k) -> Rat { return Rat(1) / Rat(factorial(static_cast<unsigned>(k))); });
}

Rat count_connected(const HurwitzQuery& q) {
  validate(q);
  auto b = branch_count(q);
  if (!b) return Rat(0);
  auto table = connected_from_disconnected(frobenius_disconnected_table(q.flavor, q.r, q.mu, *b));
  return table.entries.at(HurwitzKey{q.mu, *b});
}

}  // namespace elsv
