#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "error.hpp"

namespace elsv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

int Partition::multiplicity(int i) const { return static_cast<int>(std::count(parts.begin(), parts.end(), i)); }

BigInt Partition::aut_order() const {
  BigInt out = 1;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

BigInt Partition::centralizer_order() const {
  BigInt out = aut_order();
  for (int x : parts) out *= x;
  return out;
}

BigInt Partition::class_size() const { return factorial(static_cast<unsigned>(size())) / centralizer_order(); }

long Partition::content_sum() const {
  long s = 0;
  for (int c : contents()) s += c;
  return s;
}

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (int row = 0; row < length(); ++row)
    for (int col = 0; col < parts[row]; ++col) out.push_back(col - row);
  return out;
}

BigInt Partition::dimension() const {
  // Hook length formula.
  BigInt hooks = 1;
  for (int row = 0; row < length(); ++row)
    for (int col = 0; col < parts[row]; ++col) {
      int below = 0;
      for (int k = row + 1; k < length() && parts[k] > col; ++k) ++below;
      hooks *= parts[row] - col + below;
    }
  return factorial(static_cast<unsigned>(size())) / hooks;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos == text.size()) return Partition();
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      fail(ErrorCode::Parse, "partition: expected a positive integer in '" + std::string(text) + "'");
    if (value < 1) fail(ErrorCode::Parse, "partition: parts must be positive in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail(ErrorCode::Parse, "partition: unexpected character in '" + std::string(text) + "'");
    ++pos;
  }
  return Partition(parts);
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      Partition p;
      p.parts = current;
      out.push_back(p);
      return;
    }
    for (int x = std::min(left, max_part); x >= 1; --x) {
      current.push_back(x);
      rec(left - x, x);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& mu) {
  std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
  for (int x : mu.parts) {
    if (groups.empty() || groups.back().first != x) groups.emplace_back(x, 0);
    ++groups.back().second;
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == groups.size()) {
      if (!current.empty()) out.push_back(Partition(current));
      return;
    }
    for (int k = 0; k <= groups[i].second; ++k) {
      for (int j = 0; j < k; ++j) current.push_back(groups[i].first);
      rec(i + 1);
      for (int j = 0; j < k; ++j) current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Partition partition_difference(const Partition& mu, const Partition& nu) {
  std::multiset<int> rest(mu.parts.begin(), mu.parts.end());
  for (int x : nu.parts) {
    auto it = rest.find(x);
    if (it == rest.end()) fail(ErrorCode::InvalidArgument, "partition_difference: not a sub-multiset");
    rest.erase(it);
  }
  return Partition(std::vector<int>(rest.begin(), rest.end()));
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> all = a.parts;
  all.insert(all.end(), b.parts.begin(), b.parts.end());
  return Partition(all);
}

}  // namespace elsv
