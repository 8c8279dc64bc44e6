#include "graphs/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"
#include "intersection/intersection.hpp"

namespace elsv {

int StableGraph::edge_count() const {
  int e = 0;
  for (int v = 0; v < vertex_count(); ++v)
    for (int w = v; w < vertex_count(); ++w) e += mult[v][w];
  return e;
}

int StableGraph::valence(int v) const {
  int k = 0;
  for (int leg : leg_vertex) k += leg == v;
  for (int w = 0; w < vertex_count(); ++w) k += (w == v ? 2 : 1) * mult[v][w];
  return k;
}

std::vector<int> StableGraph::legs_at(int v) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (leg_vertex[i] == v) out.push_back(i + 1);
  return out;
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < vertex_count(); ++v)
    for (int w = v; w < vertex_count(); ++w)
      for (int k = 0; k < mult[v][w]; ++k) out.emplace_back(v, w);
  return out;
}

std::string StableGraph::dump() const {
  std::string out = "g=" + std::to_string(g) + ",n=" + std::to_string(n) + ": V[";
  for (int v = 0; v < vertex_count(); ++v) out += (v ? ",g" : "g") + std::to_string(genus[v]);
  out += "] E[";
  bool first = true;
  for (auto [v, w] : edges()) {
    out += (first ? "(v" : ",(v") + std::to_string(v) + ",v" + std::to_string(w) + ")";
    first = false;
  }
  out += "] L[";
  for (int i = 0; i < n; ++i) out += (i ? "," : "") + std::to_string(i + 1) + "->v" + std::to_string(leg_vertex[i]);
  out += "]";
  return out;
}

std::vector<int> StableGraph::encoding() const {
  std::vector<int> code;
  code.push_back(vertex_count());
  code.insert(code.end(), genus.begin(), genus.end());
  code.insert(code.end(), leg_vertex.begin(), leg_vertex.end());
  for (int v = 0; v < vertex_count(); ++v)
    for (int w = v; w < vertex_count(); ++w) code.push_back(mult[v][w]);
  return code;
}

namespace {

StableGraph relabel(const StableGraph& graph, const std::vector<int>& order) {
  // order[new] = old
  int nv = graph.vertex_count();
  std::vector<int> new_of_old(nv);
  for (int i = 0; i < nv; ++i) new_of_old[order[i]] = i;
  StableGraph out;
  out.g = graph.g;
  out.n = graph.n;
  out.genus.resize(nv);
  out.mult.assign(nv, std::vector<int>(nv, 0));
  for (int i = 0; i < nv; ++i) {
    out.genus[i] = graph.genus[order[i]];
    for (int j = 0; j < nv; ++j) out.mult[i][j] = graph.mult[order[i]][order[j]];
  }
  out.leg_vertex.resize(graph.n);
  for (int i = 0; i < graph.n; ++i) out.leg_vertex[i] = new_of_old[graph.leg_vertex[i]];
  return out;
}

// Colour refinement on isomorphism invariants, then the sorted colour classes
// as blocks.
std::vector<std::vector<int>> refined_blocks(const StableGraph& graph) {
  int nv = graph.vertex_count();
  std::vector<std::vector<int>> signature(nv);
  for (int v = 0; v < nv; ++v) {
    signature[v] = {graph.genus[v], graph.loops(v), graph.valence(v)};
    // Legs are labelled, so vertices carrying legs are distinguished by them.
    auto legs = graph.legs_at(v);
    signature[v].push_back(static_cast<int>(legs.size()));
    signature[v].insert(signature[v].end(), legs.begin(), legs.end());
  }
  std::vector<int> colour(nv);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (int v = 0; v < nv; ++v) colour[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
    for (int v = 0; v < nv; ++v) {
      std::vector<std::pair<int, int>> nbrs;
      for (int w = 0; w < nv; ++w)
        if (w != v && graph.mult[v][w] > 0) nbrs.emplace_back(colour[w], graph.mult[v][w]);
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<int> sig{colour[v]};
      for (auto [c, m] : nbrs) {
        sig.push_back(c);
        sig.push_back(m);
      }
      signature[v] = std::move(sig);
    }
  }
  std::vector<std::vector<int>> blocks(classes);
  for (int v = 0; v < nv; ++v) blocks[colour[v]].push_back(v);
  return blocks;
}

}  // namespace

std::uint64_t StableGraph::canonicalize() {
  auto blocks = refined_blocks(*this);
  std::vector<int> order;
  for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());

  std::vector<int> best_code;
  StableGraph best;
  std::uint64_t ties = 0;
  // Enumerate every ordering that permutes vertices within colour blocks.
  std::function<void(std::size_t)> visit = [&](std::size_t block) {
    if (block == blocks.size()) {
      std::vector<int> ord;
      for (const auto& b : blocks) ord.insert(ord.end(), b.begin(), b.end());
      StableGraph candidate = relabel(*this, ord);
      std::vector<int> code = candidate.encoding();
      if (best_code.empty() || code < best_code) {
        best_code = std::move(code);
        best = std::move(candidate);
        ties = 1;
      } else if (code == best_code) {
        ++ties;
      }
      return;
    }
    auto& b = blocks[block];
    std::sort(b.begin(), b.end());
    do {
      visit(block + 1);
    } while (std::next_permutation(b.begin(), b.end()));
  };
  visit(0);
  *this = std::move(best);
  return ties;
}

BigInt automorphism_order(const StableGraph& graph, std::uint64_t vertex_automorphisms) {
  BigInt aut = static_cast<unsigned long>(vertex_automorphisms);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    int l = graph.loops(v);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(l));
    aut *= two_pow * factorial(static_cast<unsigned>(l));
    for (int w = v + 1; w < graph.vertex_count(); ++w) aut *= factorial(static_cast<unsigned>(graph.mult[v][w]));
  }
  return aut;
}

namespace {

bool vertex_stable(int genus, int valence) { return 2 * genus - 2 + valence > 0; }

// All graphs obtained from `graph` by one degeneration: adding a self-edge at
// a vertex of positive genus, or splitting a vertex in two joined by an edge.
void degenerations(const StableGraph& graph, const std::function<void(StableGraph)>& emit) {
  int nv = graph.vertex_count();
  for (int v = 0; v < nv; ++v) {
    if (graph.genus[v] >= 1) {
      StableGraph h = graph;
      --h.genus[v];
      ++h.mult[v][v];
      emit(std::move(h));
    }
    // Split v into v (part one) and a new vertex u = nv (part two).
    auto legs = graph.legs_at(v);
    std::vector<int> nbrs;
    for (int w = 0; w < nv; ++w)
      if (w != v && graph.mult[v][w] > 0) nbrs.push_back(w);
    int loops = graph.loops(v);
    std::vector<int> nbr_split(nbrs.size());
    std::function<void(std::size_t)> rec;
    for (int g1 = 0; g1 <= graph.genus[v]; ++g1) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << legs.size()); ++mask) {
        rec = [&](std::size_t i) {
          if (i < nbrs.size()) {
            for (int m1 = 0; m1 <= graph.mult[v][nbrs[i]]; ++m1) {
              nbr_split[i] = m1;
              rec(i + 1);
            }
            return;
          }
          for (int a = 0; a <= loops; ++a)
            for (int b = 0; a + b <= loops; ++b) {
              int cross = loops - a - b;
              StableGraph h = graph;
              int u = nv;
              h.genus.push_back(graph.genus[v] - g1);
              h.genus[v] = g1;
              for (auto& row : h.mult) row.push_back(0);
              h.mult.emplace_back(nv + 1, 0);
              h.mult[v][v] = a;
              h.mult[u][u] = b;
              h.mult[v][u] = h.mult[u][v] = cross + 1;
              for (std::size_t k = 0; k < nbrs.size(); ++k) {
                int w = nbrs[k];
                int m1 = nbr_split[k];
                int m2 = graph.mult[v][w] - m1;
                h.mult[v][w] = h.mult[w][v] = m1;
                h.mult[u][w] = h.mult[w][u] = m2;
              }
              for (std::size_t k = 0; k < legs.size(); ++k)
                if ((mask >> k) & 1) h.leg_vertex[legs[k] - 1] = u;
              if (vertex_stable(h.genus[v], h.valence(v)) && vertex_stable(h.genus[u], h.valence(u))) emit(std::move(h));
            }
        };
        rec(0);
      }
    }
  }
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_stable_graphs(int g, int n, int max_edges) {
  require_stable(g, n);
  int cap = 3 * g - 3 + n;
  if (max_edges >= 0) cap = std::min(cap, max_edges);

  StableGraph root;
  root.g = g;
  root.n = n;
  root.genus = {g};
  root.leg_vertex.assign(n, 0);
  root.mult = {{0}};

  std::vector<EnumeratedGraph> out;
  std::map<std::vector<int>, StableGraph> level;
  {
    StableGraph c = root;
    auto stab = c.canonicalize();
    out.push_back({c, automorphism_order(c, stab)});
    level.emplace(c.encoding(), c);
  }
  for (int e = 1; e <= cap && !level.empty(); ++e) {
    std::map<std::vector<int>, StableGraph> next;
    for (const auto& [code, graph] : level) {
      degenerations(graph, [&](StableGraph h) {
        h.canonicalize();
        next.emplace(h.encoding(), std::move(h));
      });
    }
    for (auto& [code, graph] : next) {
      StableGraph c = graph;
      auto stab = c.canonicalize();
      out.push_back({c, automorphism_order(c, stab)});
    }
    level = std::move(next);
  }
  return out;
}

bool chiodo_condition_holds(int g, int r, int s, const std::vector<int>& a) {
  if (r < 1) return false;
  long total = static_cast<long>(2 * g - 2 + static_cast<int>(a.size())) * s;
  for (int x : a) total -= x;
  return ((total % r) + r) % r == 0;
}

std::vector<Weighting> enumerate_weightings(const StableGraph& graph, int r, int s, const std::vector<int>& a) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "enumerate_weightings: r must be positive");
  if (static_cast<int>(a.size()) != graph.n) fail(ErrorCode::InvalidArgument, "enumerate_weightings: need one weight per leg");
  for (int x : a)
    if (x < 1 || x > r) fail(ErrorCode::InvalidArgument, "enumerate_weightings: leg weights must lie in 1..r");
  std::vector<Weighting> out;
  if (!chiodo_condition_holds(graph.g, r, s, a)) return out;

  auto mod = [r](long x) { return static_cast<int>(((x % r) + r) % r); };
  auto edges = graph.edges();
  const int nv = graph.vertex_count();
  std::vector<long> base(nv, 0);
  for (int i = 0; i < graph.n; ++i) base[graph.leg_vertex[i]] += a[i];

  std::vector<int> w(edges.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == edges.size()) {
      std::vector<long> sum = base;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        sum[edges[k].first] += w[k];
        sum[edges[k].second] += mod(-w[k]);
      }
      for (int v = 0; v < nv; ++v)
        if (mod(sum[v] - static_cast<long>(s) * (2 * graph.genus[v] - 2 + graph.valence(v))) != 0) return;
      Weighting wt;
      for (int x : a) wt.legs.push_back(mod(x));
      for (std::size_t k = 0; k < edges.size(); ++k) wt.edges.emplace_back(w[k], mod(-w[k]));
      out.push_back(std::move(wt));
      return;
    }
    for (int x = 0; x < r; ++x) {
      w[e] = x;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace elsv
