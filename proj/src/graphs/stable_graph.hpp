#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exact/rational.hpp"

namespace elsv {

/// Dual graph of a boundary stratum. Vertices carry genera; mult[v][w] is the
/// number of edges between v and w (mult[v][v] counts self-edges); legs are
/// labelled 1..n and leg i sits on vertex leg_vertex[i-1].
struct StableGraph {
  int g = 0;
  int n = 0;
  std::vector<int> genus;
  std::vector<int> leg_vertex;
  std::vector<std::vector<int>> mult;

  int vertex_count() const { return static_cast<int>(genus.size()); }
  int edge_count() const;
  int loops(int v) const { return mult[v][v]; }
  /// Number of half-edges plus legs at v.
  int valence(int v) const;
  int first_betti() const { return edge_count() - vertex_count() + 1; }
  std::vector<int> legs_at(int v) const;

  /// Edges as (v, w) with v <= w in lexicographic order, parallel edges
  /// repeated. Half-edge 0 of an edge sits at v, half-edge 1 at w.
  std::vector<std::pair<int, int>> edges() const;

  /// "g=1,n=1: V[g0] E[(v0,v0)] L[1->v0]"
  std::string dump() const;

  /// Vertex relabelling into the canonical representative of the
  /// isomorphism class; returns the number of vertex permutations fixing it.
  std::uint64_t canonicalize();
  std::vector<int> encoding() const;

  friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

struct EnumeratedGraph {
  StableGraph graph;
  BigInt aut_order;
};

/// Isomorphism classes of stable graphs of genus g with n labelled legs and
/// at most max_edges edges (negative means no bound beyond 3g-3+n), sorted by
/// edge count then canonical encoding.
std::vector<EnumeratedGraph> enumerate_stable_graphs(int g, int n, int max_edges = -1);

/// |Aut| of a canonical graph given its vertex-permutation stabilizer size.
BigInt automorphism_order(const StableGraph& graph, std::uint64_t vertex_automorphisms);

/// Weights on half-edges: legs[i] for leg i+1, edges[e] = (w at the half-edge
/// on the first vertex, w at the half-edge on the second).
struct Weighting {
  std::vector<int> legs;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const Weighting&, const Weighting&) = default;
};

/// (2g-2+n)s - sum a_i = 0 mod r.
bool chiodo_condition_holds(int g, int r, int s, const std::vector<int>& a);

/// All weightings w: H -> {0..r-1} with leg weights a_i mod r, opposite
/// weights on the two halves of every edge and vertex sums s(2g_v-2+n_v)
/// mod r. Empty when the global condition fails.
std::vector<Weighting> enumerate_weightings(const StableGraph& graph, int r, int s, const std::vector<int>& a);

}  // namespace elsv
