#pragma once

#include <numeric>
#include <queue>
#include <vector>

#include "gsft/matrix.hpp"

namespace gsft {

struct StructureFlags {
  bool essential = false;    // no zero rows or columns
  bool irreducible = false;  // every ordered vertex pair joined by some positive-length path
  bool primitive = false;    // irreducible with cycle-length gcd 1
};

namespace detail {

inline std::vector<bool> reachable(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> q;
  seen[start] = true;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  return seen;
}

/// gcd of cycle lengths of a strongly connected digraph, from BFS levels:
/// every edge (u, v) contributes |level(u) + 1 - level(v)|.
inline long long digraph_period(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<long long> level(n, -1);
  std::queue<int> q;
  level[0] = 0;
  q.push(0);
  long long g = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push(w);
      }
      g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
    }
  }
  return g;
}

}  // namespace detail

/// Structural predicates of the support digraph (entry != 0 gives an edge,
/// which for group-ring matrices is the right notion of irreducibility).
template <class S>
StructureFlags structure_flags(const Matrix<S>& a) {
  require(a.is_square(), "structure_flags: matrix is not square");
  const int n = static_cast<int>(a.nrows());
  StructureFlags out;
  if (n == 0) {
    out.essential = true;
    return out;
  }
  std::vector<std::vector<int>> adj(n), radj(n);
  std::vector<bool> has_out(n, false), has_in(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!ScalarOps<S>::is_zero(a.at(i, j))) {
        adj[i].push_back(j);
        radj[j].push_back(i);
        has_out[i] = true;
        has_in[j] = true;
      }
  out.essential = true;
  for (int i = 0; i < n; ++i)
    if (!has_out[i] || !has_in[i]) out.essential = false;

  auto fwd = detail::reachable(adj, 0);
  auto bwd = detail::reachable(radj, 0);
  bool strongly_connected = true;
  for (int i = 0; i < n; ++i)
    if (!fwd[i] || !bwd[i]) strongly_connected = false;
  bool every_vertex_on_edge = true;
  for (int i = 0; i < n; ++i)
    if (!has_out[i]) every_vertex_on_edge = false;
  out.irreducible = strongly_connected && every_vertex_on_edge;
  out.primitive = out.irreducible && detail::digraph_period(adj) == 1;
  return out;
}

}  // namespace gsft
