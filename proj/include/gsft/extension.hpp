#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsft/group_ring_matrix.hpp"
#include "gsft/matrix.hpp"

namespace gsft {

/// A finite graph together with a group acting on it by graph automorphisms,
/// the action free on vertices. Edges with the same endpoints are
/// distinguished by a copy index, enumerated row-major over (from, to).
///
/// Use make_graph_action to build a validated value.
class GraphAction {
 public:
  struct Edge {
    int from, to, copy;  // copy in 0..A_{from,to}-1
  };

  const IntMatrix& adjacency() const { return adjacency_; }
  const GroupPtr& group() const { return group_; }
  int num_vertices() const { return static_cast<int>(adjacency_.nrows()); }

  int vertex_image(int g, int v) const { return vertex_perm_[g][v]; }
  int edge_image(int g, int e) const { return edge_perm_[g][e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& vertex_perms() const { return vertex_perm_; }
  const std::vector<std::vector<int>>& edge_perms() const { return edge_perm_; }

  int edge_index(int from, int to, int copy) const {
    auto it = edge_lookup_.find({{from, to}, copy});
    require(it != edge_lookup_.end(), "no such edge");
    return it->second;
  }

  friend GraphAction make_graph_action(IntMatrix adjacency, GroupPtr group,
                                       std::vector<std::vector<int>> vertex_perm,
                                       std::optional<std::vector<std::vector<int>>> edge_perm);

 private:
  GraphAction() = default;

  IntMatrix adjacency_ = IntMatrix({}, {}, Int(0));
  GroupPtr group_;
  std::vector<std::vector<int>> vertex_perm_;  // [g][v]
  std::vector<std::vector<int>> edge_perm_;    // [g][e]
  std::vector<Edge> edges_;
  std::map<std::pair<std::pair<int, int>, int>, int> edge_lookup_;
};

/// Validates and builds a GraphAction:
///  - vertex maps form a group action that is free on vertices,
///  - the adjacency matrix is equivariant (A_{gi,gj} = A_{i,j}),
///  - the edge maps form a group action compatible with endpoints and the
///    vertex action; when omitted, the canonical copy-preserving lift
///    g(i,j,k) = (gi,gj,k) is used.
inline GraphAction make_graph_action(IntMatrix adjacency, GroupPtr group,
                                     std::vector<std::vector<int>> vertex_perm,
                                     std::optional<std::vector<std::vector<int>>> edge_perm = std::nullopt) {
  require(group != nullptr, "graph action: null group");
  require(adjacency.is_square(), "graph action: adjacency matrix must be square");
  require(is_nonnegative(adjacency), "graph action: adjacency entries must be non-negative");
  for (std::size_t i = 0; i < adjacency.nrows(); ++i)
    for (std::size_t j = 0; j < adjacency.ncols(); ++j)
      require(adjacency.at(i, j) <= 1'000'000, "graph action: edge multiplicity too large to enumerate");
  const int n = static_cast<int>(adjacency.nrows());
  const int ord = group->order();
  require(static_cast<int>(vertex_perm.size()) == ord,
          "graph action: need one vertex map per group element");

  for (int g = 0; g < ord; ++g) {
    require(static_cast<int>(vertex_perm[g].size()) == n,
            "graph action: vertex map of element " + std::to_string(g) + " has wrong size");
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
      int w = vertex_perm[g][v];
      require(w >= 0 && w < n && !hit[w],
              "graph action: vertex map of element " + std::to_string(g) + " is not a permutation");
      hit[w] = true;
    }
  }
  for (int v = 0; v < n; ++v)
    require(vertex_perm[FiniteGroup::kIdentity][v] == v,
            "graph action: identity element must act trivially on vertices");
  for (int g = 0; g < ord; ++g)
    for (int h = 0; h < ord; ++h)
      for (int v = 0; v < n; ++v)
        require(vertex_perm[g][vertex_perm[h][v]] == vertex_perm[group->multiply(g, h)][v],
                "graph action: vertex maps do not compose as a group action at (g,h)=(" +
                    std::to_string(g) + "," + std::to_string(h) + ")");
  for (int g = 1; g < ord; ++g)
    for (int v = 0; v < n; ++v)
      require(vertex_perm[g][v] != v,
              "graph action: not free, element " + std::to_string(g) + " fixes vertex " +
                  adjacency.row_labels()[v].str());
  for (int g = 0; g < ord; ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(adjacency.at(vertex_perm[g][i], vertex_perm[g][j]) == adjacency.at(i, j),
                "graph action: adjacency is not equivariant at (g,i,j)=(" + std::to_string(g) +
                    "," + adjacency.row_labels()[i].str() + "," + adjacency.row_labels()[j].str() + ")");

  GraphAction out;
  out.adjacency_ = std::move(adjacency);
  out.group_ = std::move(group);
  out.vertex_perm_ = std::move(vertex_perm);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Int k = 0; k < out.adjacency_.at(i, j); ++k) {
        int copy = static_cast<int>(k);
        out.edge_lookup_[{{i, j}, copy}] = static_cast<int>(out.edges_.size());
        out.edges_.push_back({i, j, copy});
      }

  const int m = static_cast<int>(out.edges_.size());
  if (edge_perm.has_value()) {
    out.edge_perm_ = std::move(*edge_perm);
    require(static_cast<int>(out.edge_perm_.size()) == ord,
            "graph action: need one edge map per group element");
    for (int g = 0; g < ord; ++g) {
      require(static_cast<int>(out.edge_perm_[g].size()) == m,
              "graph action: edge map of element " + std::to_string(g) + " has wrong size");
      std::vector<bool> hit(m, false);
      for (int e = 0; e < m; ++e) {
        int f = out.edge_perm_[g][e];
        require(f >= 0 && f < m && !hit[f],
                "graph action: edge map of element " + std::to_string(g) + " is not a permutation");
        hit[f] = true;
      }
    }
    for (int e = 0; e < m; ++e)
      require(out.edge_perm_[FiniteGroup::kIdentity][e] == e,
              "graph action: identity element must act trivially on edges");
    for (int g = 0; g < ord; ++g)
      for (int h = 0; h < ord; ++h)
        for (int e = 0; e < m; ++e)
          require(out.edge_perm_[g][out.edge_perm_[h][e]] ==
                      out.edge_perm_[out.group_->multiply(g, h)][e],
                  "graph action: edge maps do not compose as a group action");
    for (int g = 0; g < ord; ++g)
      for (int e = 0; e < m; ++e) {
        const auto& src = out.edges_[e];
        const auto& dst = out.edges_[out.edge_perm_[g][e]];
        require(dst.from == out.vertex_perm_[g][src.from] && dst.to == out.vertex_perm_[g][src.to],
                "graph action: edge map of element " + std::to_string(g) +
                    " does not commute with endpoints on edge " + std::to_string(e));
      }
  } else {
    out.edge_perm_.assign(ord, std::vector<int>(m));
    for (int g = 0; g < ord; ++g)
      for (int e = 0; e < m; ++e) {
        const auto& src = out.edges_[e];
        out.edge_perm_[g][e] =
            out.edge_index(out.vertex_perm_[g][src.from], out.vertex_perm_[g][src.to], src.copy);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension and its canonical action
// ---------------------------------------------------------------------------

/// Labels (v, g) for v in base labels and g in 0..|G|-1, lexicographic with
/// the vertex index slowest.
inline std::vector<Label> extension_labels(const std::vector<Label>& base, const FiniteGroup& g) {
  std::vector<Label> out;
  out.reserve(base.size() * g.order());
  for (const auto& v : base)
    for (int k = 0; k < g.order(); ++k)
      out.push_back(Label::pair(v, Label(static_cast<std::int64_t>(k))));
  return out;
}

/// The extension matrix on V x G: entry ((i,g),(j,h)) is the coefficient of
/// g^-1 h in B_{i,j}. Computed from that formula and cross-checked against
/// the Kronecker form: the sum over g of coefficient_matrix(B,g) (x) P_g.
inline IntMatrix extension_matrix(const GroupRingMatrix& b) {
  require(b.is_square(), "extension: matrix must be square");
  require(is_nonnegative(b), "extension: matrix must be non-negative");
  const GroupPtr& grp = group_of(b);
  const int ord = grp->order();
  const int n = static_cast<int>(b.nrows());
  auto labels = extension_labels(b.row_labels(), *grp);
  IntMatrix out(labels, labels, Int(0));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ord; ++g)
      for (int j = 0; j < n; ++j)
        for (int h = 0; h < ord; ++h)
          out.at(i * ord + g, j * ord + h) = b.at(i, j).coeff(grp->multiply(grp->inverse(g), h));

  IntMatrix via_kron = IntMatrix::zeros(labels, labels, Int(0));
  for (int g = 0; g < ord; ++g) {
    GroupElement el(grp, g);
    IntMatrix term = kronecker(coefficient_matrix(b, el), regular_permutation_matrix(grp, el));
    // Kronecker pair labels coincide with extension labels by construction.
    via_kron = via_kron + term;
  }
  ensure(out == via_kron, "extension matrix disagrees with its Kronecker form");
  return out;
}

/// The extension together with its canonical free action: g sends (i,h) to
/// (i,gh) and the k-th edge between fibers to the k-th edge.
inline GraphAction extension_action(const GroupRingMatrix& b) {
  IntMatrix ext = extension_matrix(b);
  const GroupPtr& grp = group_of(b);
  const int ord = grp->order();
  const int n = static_cast<int>(b.nrows());
  std::vector<std::vector<int>> vperm(ord, std::vector<int>(n * ord));
  for (int g = 0; g < ord; ++g)
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < ord; ++h)
        vperm[g][i * ord + h] = i * ord + grp->multiply(g, h);
  return make_graph_action(std::move(ext), grp, std::move(vperm));
}

// ---------------------------------------------------------------------------
// Quotient: from a free graph action back to a group-ring presentation
// ---------------------------------------------------------------------------

struct QuotientPresentation {
  GroupRingMatrix matrix;  // B over Z+[G], labels are the orbit representatives
  /// For each input vertex v: (position of its orbit representative, group
  /// element g) with v = g . rep.
  std::vector<std::pair<int, int>> vertex_to_pair;
  std::vector<int> orbit_reps;  // orbit position -> representative vertex index
};

/// Selects the minimal vertex (in input label order) of each orbit as its
/// representative and reads off B: the coefficient of g in B_{i,j} counts
/// edges from rep_i to g.rep_j. The round trip through extension_matrix is
/// re-checked before returning.
inline QuotientPresentation quotient_presentation(const GraphAction& action) {
  const int n = action.num_vertices();
  const GroupPtr& grp = action.group();
  const int ord = grp->order();
  const IntMatrix& a = action.adjacency();

  std::vector<int> rep_of(n, -1), elem_of(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (rep_of[v] >= 0) continue;
    int pos = static_cast<int>(reps.size());
    reps.push_back(v);
    for (int g = 0; g < ord; ++g) {
      int w = action.vertex_image(g, v);
      ensure(rep_of[w] < 0, "free action cannot revisit a vertex inside one orbit");
      rep_of[w] = pos;
      elem_of[w] = g;
    }
  }

  const int m = static_cast<int>(reps.size());
  std::vector<Label> qlabels;
  for (int i = 0; i < m; ++i) qlabels.push_back(a.row_labels()[reps[i]]);

  GroupRingMatrix b(qlabels, qlabels, GroupRingElement::zero(grp));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int g = 0; g < ord; ++g)
        b.at(i, j).set_coeff(g, a.at(reps[i], action.vertex_image(g, reps[j])));

  // Round trip: the extension of B is the input graph up to the relabeling
  // v -> (rep label, g), and the canonical action corresponds to the input
  // vertex action under it.
  IntMatrix ext = extension_matrix(b);
  std::map<Label, Label> phi;
  auto ext_index = [&](int v) { return rep_of[v] * ord + elem_of[v]; };
  for (int v = 0; v < n; ++v)
    phi[a.row_labels()[v]] = ext.row_labels()[ext_index(v)];
  ensure(equal_up_to_relabeling(a, ext, phi), "quotient round trip: extension differs from input");
  for (int g = 0; g < ord; ++g)
    for (int v = 0; v < n; ++v) {
      int w = action.vertex_image(g, v);
      ensure(rep_of[w] == rep_of[v] && elem_of[w] == grp->multiply(g, elem_of[v]),
             "quotient round trip: canonical action differs from input action");
    }

  QuotientPresentation out{std::move(b), {}, std::move(reps)};
  out.vertex_to_pair.reserve(n);
  for (int v = 0; v < n; ++v) out.vertex_to_pair.emplace_back(rep_of[v], elem_of[v]);
  return out;
}

}  // namespace gsft
