#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "gsft/group_ring_matrix.hpp"
#include "gsft/structure.hpp"

namespace gsft {

/// The subgroup of weights of cycles based at a vertex, together with the
/// base it was computed at. For irreducible matrices the conjugacy class of
/// this subgroup does not depend on the base.
struct WeightClass {
  std::vector<int> subgroup;  // sorted element indices
  int base_index = 0;
};

namespace detail {

/// Reachability on the skew product V x G: from (v, g) one step along an
/// edge v -> w labeled h reaches (w, gh). This is exactly the graph of the
/// extension of A, without materializing it.
inline std::vector<int> cycle_weights(const GroupRingMatrix& a, int base) {
  const GroupPtr& grp = group_of(a);
  const int n = static_cast<int>(a.nrows());
  const int ord = grp->order();
  std::vector<bool> seen(static_cast<std::size_t>(n) * ord, false);
  std::queue<std::pair<int, int>> q;
  seen[base * ord + FiniteGroup::kIdentity] = true;
  q.push({base, FiniteGroup::kIdentity});
  while (!q.empty()) {
    auto [v, g] = q.front();
    q.pop();
    for (int w = 0; w < n; ++w)
      for (int h = 0; h < ord; ++h) {
        if (a.at(v, w).coeff(h) <= 0) continue;
        int gh = grp->multiply(g, h);
        if (!seen[w * ord + gh]) {
          seen[w * ord + gh] = true;
          q.push({w, gh});
        }
      }
  }
  std::vector<int> weights;
  for (int g = 0; g < ord; ++g)
    if (seen[base * ord + g]) weights.push_back(g);
  return weights;
}

}  // namespace detail

/// Weight group at a base vertex of a non-negative irreducible matrix over
/// Z+[G]. Verified to be a subgroup, and the conjugacy class is checked to
/// be the same from every base vertex.
inline WeightClass weight_group(const GroupRingMatrix& a, int base = 0) {
  require(a.is_square(), "weight_group: matrix must be square");
  require(is_nonnegative(a), "weight_group: matrix must be non-negative");
  require(base >= 0 && base < static_cast<int>(a.nrows()), "weight_group: base vertex out of range");
  require(structure_flags(a).irreducible,
          "weight_group: matrix is reducible, cycle weights need not form a subgroup");
  const GroupPtr& grp = group_of(a);

  std::vector<int> w = detail::cycle_weights(a, base);
  ensure(is_subgroup(*grp, w), "cycle weights of an irreducible matrix must form a subgroup");
  for (int other = 0; other < static_cast<int>(a.nrows()); ++other) {
    if (other == base) continue;
    std::vector<int> w2 = detail::cycle_weights(a, other);
    ensure(is_subgroup(*grp, w2) && conjugating_element(*grp, w, w2).has_value(),
           "weight groups at different base vertices must be conjugate");
  }
  return WeightClass{std::move(w), base};
}

struct WeightComparison {
  bool equal = false;
  std::optional<GroupElement> conjugator;  // g with g W(A) g^-1 = W(B)
};

/// Weight classes agree iff the two weight groups are conjugate subgroups.
inline WeightComparison weight_class_equal(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  require_same_group(group_of(a), group_of(b), "weight_class_equal");
  WeightClass wa = weight_group(a);
  WeightClass wb = weight_group(b);
  auto c = conjugating_element(*group_of(a), wa.subgroup, wb.subgroup);
  if (!c) return {false, std::nullopt};
  return {true, GroupElement(group_of(a), *c)};
}

// ---------------------------------------------------------------------------
// Stabilized matrices and elementary positive moves
// ---------------------------------------------------------------------------

/// A finitely supported N x N matrix: the core block, with an implicit
/// identity tail outside it. Elementary operations whose indices leave the
/// core are rejected rather than growing it.
struct StabilizedMatrix {
  GroupRingMatrix core;

  int core_size() const { return static_cast<int>(core.nrows()); }

  friend bool operator==(const StabilizedMatrix& a, const StabilizedMatrix& b) {
    return a.core == b.core;
  }

  /// E_{i,j}(z) * this: adds z times row j to row i (indices in the core).
  StabilizedMatrix elementary_left(int i, int j, const GroupRingElement& z) const {
    check_indices(i, j);
    StabilizedMatrix out{core};
    for (std::size_t k = 0; k < core.ncols(); ++k)
      out.core.at(i, k) = out.core.at(i, k) + z * core.at(j, k);
    return out;
  }

  /// this * E_{i,j}(z): adds column i times z to column j.
  StabilizedMatrix elementary_right(int i, int j, const GroupRingElement& z) const {
    check_indices(i, j);
    StabilizedMatrix out{core};
    for (std::size_t k = 0; k < core.nrows(); ++k)
      out.core.at(k, j) = out.core.at(k, j) + core.at(k, i) * z;
    return out;
  }

 private:
  void check_indices(int i, int j) const {
    require(i != j, "elementary matrix requires i != j");
    require(i >= 0 && j >= 0 && i < core_size() && j < core_size(),
            "elementary operation outside the stabilized core is not supported");
  }
};

/// I - A on A's labels, as the core of the stabilized matrix (I - A)_inf.
inline StabilizedMatrix stabilized_i_minus(const GroupRingMatrix& a) {
  require(a.is_square(), "stabilized_i_minus: matrix must be square");
  return StabilizedMatrix{GroupRingMatrix::identity(a.row_labels(), a.zero()) - a};
}

enum class MoveSide { Left, Right };

/// Elementary positive move: produces B with (I-B)_inf = E_{i,j}(g)(I-A)_inf
/// (left) or (I-B)_inf = (I-A)_inf E_{i,j}(g) (right), admissible only when
/// the coefficient of g in A_{i,j} is positive, which keeps B non-negative.
/// The stabilized identity is re-checked exactly before returning.
inline GroupRingMatrix apply_positive_move(const GroupRingMatrix& a, MoveSide side, int i, int j,
                                           const GroupElement& g) {
  require(a.is_square(), "apply_positive_move: matrix must be square");
  require_same_group(group_of(a), g.group, "apply_positive_move");
  require(is_nonnegative(a), "apply_positive_move: matrix must be non-negative");
  const int n = static_cast<int>(a.nrows());
  require(i >= 0 && j >= 0 && i < n && j < n && i != j,
          "apply_positive_move: need distinct indices inside the core");
  require(a.at(i, j).coeff(g.index) > 0,
          "apply_positive_move: coefficient of g in A[i,j] must be positive");

  const GroupRingElement zg = GroupRingElement::basis(g);
  GroupRingMatrix b = a;
  if (side == MoveSide::Left) {
    // Row i of B = row i of A + g * (row j of A), minus one g at (i,j).
    for (int k = 0; k < n; ++k) b.at(i, k) = b.at(i, k) + zg * a.at(j, k);
    b.at(i, j) = b.at(i, j) - zg;
  } else {
    for (int k = 0; k < n; ++k) b.at(k, j) = b.at(k, j) + a.at(k, i) * zg;
    b.at(i, j) = b.at(i, j) - zg;
  }
  ensure(is_nonnegative(b), "positive move produced a negative entry");

  StabilizedMatrix lhs = stabilized_i_minus(b);
  StabilizedMatrix rhs = (side == MoveSide::Left)
                             ? stabilized_i_minus(a).elementary_left(i, j, zg)
                             : stabilized_i_minus(a).elementary_right(i, j, zg);
  ensure(lhs == rhs, "positive move does not reproduce the stabilized elementary identity");
  return b;
}

}  // namespace gsft
