#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsft/matrix.hpp"

namespace gsft {

inline const GroupPtr& group_of(const GroupRingMatrix& m) { return m.zero().group(); }

/// A group-ring matrix from an entry grid; all entries must share `group`.
inline GroupRingMatrix group_ring_matrix(const GroupPtr& group, std::vector<Label> rows,
                                         std::vector<Label> cols,
                                         const std::vector<std::vector<GroupRingElement>>& entries) {
  for (const auto& row : entries)
    for (const auto& x : row)
      require_same_group(group, x.group(), "group ring matrix entry");
  return GroupRingMatrix::from_rows(std::move(rows), std::move(cols), entries,
                                    GroupRingElement::zero(group));
}

/// Entrywise coefficient sum: the augmentation, same labels.
inline IntMatrix augmentation(const GroupRingMatrix& b) {
  IntMatrix out(b.row_labels(), b.col_labels(), Int(0));
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) out.at(i, j) = b.at(i, j).augmentation();
  return out;
}

/// Entrywise coefficient of g.
inline IntMatrix coefficient_matrix(const GroupRingMatrix& b, const GroupElement& g) {
  require_same_group(group_of(b), g.group, "coefficient_matrix");
  IntMatrix out(b.row_labels(), b.col_labels(), Int(0));
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) out.at(i, j) = b.at(i, j).coeff(g.index);
  return out;
}

/// Integer matrix viewed in Z[G]: coefficients placed on the identity.
inline GroupRingMatrix embedded(const IntMatrix& m, const GroupPtr& group) {
  GroupRingMatrix out(m.row_labels(), m.col_labels(), GroupRingElement::zero(group));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      out.at(i, j).set_coeff(FiniteGroup::kIdentity, m.at(i, j));
  return out;
}

/// Integer matrix times the uniform element: entry (i,j) has every
/// coefficient equal to m_{i,j}.
inline GroupRingMatrix uniform_matrix(const IntMatrix& m, const GroupPtr& group) {
  GroupRingMatrix out(m.row_labels(), m.col_labels(), GroupRingElement::zero(group));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      for (int k = 0; k < group->order(); ++k) out.at(i, j).set_coeff(k, m.at(i, j));
  return out;
}

/// If every entry has all coefficients equal, the integer matrix of common
/// values; otherwise nullopt. For non-negative powers this is exactly the
/// inertness membership test.
inline std::optional<IntMatrix> uniform_multiple(const GroupRingMatrix& b) {
  IntMatrix out(b.row_labels(), b.col_labels(), Int(0));
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) {
      Int v;
      if (!b.at(i, j).is_uniform_multiple(&v)) return std::nullopt;
      out.at(i, j) = std::move(v);
    }
  return out;
}

/// Entrywise conjugation g B g^-1.
inline GroupRingMatrix conjugated(const GroupElement& g, const GroupRingMatrix& b) {
  require_same_group(group_of(b), g.group, "conjugated matrix");
  GroupRingMatrix out(b.row_labels(), b.col_labels(), b.zero());
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) out.at(i, j) = conjugated(g, b.at(i, j));
  return out;
}

/// x * B (scalar on the left of every entry; order matters).
inline GroupRingMatrix scale_left(const GroupRingElement& x, const GroupRingMatrix& b) {
  require_same_group(x.group(), group_of(b), "scale_left");
  GroupRingMatrix out(b.row_labels(), b.col_labels(), b.zero());
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) out.at(i, j) = x * b.at(i, j);
  return out;
}

/// B * x (scalar on the right of every entry).
inline GroupRingMatrix scale_right(const GroupRingMatrix& b, const GroupRingElement& x) {
  require_same_group(x.group(), group_of(b), "scale_right");
  GroupRingMatrix out(b.row_labels(), b.col_labels(), b.zero());
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) out.at(i, j) = b.at(i, j) * x;
  return out;
}

/// Every coefficient outside the element set `h` is zero.
inline bool supported_in(const GroupRingMatrix& b, const std::vector<int>& h) {
  std::vector<bool> in(group_of(b)->order(), false);
  for (int x : h) in.at(x) = true;
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j)
      for (int k = 0; k < group_of(b)->order(); ++k)
        if (!in[k] && b.at(i, j).coeff(k) != 0) return false;
  return true;
}

/// Re-express a matrix supported in a subgroup over that subgroup's own
/// group ring (indices renumbered per `sub`).
inline GroupRingMatrix restrict_to_subgroup(const GroupRingMatrix& b, const SubgroupAsGroup& sub) {
  require(supported_in(b, sub.to_ambient),
          "restrict_to_subgroup: matrix has coefficients outside the subgroup");
  GroupRingMatrix out(b.row_labels(), b.col_labels(), GroupRingElement::zero(sub.group));
  for (std::size_t i = 0; i < b.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j)
      for (std::size_t k = 0; k < sub.to_ambient.size(); ++k)
        out.at(i, j).set_coeff(static_cast<int>(k), b.at(i, j).coeff(sub.to_ambient[k]));
  return out;
}

}  // namespace gsft
