#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsft/errors.hpp"

namespace gsft {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table over element
/// indices 0..order-1. Index 0 is always the identity; tables that do not
/// have the identity at index 0 are rejected. Group values are immutable
/// and shared through GroupPtr.
///
/// Everything here is exhaustive (associativity is checked on all triples at
/// construction), so orders are capped at kDefaultMaxOrder unless a caller
/// raises the cap explicitly.
class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;
  static constexpr int kDefaultMaxOrder = 64;

  static GroupPtr cyclic(int n, int max_order = kDefaultMaxOrder) {
    require(n >= 1, "cyclic group order must be >= 1");
    require(n <= max_order, "group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return finish(std::move(table), "Z/" + std::to_string(n) + "Z");
  }

  static GroupPtr from_table(std::vector<std::vector<int>> table,
                             int max_order = kDefaultMaxOrder,
                             std::string name = "") {
    const int n = static_cast<int>(table.size());
    require(n >= 1, "group table must be non-empty");
    require(n <= max_order, "group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    if (name.empty()) name = "group of order " + std::to_string(n);
    return finish(std::move(table), std::move(name));
  }

  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                                 int max_order = kDefaultMaxOrder) {
    require(a && b, "direct_product: null factor");
    const int na = a->order(), nb = b->order();
    require(na * nb <= max_order,
            "group order " + std::to_string(na * nb) + " exceeds cap " + std::to_string(max_order));
    // (x1,y1)*(x2,y2) = (x1x2, y1y2), element (x,y) at index x*nb + y.
    std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
    for (int x1 = 0; x1 < na; ++x1)
      for (int y1 = 0; y1 < nb; ++y1)
        for (int x2 = 0; x2 < na; ++x2)
          for (int y2 = 0; y2 < nb; ++y2)
            table[x1 * nb + y1][x2 * nb + y2] =
                a->multiply(x1, x2) * nb + b->multiply(y1, y2);
    return finish(std::move(table), a->name() + " x " + b->name());
  }

  int order() const { return static_cast<int>(table_.size()); }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  int conjugate(int g, int x) const {  // g x g^-1
    return multiply(multiply(g, x), inverse(g));
  }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const { return abelian_; }

  bool same_as(const FiniteGroup& other) const {
    return this == &other || table_ == other.table_;
  }

 private:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> inverses,
              std::string name, bool abelian)
      : table_(std::move(table)), inverses_(std::move(inverses)),
        name_(std::move(name)), abelian_(abelian) {}

  static GroupPtr finish(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    for (int a = 0; a < n; ++a) {
      require(static_cast<int>(table[a].size()) == n, "group table is not square");
      for (int b = 0; b < n; ++b)
        require(table[a][b] >= 0 && table[a][b] < n,
                "group table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    // Identity at index 0.
    for (int a = 0; a < n; ++a) {
      require(table[0][a] == a && table[a][0] == a,
              "element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
    }
    // Latin square: each row and column is a permutation.
    for (int a = 0; a < n; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (int b = 0; b < n; ++b) {
        require(!row[table[a][b]], "group table row " + std::to_string(a) + " repeats a value");
        require(!col[table[b][a]], "group table column " + std::to_string(a) + " repeats a value");
        row[table[a][b]] = col[table[b][a]] = true;
      }
    }
    // Inverses.
    std::vector<int> inverses(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table[a][b] == 0) inverses[a] = b;
    for (int a = 0; a < n; ++a)
      require(inverses[a] >= 0 && table[inverses[a]][a] == 0,
              "element " + std::to_string(a) + " has no two-sided inverse");
    // Associativity, exhaustively; groups here are desk scale.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require(table[table[a][b]][c] == table[a][table[b][c]],
                  "group table is not associative at triple (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
    bool abelian = true;
    for (int a = 0; a < n && abelian; ++a)
      for (int b = 0; b < n; ++b)
        if (table[a][b] != table[b][a]) { abelian = false; break; }
    return GroupPtr(new FiniteGroup(std::move(table), std::move(inverses), std::move(name), abelian));
  }

  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::string name_;
  bool abelian_ = true;
};

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a && b && a->same_as(*b);
}

inline void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where) {
  require(same_group(a, b), std::string(where) + ": operands belong to different groups");
}

/// An element of a specific FiniteGroup, as (group, index).
struct GroupElement {
  GroupPtr group;
  int index = FiniteGroup::kIdentity;

  GroupElement() = default;
  GroupElement(GroupPtr g, int idx) : group(std::move(g)), index(idx) {
    require(group != nullptr, "GroupElement: null group");
    require(idx >= 0 && idx < group->order(),
            "element index " + std::to_string(idx) + " out of range for group of order " +
                std::to_string(group->order()));
  }

  bool is_identity() const { return index == FiniteGroup::kIdentity; }
  GroupElement inverse() const { return GroupElement(group, group->inverse(index)); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    require_same_group(a.group, b.group, "group element product");
    return GroupElement(a.group, a.group->multiply(a.index, b.index));
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return same_group(a.group, b.group) && a.index == b.index;
  }
};

inline GroupElement identity_element(const GroupPtr& g) {
  return GroupElement(g, FiniteGroup::kIdentity);
}

// ---------------------------------------------------------------------------
// Subgroup utilities. Subgroups are sorted element-index sets.
// ---------------------------------------------------------------------------

/// Smallest subgroup containing the generators: closure of
/// generators + identity under product and inverse.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  for (int x : generators)
    require(x >= 0 && x < g.order(), "generator index " + std::to_string(x) + " not in group");
  std::set<int> h{FiniteGroup::kIdentity};
  h.insert(generators.begin(), generators.end());
  for (int x : generators) h.insert(g.inverse(x));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(h.begin(), h.end());
    for (int a : cur)
      for (int b : cur)
        if (h.insert(g.multiply(a, b)).second) grew = true;
    for (int a : cur)
      if (h.insert(g.inverse(a)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  if (h.empty()) return false;
  std::set<int> set(h.begin(), h.end());
  for (int x : h) require(x >= 0 && x < g.order(), "subgroup element out of range");
  if (!set.count(FiniteGroup::kIdentity)) return false;
  for (int a : h)
    for (int b : h)
      if (!set.count(g.multiply(a, b))) return false;
  for (int a : h)
    if (!set.count(g.inverse(a))) return false;
  return true;
}

inline std::vector<int> conjugated_subgroup(const FiniteGroup& g, int c, const std::vector<int>& h) {
  std::set<int> out;
  for (int x : h) out.insert(g.conjugate(c, x));
  return {out.begin(), out.end()};
}

/// gHg^-1 = H for every g in G.
inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  require(is_subgroup(g, h), "is_normal_subgroup: input is not a subgroup");
  for (int c = 0; c < g.order(); ++c)
    if (conjugated_subgroup(g, c, h) != h) return false;
  return true;
}

/// Exhaustive search for g with g H1 g^-1 = H2.
inline std::optional<int> conjugating_element(const FiniteGroup& g, const std::vector<int>& h1,
                                              const std::vector<int>& h2) {
  require(is_subgroup(g, h1) && is_subgroup(g, h2),
          "conjugating_element: inputs must be subgroups");
  std::vector<int> h1s = h1, h2s = h2;
  std::sort(h1s.begin(), h1s.end());
  std::sort(h2s.begin(), h2s.end());
  for (int c = 0; c < g.order(); ++c)
    if (conjugated_subgroup(g, c, h1s) == h2s) return c;
  return std::nullopt;
}

/// The multiplication table of a subgroup as a standalone FiniteGroup, with
/// elements renumbered in sorted order (identity stays at index 0), plus the
/// index map from the new group back into the ambient one.
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<int> to_ambient;  // subgroup index -> ambient index
  std::vector<int> from_ambient;  // ambient index -> subgroup index, -1 outside
};

inline SubgroupAsGroup subgroup_as_group(const GroupPtr& g, const std::vector<int>& h) {
  require(is_subgroup(*g, h), "subgroup_as_group: input is not a subgroup");
  std::vector<int> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> from(g->order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) from[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = from[g->multiply(sorted[i], sorted[j])];
  SubgroupAsGroup out;
  out.group = FiniteGroup::from_table(std::move(table), g->order(),
                                      "subgroup of " + g->name() + " of order " + std::to_string(m));
  out.to_ambient = std::move(sorted);
  out.from_ambient = std::move(from);
  return out;
}

}  // namespace gsft
