#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsft/errors.hpp"
#include "gsft/group.hpp"
#include "gsft/group_ring.hpp"
#include "gsft/label.hpp"
#include "gsft/numeric.hpp"

namespace gsft {

/// Scalar hooks the dense matrix type needs beyond ring operators.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Int> {
  static bool is_zero(const Int& v) { return v == 0; }
  static bool is_nonnegative(const Int& v) { return v >= 0; }
  static Int one_like(const Int&) { return Int(1); }
  static std::string str(const Int& v) { return v.str(); }
};

template <>
struct ScalarOps<GroupRingElement> {
  static bool is_zero(const GroupRingElement& v) { return v.is_zero(); }
  static bool is_nonnegative(const GroupRingElement& v) { return v.is_nonnegative(); }
  static GroupRingElement one_like(const GroupRingElement& zero) {
    return GroupRingElement::one(zero.group());
  }
  static std::string str(const GroupRingElement& v) { return v.str(); }
};

/// Dense matrix with labeled rows and columns, templated on an exact scalar.
/// Labels are part of the value: equality is label-sensitive and products
/// check that inner label lists agree. A prototype zero scalar travels with
/// each matrix so that context-carrying scalars (group ring elements) can be
/// materialized out of thin air for identities and padding.
template <class S>
class Matrix {
 public:
  Matrix(std::vector<Label> rows, std::vector<Label> cols, S zero)
      : rows_(std::move(rows)), cols_(std::move(cols)), zero_(std::move(zero)),
        data_(rows_.size() * cols_.size(), zero_) {
    check_unique(rows_, "row");
    check_unique(cols_, "column");
  }

  static Matrix zeros(std::vector<Label> rows, std::vector<Label> cols, S zero) {
    return Matrix(std::move(rows), std::move(cols), std::move(zero));
  }

  static Matrix identity(std::vector<Label> labels, S zero) {
    Matrix m(labels, labels, zero);
    const S one = ScalarOps<S>::one_like(m.zero_);
    for (std::size_t i = 0; i < m.nrows(); ++i) m.at(i, i) = one;
    return m;
  }

  static Matrix from_rows(std::vector<Label> rows, std::vector<Label> cols,
                          const std::vector<std::vector<S>>& entries, S zero) {
    Matrix m(std::move(rows), std::move(cols), std::move(zero));
    require(entries.size() == m.nrows(), "matrix entries: row count does not match labels");
    for (std::size_t i = 0; i < m.nrows(); ++i) {
      require(entries[i].size() == m.ncols(), "matrix entries: column count does not match labels");
      for (std::size_t j = 0; j < m.ncols(); ++j) m.at(i, j) = entries[i][j];
    }
    return m;
  }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return cols_.size(); }
  const std::vector<Label>& row_labels() const { return rows_; }
  const std::vector<Label>& col_labels() const { return cols_; }
  const S& zero() const { return zero_; }

  /// Square in the labeled sense: identical row and column label lists.
  bool is_square() const { return rows_ == cols_; }

  const S& at(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }
  S& at(std::size_t i, std::size_t j) { return data_[i * cols_.size() + j]; }

  std::size_t row_index(const Label& l) const { return index_in(rows_, l, "row"); }
  std::size_t col_index(const Label& l) const { return index_in(cols_, l, "column"); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < nrows(); ++i) {
      out += rows_[i].str() + ": [";
      for (std::size_t j = 0; j < ncols(); ++j) {
        if (j) out += ", ";
        out += ScalarOps<S>::str(at(i, j));
      }
      out += "]\n";
    }
    return out;
  }

 private:
  static void check_unique(const std::vector<Label>& labels, const char* what) {
    std::map<Label, int> seen;
    for (const auto& l : labels)
      require(seen.emplace(l, 0).second,
              std::string("duplicate ") + what + " label " + l.str());
  }

  static std::size_t index_in(const std::vector<Label>& labels, const Label& l, const char* what) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw InputError(std::string("no ") + what + " labeled " + l.str());
  }

  std::vector<Label> rows_, cols_;
  S zero_;
  std::vector<S> data_;
};

using IntMatrix = Matrix<Int>;
using GroupRingMatrix = Matrix<GroupRingElement>;

namespace detail {

inline void check_context(const IntMatrix&, const IntMatrix&, const char*) {}

inline void check_context(const GroupRingMatrix& a, const GroupRingMatrix& b, const char* where) {
  require_same_group(a.zero().group(), b.zero().group(), where);
}

}  // namespace detail

template <class S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  detail::check_context(a, b, "matrix sum");
  require(a.row_labels() == b.row_labels() && a.col_labels() == b.col_labels(),
          "matrix sum: label mismatch");
  Matrix<S> out(a.row_labels(), a.col_labels(), a.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
  detail::check_context(a, b, "matrix difference");
  require(a.row_labels() == b.row_labels() && a.col_labels() == b.col_labels(),
          "matrix difference: label mismatch");
  Matrix<S> out(a.row_labels(), a.col_labels(), a.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  detail::check_context(a, b, "matrix product");
  require(a.col_labels() == b.row_labels(), "matrix product: inner label lists differ");
  Matrix<S> out(a.row_labels(), b.col_labels(), a.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      const S& aik = a.at(i, k);
      if (ScalarOps<S>::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) {
        if (ScalarOps<S>::is_zero(b.at(k, j))) continue;
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  return out;
}

/// A^k by repeated squaring; A^0 is the identity on A's labels.
template <class S>
Matrix<S> pow(const Matrix<S>& a, int k) {
  require(a.is_square(), "matrix power: matrix is not square");
  require(k >= 0, "matrix power: negative exponent");
  Matrix<S> result = Matrix<S>::identity(a.row_labels(), a.zero());
  Matrix<S> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <class S>
S trace(const Matrix<S>& a) {
  require(a.is_square(), "trace: matrix is not square");
  S t = a.zero();
  for (std::size_t i = 0; i < a.nrows(); ++i) t += a.at(i, i);
  return t;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> out(a.col_labels(), a.row_labels(), a.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

template <class S>
bool is_nonnegative(const Matrix<S>& a) {
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j)
      if (!ScalarOps<S>::is_nonnegative(a.at(i, j))) return false;
  return true;
}

/// Kronecker product with pair labels: the row set is the lexicographically
/// ordered product of the input row sets, so (A (x) B)_{(i,k),(j,l)} =
/// A_{i,j} B_{k,l}.
template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  detail::check_context(a, b, "kronecker product");
  std::vector<Label> rows, cols;
  rows.reserve(a.nrows() * b.nrows());
  cols.reserve(a.ncols() * b.ncols());
  for (const auto& ra : a.row_labels())
    for (const auto& rb : b.row_labels()) rows.push_back(Label::pair(ra, rb));
  for (const auto& ca : a.col_labels())
    for (const auto& cb : b.col_labels()) cols.push_back(Label::pair(ca, cb));
  Matrix<S> out(std::move(rows), std::move(cols), a.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < b.nrows(); ++k)
      for (std::size_t j = 0; j < a.ncols(); ++j)
        for (std::size_t l = 0; l < b.ncols(); ++l)
          out.at(i * b.nrows() + k, j * b.ncols() + l) = a.at(i, j) * b.at(k, l);
  return out;
}

/// Equality after applying the given row/column relabeling to `a`. The map
/// must send a's labels bijectively onto b's; entries must match under the
/// induced index permutation.
template <class S>
bool equal_up_to_relabeling(const Matrix<S>& a, const Matrix<S>& b,
                            const std::map<Label, Label>& phi) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) return false;
  std::vector<std::size_t> rmap(a.nrows()), cmap(a.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    auto it = phi.find(a.row_labels()[i]);
    require(it != phi.end(), "relabeling map misses row label " + a.row_labels()[i].str());
    rmap[i] = b.row_index(it->second);
  }
  for (std::size_t j = 0; j < a.ncols(); ++j) {
    auto it = phi.find(a.col_labels()[j]);
    require(it != phi.end(), "relabeling map misses column label " + a.col_labels()[j].str());
    cmap[j] = b.col_index(it->second);
  }
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < a.ncols(); ++j)
      if (!(a.at(i, j) == b.at(rmap[i], cmap[j]))) return false;
  return true;
}

/// The all-ones row vector on the given column labels (1 x n).
inline IntMatrix ones_row(const Label& row, std::vector<Label> cols) {
  IntMatrix m({row}, std::move(cols), Int(0));
  for (std::size_t j = 0; j < m.ncols(); ++j) m.at(0, j) = 1;
  return m;
}

inline IntMatrix ones_matrix(std::vector<Label> labels) {
  IntMatrix m(labels, labels, Int(0));
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j) m.at(i, j) = 1;
  return m;
}

/// Labels 0..|G|-1 for the elements of a group, used by permutation
/// matrices and extensions.
inline std::vector<Label> group_labels(const FiniteGroup& g) {
  std::vector<Label> out;
  out.reserve(g.order());
  for (int k = 0; k < g.order(); ++k) out.emplace_back(static_cast<std::int64_t>(k));
  return out;
}

/// The right-regular permutation matrix P_g on G x G: (P_g)_{h,k} = 1 iff
/// k = hg. Satisfies P_g P_h = P_{gh} and P_identity = I.
inline IntMatrix regular_permutation_matrix(const GroupPtr& group, const GroupElement& g) {
  require(group != nullptr, "regular_permutation_matrix: null group");
  require_same_group(group, g.group, "regular_permutation_matrix");
  auto labels = group_labels(*group);
  IntMatrix p(labels, labels, Int(0));
  for (int h = 0; h < group->order(); ++h) p.at(h, group->multiply(h, g.index)) = 1;
  return p;
}

}  // namespace gsft
