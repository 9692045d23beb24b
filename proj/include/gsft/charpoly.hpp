#pragma once

#include <utility>
#include <vector>

#include "gsft/matrix.hpp"
#include "gsft/polynomial.hpp"

namespace gsft {

/// Exact determinant by fraction-free (Bareiss) elimination with column
/// pivoting. All intermediate divisions are exact.
inline Int determinant(const IntMatrix& a) {
  require(a.is_square(), "determinant: matrix is not square");
  const std::size_t n = a.nrows();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// det(I - tA) as an integer polynomial: the reciprocal of the zeta function
/// of the edge shift of A. Constant coefficient is always 1; the degree is
/// at most the matrix size.
struct ReciprocalCharPoly {
  IntPoly poly;
  std::size_t matrix_size = 0;

  friend bool operator==(const ReciprocalCharPoly& a, const ReciprocalCharPoly& b) {
    return a.poly == b.poly;  // zeta comparison ignores the presenting size
  }
  friend bool operator!=(const ReciprocalCharPoly& a, const ReciprocalCharPoly& b) {
    return !(a == b);
  }
};

/// Faddeev-LeVerrier over Z. The char poly det(tI - A) = sum c_k t^k has
/// integer coefficients, so every trace division below must be exact; a
/// failed division is a bug. det(I - tA) is then the coefficient reversal
/// c_{n-j} t^j.
inline ReciprocalCharPoly reciprocal_charpoly(const IntMatrix& a) {
  require(a.is_square(), "reciprocal_charpoly: matrix is not square");
  const std::size_t n = a.nrows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix m = IntMatrix::zeros(a.row_labels(), a.col_labels(), Int(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A*M_{k-1} + c_{n-k+1} I
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    Int t = trace(a * m);
    ensure(t % Int(k) == 0, "Faddeev-LeVerrier trace not divisible by step index");
    c[n - k] = -t / Int(k);
  }
  std::vector<Int> rev(n + 1);
  for (std::size_t j = 0; j <= n; ++j) rev[j] = c[n - j];
  ReciprocalCharPoly out{IntPoly(std::move(rev)), n};
  ensure(out.poly.coeff(0) == 1, "reciprocal charpoly must have constant term 1");
  return out;
}

}  // namespace gsft
