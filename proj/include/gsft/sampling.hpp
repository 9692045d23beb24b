#pragma once

#include <random>
#include <vector>

#include "gsft/group_ring_matrix.hpp"

namespace gsft {

/// Deterministic sample generators shared by the self-test battery and the
/// property suites.
using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t nrows, std::size_t ncols, int max_entry) {
  IntMatrix m(default_labels(nrows), default_labels(ncols), Int(0));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rand_int(rng, 0, max_entry);
  return m;
}

inline IntMatrix random_square_int_matrix(Rng& rng, std::size_t n, int max_entry) {
  return random_int_matrix(rng, n, n, max_entry);
}

inline GroupRingElement random_group_ring_element(Rng& rng, const GroupPtr& group, int max_coeff,
                                                  int min_coeff = 0) {
  GroupRingElement x(group);
  for (int k = 0; k < group->order(); ++k) x.set_coeff(k, rand_int(rng, min_coeff, max_coeff));
  return x;
}

inline GroupRingMatrix random_group_ring_matrix(Rng& rng, const GroupPtr& group, std::size_t n,
                                                int max_coeff) {
  GroupRingMatrix m(default_labels(n), default_labels(n), GroupRingElement::zero(group));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = random_group_ring_element(rng, group, max_coeff);
  return m;
}

/// Random essential matrix: resampled until no row or column is zero.
inline IntMatrix random_essential_matrix(Rng& rng, std::size_t n, int max_entry) {
  for (;;) {
    IntMatrix m = random_square_int_matrix(rng, n, max_entry);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool row = false, col = false;
      for (std::size_t j = 0; j < n; ++j) {
        row = row || m.at(i, j) != 0;
        col = col || m.at(j, i) != 0;
      }
      ok = row && col;
    }
    if (ok) return m;
  }
}

/// Random matrix of the always-inert shape uniform * M with M entrywise in
/// 1..max_entry (so the result is irreducible and primitive as well).
inline GroupRingMatrix random_uniform_inert_matrix(Rng& rng, const GroupPtr& group, std::size_t n,
                                                   int max_entry) {
  IntMatrix m(default_labels(n), default_labels(n), Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_int(rng, 1, max_entry);
  return uniform_matrix(m, group);
}

/// An elementary strong shift equivalence over Z+: A = U V and B = V U for
/// random entrywise-positive U, V, which makes both products irreducible
/// and essential. (U, V) is a valid lag-1 witness for (A, B).
struct ElementaryPair {
  IntMatrix a, b, u, v;
};

inline ElementaryPair random_elementary_pair(Rng& rng, std::size_t n, std::size_t m,
                                             int max_entry) {
  IntMatrix u(default_labels(n), default_labels(m), Int(0));
  IntMatrix v(default_labels(m), default_labels(n), Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) u.at(i, j) = rand_int(rng, 1, max_entry);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) v.at(i, j) = rand_int(rng, 1, max_entry);
  return ElementaryPair{u * v, v * u, std::move(u), std::move(v)};
}

}  // namespace gsft
