#pragma once

#include <optional>
#include <string>

#include "gsft/charpoly.hpp"
#include "gsft/extension.hpp"
#include "gsft/group_ring_matrix.hpp"

namespace gsft {

/// A decided inertness question, with enough data to re-check the verdict by
/// plain arithmetic: either B^exponent = uniform * unit_multiple, or a triple
/// (g, row, col) whose coefficient in B^exponent differs from the identity
/// coefficient of the same entry.
struct NonInertWitness {
  GroupElement g;
  Label row, col;
  GroupRingElement entry;  // the offending entry of B^exponent
};

struct InertnessCertificate {
  bool inert = false;
  int exponent = 0;  // always <= inertness_bound of the input
  std::optional<IntMatrix> unit_multiple;
  std::optional<NonInertWitness> violation;
};

/// One exponent that decides inertness: n(|G|-1), clamped to at least 1.
inline int inertness_bound(const GroupRingMatrix& b) {
  require(b.is_square(), "inertness_bound: matrix must be square");
  const int n = static_cast<int>(b.nrows());
  const int ord = group_of(b)->order();
  const int bound = n * (ord - 1);
  return bound < 1 ? 1 : bound;
}

namespace detail {

inline std::optional<NonInertWitness> uniformity_violation(const GroupRingMatrix& p) {
  const GroupPtr& grp = group_of(p);
  for (std::size_t i = 0; i < p.nrows(); ++i)
    for (std::size_t j = 0; j < p.ncols(); ++j) {
      const auto& entry = p.at(i, j);
      for (int g = 1; g < grp->order(); ++g)
        if (entry.coeff(g) != entry.coeff(FiniteGroup::kIdentity))
          return NonInertWitness{GroupElement(grp, g), p.row_labels()[i], p.col_labels()[j], entry};
    }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether B is inert: some power of B lands in uniform * Z+, i.e.
/// within every entry all coefficients agree. Membership is upward closed in
/// the exponent and decided at the inertness bound, so the squaring ladder
/// 1, 2, 4, ..., bound settles it; the first power found to be uniform is
/// reported, which keeps the certificate exponent small.
inline InertnessCertificate is_inert(const GroupRingMatrix& b) {
  require(b.is_square(), "is_inert: matrix must be square");
  require(is_nonnegative(b), "is_inert: matrix must be non-negative");
  const int bound = inertness_bound(b);
  GroupRingMatrix power = b;
  int exponent = 1;
  for (;;) {
    if (auto m = uniform_multiple(power)) {
      return InertnessCertificate{true, exponent, std::move(m), std::nullopt};
    }
    if (exponent >= bound) {
      auto witness = detail::uniformity_violation(power);
      ensure(witness.has_value(), "non-uniform power must exhibit a violating coefficient");
      return InertnessCertificate{false, exponent, std::nullopt, std::move(witness)};
    }
    if (2 * exponent <= bound) {
      power = power * power;
      exponent *= 2;
    } else {
      power = power * pow(b, bound - exponent);
      exponent = bound;
    }
  }
}

/// Zeta criterion: det(I - t E(B)) = det(I - t A(B)). By the
/// characterization of inert matrices this must agree with is_inert.
inline bool zeta_equal(const GroupRingMatrix& b) {
  require(b.is_square(), "zeta_equal: matrix must be square");
  require(is_nonnegative(b), "zeta_equal: matrix must be non-negative");
  return reciprocal_charpoly(extension_matrix(b)) == reciprocal_charpoly(augmentation(b));
}

/// Inertness of a free graph action, via its quotient presentation. The
/// equivalent direct criterion on the adjacency matrix A -- at the
/// certificate exponent, (A^l)_{i,j} = (A^l)_{i,gj} for all g exactly when
/// the action is inert -- is re-checked against the certificate.
inline InertnessCertificate graph_action_is_inert(const GraphAction& action) {
  QuotientPresentation q = quotient_presentation(action);
  InertnessCertificate cert = is_inert(q.matrix);

  const IntMatrix apow = pow(action.adjacency(), cert.exponent);
  bool identity_holds = true;
  for (int g = 1; g < action.group()->order() && identity_holds; ++g)
    for (int i = 0; i < action.num_vertices() && identity_holds; ++i)
      for (int j = 0; j < action.num_vertices(); ++j)
        if (apow.at(i, j) != apow.at(i, action.vertex_image(g, j))) {
          identity_holds = false;
          break;
        }
  ensure(identity_holds == cert.inert,
         "graph-level inertness identity disagrees with the quotient certificate");
  return cert;
}

}  // namespace gsft
