#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsft/inertness.hpp"
#include "gsft/structure.hpp"

namespace gsft {

/// Witness for shift equivalence with the declared pair order (A, B):
/// A^lag = R S, B^lag = S R, A R = R B, S A = B S, with R and S
/// non-negative. Lag 1 is exactly elementary strong shift equivalence.
template <class M>
struct ShiftEquivalenceWitness {
  M r, s;
  int lag = 1;
};

using IntSEWitness = ShiftEquivalenceWitness<IntMatrix>;
using GroupRingSEWitness = ShiftEquivalenceWitness<GroupRingMatrix>;

struct EquationCheck {
  std::string name;
  bool holds = false;
  std::string first_mismatch;  // empty when the equation holds
};

struct VerifyReport {
  bool valid = false;
  std::vector<EquationCheck> checks;

  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.holds) return c.name + (c.first_mismatch.empty() ? "" : ": " + c.first_mismatch);
    return "";
  }
};

namespace detail {

template <class S>
void check_equation(VerifyReport& report, const std::string& name, const Matrix<S>& lhs,
                    const Matrix<S>& rhs) {
  EquationCheck check{name, true, ""};
  if (lhs.row_labels() != rhs.row_labels() || lhs.col_labels() != rhs.col_labels()) {
    // Shapes were validated up front, so labels can only disagree here if a
    // caller slipped label-permuted matrices past the size check.
    check.holds = false;
    check.first_mismatch = "label lists differ";
  } else {
    for (std::size_t i = 0; i < lhs.nrows() && check.holds; ++i)
      for (std::size_t j = 0; j < lhs.ncols(); ++j)
        if (!(lhs.at(i, j) == rhs.at(i, j))) {
          check.holds = false;
          check.first_mismatch = "entry (" + lhs.row_labels()[i].str() + "," +
                                 lhs.col_labels()[j].str() + "): " +
                                 ScalarOps<S>::str(lhs.at(i, j)) + " != " +
                                 ScalarOps<S>::str(rhs.at(i, j));
          break;
        }
  }
  report.checks.push_back(std::move(check));
}

template <class S>
void check_nonnegative(VerifyReport& report, const std::string& name, const Matrix<S>& m) {
  EquationCheck check{name, true, ""};
  for (std::size_t i = 0; i < m.nrows() && check.holds; ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      if (!ScalarOps<S>::is_nonnegative(m.at(i, j))) {
        check.holds = false;
        check.first_mismatch = "entry (" + m.row_labels()[i].str() + "," +
                               m.col_labels()[j].str() + ") = " + ScalarOps<S>::str(m.at(i, j));
        break;
      }
  report.checks.push_back(std::move(check));
}

inline void check_witness_domains(const IntMatrix&, const IntMatrix&, const IntSEWitness&) {}

inline void check_witness_domains(const GroupRingMatrix& a, const GroupRingMatrix& b,
                                  const GroupRingSEWitness& w) {
  require_same_group(group_of(a), group_of(b), "verify_se");
  require_same_group(group_of(a), group_of(w.r), "verify_se");
  require_same_group(group_of(a), group_of(w.s), "verify_se");
}

}  // namespace detail

/// Checks all four defining equations plus non-negativity of R and S,
/// reporting the first mismatching entry per equation. Shape or
/// coefficient-domain mismatches are input errors, not equation failures.
template <class M>
VerifyReport verify_se(const M& a, const M& b, const ShiftEquivalenceWitness<M>& w) {
  require(a.is_square() && b.is_square(), "verify_se: A and B must be square");
  require(w.lag >= 1, "verify_se: lag must be positive");
  detail::check_witness_domains(a, b, w);
  require(w.r.row_labels() == a.row_labels() && w.r.col_labels() == b.row_labels(),
          "verify_se: R must have shape (rows of A) x (rows of B)");
  require(w.s.row_labels() == b.row_labels() && w.s.col_labels() == a.row_labels(),
          "verify_se: S must have shape (rows of B) x (rows of A)");

  VerifyReport report;
  detail::check_nonnegative(report, "R >= 0", w.r);
  detail::check_nonnegative(report, "S >= 0", w.s);
  detail::check_equation(report, "A^lag = RS", pow(a, w.lag), w.r * w.s);
  detail::check_equation(report, "B^lag = SR", pow(b, w.lag), w.s * w.r);
  detail::check_equation(report, "AR = RB", a * w.r, w.r * b);
  detail::check_equation(report, "SA = BS", w.s * a, b * w.s);
  report.valid = true;
  for (const auto& c : report.checks) report.valid = report.valid && c.holds;
  return report;
}

/// Replaces S by S A^j; lag grows by j, R is unchanged. The result is
/// re-verified before it is returned.
template <class M>
ShiftEquivalenceWitness<M> increase_lag(const M& a, const M& b, const ShiftEquivalenceWitness<M>& w,
                                        int j) {
  require(j >= 0, "increase_lag: j must be non-negative");
  require(verify_se(a, b, w).valid, "increase_lag: input witness is not valid");
  ShiftEquivalenceWitness<M> out{w.r, w.s * pow(a, j), w.lag + j};
  ensure(verify_se(a, b, out).valid, "lag bump produced an invalid witness");
  return out;
}

// ---------------------------------------------------------------------------
// Constructive witnesses for inert matrices
// ---------------------------------------------------------------------------

struct AugmentationExtensionSE {
  IntMatrix aug;  // A(B)
  IntMatrix ext;  // E(B)
  IntSEWitness witness;
};

/// For inert B with certificate exponent l: R = I (x) ones^T collapses each
/// fiber of V x G, S = (identity coefficient of B^l) (x) ones spreads it
/// back, and (R, S) is a lag-l shift equivalence between A(B) and E(B).
inline AugmentationExtensionSE se_between_augmentation_and_extension(const GroupRingMatrix& b) {
  InertnessCertificate cert = is_inert(b);
  if (!cert.inert) {
    const auto& v = *cert.violation;
    throw InputError("se_between_augmentation_and_extension: matrix is not inert; at exponent " +
                     std::to_string(cert.exponent) + " entry (" + v.row.str() + "," + v.col.str() +
                     ") = " + v.entry.str() + " is not a uniform multiple");
  }
  const GroupPtr& grp = group_of(b);
  const int ord = grp->order();
  const int n = static_cast<int>(b.nrows());
  IntMatrix ext = extension_matrix(b);

  IntMatrix r(b.row_labels(), ext.row_labels(), Int(0));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ord; ++g) r.at(i, i * ord + g) = 1;

  const IntMatrix& m = *cert.unit_multiple;  // identity coefficient of B^l
  IntMatrix s(ext.row_labels(), b.row_labels(), Int(0));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < ord; ++g)
      for (int j = 0; j < n; ++j) s.at(i * ord + g, j) = m.at(i, j);

  AugmentationExtensionSE out{augmentation(b), std::move(ext), {std::move(r), std::move(s), cert.exponent}};
  ensure(verify_se(out.aug, out.ext, out.witness).valid,
         "constructed augmentation/extension witness failed verification");
  return out;
}

/// Lifts a shift equivalence between the augmentations of two inert matrices
/// to one between the matrices themselves over Z+[G].
///
/// With k large enough that B^k = u P and C^k = u Q (u the uniform element,
/// P and Q the integer certificate matrices) and (R, S) a lag-m witness for
/// (A(B), A(C)), the pair
///     R' = u * (P R),   S' = u * (Q S)
/// is a lag-(2k+m) witness for (B, C): multiplying u against a group-ring
/// matrix collapses it to its augmentation, and P, Q commute with the
/// respective augmentation powers.
inline GroupRingSEWitness lift_se(const GroupRingMatrix& b, const GroupRingMatrix& c,
                                  const IntSEWitness& w_aug) {
  require_same_group(group_of(b), group_of(c), "lift_se");
  InertnessCertificate cert_b = is_inert(b);
  InertnessCertificate cert_c = is_inert(c);
  require(cert_b.inert, "lift_se: first matrix is not inert");
  require(cert_c.inert, "lift_se: second matrix is not inert");
  IntMatrix aug_b = augmentation(b), aug_c = augmentation(c);
  require(verify_se(aug_b, aug_c, w_aug).valid,
          "lift_se: witness is not a valid shift equivalence of the augmentations");

  const GroupPtr& grp = group_of(b);
  const int k = std::max(cert_b.exponent, cert_c.exponent);
  auto p = uniform_multiple(pow(b, k));
  auto q = uniform_multiple(pow(c, k));
  ensure(p && q, "inert matrices must be uniform multiples at the common exponent");

  GroupRingSEWitness lifted{uniform_matrix(*p * w_aug.r, grp), uniform_matrix(*q * w_aug.s, grp),
                            2 * k + w_aug.lag};
  ensure(verify_se(b, c, lifted).valid, "lifted witness failed verification");
  return lifted;
}

/// The constructive content of the main theorem: two inert matrices whose
/// augmentations are shift equivalent over Z+ are shift equivalent over
/// Z+[G], with an explicit witness.
inline GroupRingSEWitness se_from_inert_pair(const GroupRingMatrix& b, const GroupRingMatrix& c,
                                             const IntSEWitness& w_aug) {
  return lift_se(b, c, w_aug);
}

// ---------------------------------------------------------------------------
// Descent to a normal subgroup
// ---------------------------------------------------------------------------

struct SubgroupDescent {
  GroupElement g;             // conjugator found in R
  SubgroupAsGroup subgroup;   // H with its own multiplication table
  GroupRingMatrix a_h;        // A re-expressed over Z[H]
  GroupRingMatrix b_conj_h;   // g B g^-1 re-expressed over Z[H]
  GroupRingSEWitness witness; // over Z[H], for (a_h, b_conj_h)
};

/// Given irreducible essential A, B with entries in Z[H] for a normal
/// subgroup H, and a witness over Z+[G], produces g and the witness
/// (R g^-1, g S) over Z+[H] between A and g B g^-1. The element g is the
/// first non-vanishing coefficient of R in row-major, then group-index,
/// order. Entries escaping Z[H] are reported as a hypothesis violation.
inline SubgroupDescent descend_se_to_subgroup(const GroupRingMatrix& a, const GroupRingMatrix& b,
                                              const std::vector<int>& h,
                                              const GroupRingSEWitness& w) {
  require_same_group(group_of(a), group_of(b), "descend_se_to_subgroup");
  const GroupPtr& grp = group_of(a);
  require(is_normal_subgroup(*grp, h), "descend_se_to_subgroup: H is not a normal subgroup");
  require(supported_in(a, h) && supported_in(b, h),
          "descend_se_to_subgroup: A and B must have entries in Z[H]");
  for (const auto* m : {&a, &b}) {
    StructureFlags flags = structure_flags(*m);
    require(flags.irreducible && flags.essential,
            "descend_se_to_subgroup: A and B must be irreducible and essential");
  }
  require(verify_se(a, b, w).valid, "descend_se_to_subgroup: witness is not valid over Z+[G]");

  std::optional<GroupElement> found;
  for (std::size_t i = 0; i < w.r.nrows() && !found; ++i)
    for (std::size_t j = 0; j < w.r.ncols() && !found; ++j)
      for (int g = 0; g < grp->order(); ++g)
        if (w.r.at(i, j).coeff(g) != 0) {
          found = GroupElement(grp, g);
          break;
        }
  ensure(found.has_value(), "a valid witness between irreducible matrices has non-zero R");
  const GroupElement g = *found;

  GroupRingMatrix r2 = scale_right(w.r, GroupRingElement::basis(g.inverse()));
  GroupRingMatrix s2 = scale_left(GroupRingElement::basis(g), w.s);
  GroupRingMatrix b_conj = conjugated(g, b);
  for (const auto* m : {&r2, &s2, &b_conj}) {
    if (!supported_in(*m, h))
      throw InputError("descend_se_to_subgroup: descended data has coefficients outside Z[H]; "
                       "hypotheses of the subgroup descent are violated");
  }

  SubgroupAsGroup sub = subgroup_as_group(grp, h);
  SubgroupDescent out{g,
                      sub,
                      restrict_to_subgroup(a, sub),
                      restrict_to_subgroup(b_conj, sub),
                      {restrict_to_subgroup(r2, sub), restrict_to_subgroup(s2, sub), w.lag}};
  ensure(verify_se(out.a_h, out.b_conj_h, out.witness).valid,
         "descended witness failed verification over Z+[H]");
  return out;
}

}  // namespace gsft
