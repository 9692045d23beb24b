#pragma once

#include <string>
#include <vector>

#include "gsft/errors.hpp"
#include "gsft/group.hpp"
#include "gsft/numeric.hpp"

namespace gsft {

/// An element of the integral group ring Z[G]: one big-integer coefficient
/// per group element. The non-negative cone Z+[G] is not a separate type;
/// is_nonnegative() is the membership test, so signed intermediates like
/// I - A reuse the same arithmetic.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group)
      : group_(std::move(group)), coeffs_(checked_order(group_), Int(0)) {}

  static GroupRingElement zero(GroupPtr group) { return GroupRingElement(std::move(group)); }

  static GroupRingElement one(GroupPtr group) {
    return basis(std::move(group), FiniteGroup::kIdentity);
  }

  /// 1 * g for a single group element.
  static GroupRingElement basis(GroupPtr group, int index) {
    GroupRingElement x(std::move(group));
    require(index >= 0 && index < x.order(), "group ring basis: element index out of range");
    x.coeffs_[index] = 1;
    return x;
  }

  static GroupRingElement basis(const GroupElement& g) { return basis(g.group, g.index); }

  /// The sum of all group elements: every coefficient equal to 1.
  static GroupRingElement uniform(GroupPtr group) {
    GroupRingElement x(std::move(group));
    for (auto& c : x.coeffs_) c = 1;
    return x;
  }

  const GroupPtr& group() const { return group_; }
  int order() const { return static_cast<int>(coeffs_.size()); }

  const Int& coeff(int index) const { return coeffs_.at(index); }
  void set_coeff(int index, Int v) { coeffs_.at(index) = std::move(v); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (const auto& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  /// Coefficient sum; a ring homomorphism onto Z.
  Int augmentation() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// All coefficients equal (and the common value if so): membership in
  /// Z * uniform(G).
  bool is_uniform_multiple(Int* value = nullptr) const {
    for (const auto& c : coeffs_)
      if (c != coeffs_[0]) return false;
    if (value) *value = coeffs_[0];
    return true;
  }

  friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x.group_, y.group_, "group ring sum");
    GroupRingElement out(x.group_);
    for (int k = 0; k < x.order(); ++k) out.coeffs_[k] = x.coeffs_[k] + y.coeffs_[k];
    return out;
  }

  friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x.group_, y.group_, "group ring difference");
    GroupRingElement out(x.group_);
    for (int k = 0; k < x.order(); ++k) out.coeffs_[k] = x.coeffs_[k] - y.coeffs_[k];
    return out;
  }

  friend GroupRingElement operator-(const GroupRingElement& x) {
    GroupRingElement out(x.group_);
    for (int k = 0; k < x.order(); ++k) out.coeffs_[k] = -x.coeffs_[k];
    return out;
  }

  /// Convolution product: the coefficient of k is the sum of x_g * y_h over
  /// all factorizations gh = k. Not commutative unless the group is.
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    require_same_group(x.group_, y.group_, "group ring product");
    GroupRingElement out(x.group_);
    const auto& g = *x.group_;
    for (int a = 0; a < x.order(); ++a) {
      if (x.coeffs_[a] == 0) continue;
      for (int b = 0; b < y.order(); ++b) {
        if (y.coeffs_[b] == 0) continue;
        out.coeffs_[g.multiply(a, b)] += x.coeffs_[a] * y.coeffs_[b];
      }
    }
    return out;
  }

  friend GroupRingElement operator*(const Int& n, const GroupRingElement& x) {
    GroupRingElement out(x.group_);
    for (int k = 0; k < x.order(); ++k) out.coeffs_[k] = n * x.coeffs_[k];
    return out;
  }

  GroupRingElement& operator+=(const GroupRingElement& y) { return *this = *this + y; }

  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return same_group(x.group_, y.group_) && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const GroupRingElement& x, const GroupRingElement& y) { return !(x == y); }

  std::string str() const {
    std::string out;
    for (int k = 0; k < order(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string sym = (k == 0) ? "e" : "g" + std::to_string(k);
      if (coeffs_[k] == 1) out += sym;
      else out += coeffs_[k].str() + sym;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int checked_order(const GroupPtr& g) {
    require(g != nullptr, "GroupRingElement: null group");
    return g->order();
  }

  GroupPtr group_;
  std::vector<Int> coeffs_;
};

/// The coefficient of h in x.
inline Int project_coefficient(const GroupRingElement& x, const GroupElement& h) {
  require_same_group(x.group(), h.group, "project_coefficient");
  return x.coeff(h.index);
}

inline Int augmentation(const GroupRingElement& x) { return x.augmentation(); }

/// g x g^-1: the coefficient of k in the result is the coefficient of
/// g^-1 k g in x. Preserves non-negativity and augmentation.
inline GroupRingElement conjugated(const GroupElement& g, const GroupRingElement& x) {
  require_same_group(x.group(), g.group, "conjugated");
  const auto& grp = *x.group();
  GroupRingElement out(x.group());
  const int ginv = grp.inverse(g.index);
  for (int k = 0; k < x.order(); ++k)
    out.set_coeff(k, x.coeff(grp.conjugate(ginv, k)));
  return out;
}

}  // namespace gsft
