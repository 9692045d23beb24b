#pragma once

#include <string>
#include <vector>

#include "gsft/errors.hpp"
#include "gsft/numeric.hpp"

namespace gsft {

/// Polynomial over Z, coefficients by ascending degree, trailing zeros
/// trimmed (the zero polynomial is the empty vector).
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  const Int& coeff(std::size_t k) const {
    static const Int kZero{0};
    return k < c.size() ? c[k] : kZero;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(out));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (!out.empty()) out += (c[k] > 0 ? " + " : " - ");
      else if (c[k] < 0) out += "-";
      Int a = abs(c[k]);
      if (k == 0) out += a.str();
      else {
        if (a != 1) out += a.str() + "*";
        out += (k == 1) ? "t" : "t^" + std::to_string(k);
      }
    }
    return out;
  }
};

/// Exact division in Q[t]; when the remainder vanishes and numerator and
/// divisor are integral with the divisor primitive, the quotient is integral
/// (Gauss). Returns true and fills `quotient` (if given) iff d divides n.
inline bool divides(const IntPoly& d, const IntPoly& n, IntPoly* quotient = nullptr) {
  require(!d.is_zero(), "polynomial division by zero");
  if (n.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (n.degree() < d.degree()) return false;
  std::vector<Rational> rem(n.c.size());
  for (std::size_t i = 0; i < n.c.size(); ++i) rem[i] = Rational(n.c[i]);
  const Rational lead(d.c.back());
  std::vector<Rational> q(n.degree() - d.degree() + 1, Rational(0));
  for (int k = n.degree() - d.degree(); k >= 0; --k) {
    Rational f = rem[k + d.degree()] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * Rational(d.c[i]);
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  if (quotient) {
    std::vector<Int> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (denominator(q[i]) != 1) return false;  // divides in Q but not in Z[t]
      qi[i] = numerator(q[i]);
    }
    *quotient = IntPoly(std::move(qi));
  } else {
    for (const auto& r : q)
      if (denominator(r) != 1) return false;
  }
  return true;
}

}  // namespace gsft
