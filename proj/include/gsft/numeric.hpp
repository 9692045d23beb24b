#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gsft {

// All coefficients in this library are arbitrary-precision: matrix powers
// up to the inertness bound grow exponentially and must stay exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
  return q;
}

}  // namespace gsft
