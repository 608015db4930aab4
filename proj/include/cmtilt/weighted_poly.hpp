#pragma once

// Bivariate weighted-homogeneous polynomials, parsed with rational coefficients
// and specialized to a field later.

#include <map>
#include <string>
#include <utility>

#include "cmtilt/field.hpp"

namespace cmtilt {

using Exponent = std::pair<int, int>;  // (power of x, power of y)

struct WeightedPoly {
  std::map<Exponent, Rational> terms;  // nonzero coefficients only
  int dx = 1;
  int dy = 1;

  /// Weighted degree; throws NotHomogeneous if terms disagree, InvalidInput if empty.
  int degree() const;
  /// Term with the largest power of x (lex order, x > y).
  Exponent leading_exponent() const;
  std::string str() const;
};

/// Parses text such as "3*x^2*y - y^3", "x(x-y)^2" or "1/2 x^4 + y^2".
/// Products, powers and parentheses are expanded.
std::map<Exponent, Rational> parse_polynomial(const std::string& text);

/// Parses and validates: weights >= 1, nonzero, homogeneous, positive degree.
WeightedPoly make_weighted_poly(const std::string& text, int dx, int dy);

}  // namespace cmtilt
