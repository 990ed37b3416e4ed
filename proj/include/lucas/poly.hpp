#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucas/rational.hpp"

namespace lucas {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending powers. The highest stored coefficient is never zero; the zero
/// polynomial has no coefficients and no integer degree.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coefficients);
  /// Constant polynomial.
  explicit DensePoly(const Rational& constant);

  /// c * z^power.
  static DensePoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Coefficient of z^power; zero past the degree.
  Rational coeff(std::size_t power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  /// Renders with the given variable name, e.g. "1 - z^3" (ascending) or
  /// "-z^3 + 1" (descending).
  std::string to_string(const std::string& var = "z", bool descending = false) const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const Rational& s, const DensePoly& a);

/// Classical long division returning (quotient, remainder).
/// Throws DivisionByZeroPoly when b is zero.
std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b);

/// Quotient t with a = b*t. Throws InexactDivision if the remainder is
/// nonzero and DivisionByZeroPoly if b is zero.
DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b);

/// Horner evaluation.
Rational poly_eval(const DensePoly& a, const Rational& at);

inline DensePoly poly_add(const DensePoly& a, const DensePoly& b) { return a + b; }
inline DensePoly poly_mul(const DensePoly& a, const DensePoly& b) { return a * b; }

}  // namespace lucas
