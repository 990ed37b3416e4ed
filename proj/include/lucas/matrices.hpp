#pragma once

// Exact square matrices whose characteristic polynomial carries the
// generalized binomial coefficients.

#include <cstdint>
#include <string>
#include <vector>

#include "lucas/poly.hpp"
#include "lucas/rational.hpp"

namespace lucas {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ExactMatrix identity(std::size_t dim);
  /// Ones on the anti-diagonal. Its own inverse.
  static ExactMatrix exchange(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ExactMatrix transpose() const;
  Rational trace() const;
  std::string to_string() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);

/// (n+1)x(n+1) matrix with 0-based entry (r, c) = C(r, n-c) p^{r+c-n} (-q)^{n-c}.
ExactMatrix build_A(std::int64_t n, const Rational& p, const Rational& q);

/// n x n matrix with 1-based entry (r, c) = C(n-c, r-1) p^{n-c-r+1} (-q)^{r-1}.
ExactMatrix build_Q(std::int64_t n, const Rational& p, const Rational& q);

/// build_A(n-1) == E * transpose(build_Q(n)) * E.
bool similarity_check(std::int64_t n, const Rational& p, const Rational& q);

/// Monic det(xI - M), by Faddeev-LeVerrier over the rationals.
DensePoly char_poly(const ExactMatrix& mat);

/// Coefficients (-1)^i q^{i(i-1)/2} (n|i)_u, i = 0..n.
std::vector<Rational> binomial_form(std::int64_t n, const Rational& p, const Rational& q);

/// Same values through the raw quotient u_n...u_{n-i+1} / (u_1...u_i).
/// Throws DegenerateDenominator when some u_1..u_n vanishes.
std::vector<Rational> quotient_form(std::int64_t n, const Rational& p, const Rational& q);

/// Coefficients of the monic polynomial in reverse order (constant term 1
/// after reversal, since the input is monic).
std::vector<Rational> reversed(const DensePoly& monic, std::size_t degree);

/// reversed(char_poly(build_Q(n))) == binomial_form(n, p, q).
bool verify_binomial_form(std::int64_t n, const Rational& p, const Rational& q);

}  // namespace lucas
