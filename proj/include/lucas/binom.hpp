#pragma once

// Generalized binomial coefficients (r|k)_u of the u-sequence for (p, q).
//
// The value is the symmetric polynomial
//   F(r,k,x,y) = f_r f_{r-1} ... f_{r-k+1} / (f_k ... f_1),  f_j = (x^j - y^j)/(x - y)
// evaluated at the roots of x^2 - p x + q. It equals the quotient
// u_r ... u_{r-k+1} / (u_k ... u_1) whenever that quotient is defined, and
// stays well defined when some u_j vanish. Three independent routes compute
// it; none materializes the roots.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lucas/poly.hpp"
#include "lucas/rational.hpp"

namespace lucas {

struct GenBinomQuery {
  Rational p;
  Rational q;
  std::int64_t r = 0;
  std::int64_t k = 0;
};

/// Division-free recurrence
///   (n|k) = u_{k+1} (n-1|k) - q u_{n-k-1} (n-1|k-1),  (n|0) = (n|n) = 1.
/// Total in k: the value is 0 for k < 0 or k > r.
Rational genbinom_pascal(const GenBinomQuery& query);

/// Deforms q into an indeterminate z, forms
///   C(z) = v_r ... v_{r-k+1} / (v_k ... v_1),  v_j = p v_{j-1} - z v_{j-2},
/// by exact polynomial division, and evaluates C at z = q.
/// When p = 0 the polynomial v_2 vanishes identically, so p is deformed
/// instead: v_j = z v_{j-1} - q v_{j-2}, evaluated at z = 0.
/// Requires 0 <= k <= r.
Rational genbinom_limit(const GenBinomQuery& query);

/// The raw quotient. Throws DegenerateDenominator if any of u_1..u_k is 0.
Rational genbinom_quotient(const GenBinomQuery& query);

/// Row (r|0), ..., (r|r) via the Pascal route.
std::vector<Rational> genbinom_row(const Rational& p, const Rational& q, std::int64_t r);

/// Which parameter the limit route replaces by the indeterminate.
enum class Deformation { kQ, kP };

/// v_0(z), ..., v_count(z) for the given deformation. With kQ the entries
/// are v_j = p v_{j-1} - z v_{j-2}; with kP they are v_j = z v_{j-1} - q v_{j-2}.
std::vector<DensePoly> v_polys(const Rational& p, const Rational& q, std::int64_t count,
                               Deformation deformation = Deformation::kQ);

/// Memoized Pascal triangle for one (p, q). Rows are built on demand and
/// kept. Not thread-safe.
class GenBinomTable {
 public:
  GenBinomTable(Rational p, Rational q);

  const std::vector<Rational>& row(std::int64_t r);
  Rational at(std::int64_t r, std::int64_t k);

 private:
  Rational p_, q_;
  std::vector<Rational> u_;  // u_0, u_1, ...
  std::vector<std::vector<Rational>> rows_;
  const Rational& u(std::int64_t j);
};

/// Gaussian binomial (1-z^{m+n})...(1-z^{m+1}) / ((1-z^n)...(1-z)),
/// a polynomial of degree m*n.
DensePoly gaussian_binomial(std::int64_t m, std::int64_t n);

struct IntegralityReport {
  std::int64_t p = 0, q = 0, r = 0;
  std::vector<Rational> row;
  bool all_integral = true;
};

/// Computes row r for integer (p, q) and checks every entry has denominator
/// 1. Throws NonIntegralValue naming (p, q, r, k) on the first failure.
IntegralityReport integrality_check(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace lucas
