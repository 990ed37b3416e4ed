#pragma once

// Linear recurrences annihilating products of sequences that share (p, q).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lucas/poly.hpp"
#include "lucas/rational.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

/// sum_{i=0..d} coeffs[i] * X(m - i) = 0, with coeffs[0] = 1.
struct RecurrenceRelation {
  Rational p;
  Rational q;
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// The coefficient vector as a polynomial in ascending powers.
  DensePoly as_poly() const { return DensePoly(coeffs); }
  friend bool operator==(const RecurrenceRelation&, const RecurrenceRelation&) = default;
};

/// Product of term sequences sharing (p, q); X(m) = prod_j x^{(j)}_m.
class ProductSpec {
 public:
  /// Throws HeterogeneousParams on mixed (p, q) and std::invalid_argument
  /// when empty.
  explicit ProductSpec(std::vector<SequenceDef> factors);

  const std::vector<SequenceDef>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

 private:
  std::vector<SequenceDef> factors_;
};

/// c_i = (-1)^i q^{i(i-1)/2} (n+1|i)_u for i = 0..n+1. Annihilates every
/// product of n solutions, including when some u_j = 0. n = 0 yields (1, -1).
RecurrenceRelation jarden_relation(const Rational& p, const Rational& q, std::int64_t n);

/// Same coefficients through the raw quotient u_{n+1}...u_{n-i+2} / (u_i...u_1).
/// Throws DegenerateDenominator unless u_1 ... u_{n+1} are all nonzero.
RecurrenceRelation quotient_relation(const Rational& p, const Rational& q, std::int64_t n);

/// For u_k = 0: X(m) - u_{k+1}^n X(m-k) = 0, valid for m >= k+1.
/// Throws HypothesisViolated if u_k != 0.
RecurrenceRelation degenerate_relation(const Rational& p, const Rational& q, std::int64_t n,
                                       std::int64_t k);

Rational eval_product(const ProductSpec& spec, std::int64_t m);

/// Coefficient-wise convolution: the product of the two recurrence
/// polynomials. Annihilates the sum of anything either operand annihilates.
RecurrenceRelation convolve(const RecurrenceRelation& a, const RecurrenceRelation& b);

struct VerificationReport {
  bool ok = true;
  std::optional<std::int64_t> first_failure;
  Rational residual;  // value of sum c_i X(m - i) at first_failure
};

/// Values X(start), X(start+1), ... of some stream.
struct ValueWindow {
  std::int64_t start = 0;
  std::vector<Rational> values;

  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()); }
};

/// Checks the relation at every m in [m_from, m_to]. The window must cover
/// [m_from - order, m_to]; otherwise InsufficientWindow.
VerificationReport verify_relation(const RecurrenceRelation& rel, const ValueWindow& values,
                                   std::int64_t m_from, std::int64_t m_to);

/// Convenience overload evaluating X on demand.
VerificationReport verify_relation(const RecurrenceRelation& rel,
                                   const std::function<Rational(std::int64_t)>& x,
                                   std::int64_t m_from, std::int64_t m_to);

std::string to_string(const RecurrenceRelation& rel);

}  // namespace lucas
