#pragma once

// Identities over named recurrence sequences: environment, AST, parser,
// printer and exact evaluation.
//
// Grammar (ASCII, whitespace-insensitive):
//   identity := expr "=" expr
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" INT)?
//   base     := RATIONAL | seqref | "(" expr ")" | "det" matrix
//   matrix   := "[" row ("," row)* "]" ;  row := "[" expr ("," expr)* "]"
//   seqref   := NAME "[" affine "]"
//   affine   := (INT "*"?)? "n" (("+" | "-") INT)? | "-"? INT

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/rational.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

/// Named sequences sharing one (p, q).
class SequenceEnv {
 public:
  /// Throws std::invalid_argument when empty and HeterogeneousParams when the
  /// entries disagree on (p, q).
  explicit SequenceEnv(std::map<std::string, SequenceDef> entries);

  /// One `NAME p q x0 x1` per line; blank lines and `#` comments ignored.
  static SequenceEnv parse(std::string_view text);

  const SequenceDef* find(const std::string& name) const;
  const std::map<std::string, SequenceDef>& entries() const { return entries_; }
  const Rational& p() const { return entries_.begin()->second.p; }
  const Rational& q() const { return entries_.begin()->second.q; }

 private:
  std::map<std::string, SequenceDef> entries_;
};

enum class ExprKind { kConst, kSeqRef, kAdd, kSub, kMul, kPow, kDet };

/// name[multiplier * n + offset]; multiplier >= 0.
struct SeqRef {
  std::string name;
  std::int64_t multiplier = 0;
  std::int64_t offset = 0;
  friend bool operator==(const SeqRef&, const SeqRef&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. `degrees` is the set of monomial degrees of
/// the formal expansion: a constant has {0}, name[a*n+b] has {a}, sums take
/// the union, products the pairwise sums, powers the repeated sumset, and a
/// determinant the union over its Leibniz monomials.
struct Expr {
  ExprKind kind = ExprKind::kConst;
  Rational value;                 // kConst
  SeqRef ref;                     // kSeqRef
  std::vector<ExprPtr> children;  // 2 for binary ops, 1 for kPow, dim*dim (row-major) for kDet
  std::uint32_t exponent = 0;     // kPow
  std::size_t dim = 0;            // kDet
  std::set<std::int64_t> degrees;

  std::int64_t degree() const { return *degrees.rbegin(); }
};

ExprPtr make_const(Rational value);
ExprPtr make_ref(SeqRef ref);
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, std::uint32_t exponent);
ExprPtr make_det(std::size_t dim, std::vector<ExprPtr> entries);

/// Structural equality.
bool same_expr(const Expr& a, const Expr& b);

struct Identity {
  ExprPtr left;
  ExprPtr right;

  /// Union of both sides' degree sets.
  std::set<std::int64_t> degrees() const;
};

bool same_identity(const Identity& a, const Identity& b);

/// Throws SyntaxError, UnknownSequence, NonAffineIndex or UnsupportedExponent.
Identity parse_identity(std::string_view text, const SequenceEnv& env);

/// Canonical text; parse_identity(pretty_print(x)) is structurally x.
std::string pretty_print(const Expr& e);
std::string pretty_print(const Identity& id);

/// Exact evaluation at a given n. Caches sequence terms; not thread-safe.
class Evaluator {
 public:
  explicit Evaluator(const SequenceEnv& env);

  Rational eval(const Expr& e, std::int64_t n);

 private:
  std::map<std::string, SequenceCache> caches_;
};

/// Determinant by fraction-based Gaussian elimination, row-major input.
Rational determinant(std::vector<Rational> entries, std::size_t dim);

}  // namespace lucas
