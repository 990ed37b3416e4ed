#pragma once

// Second-order linear recurrence sequences x_r = p*x_{r-1} - q*x_{r-2}.

#include <cstdint>
#include <vector>

#include "lucas/rational.hpp"

namespace lucas {

struct SequenceDef {
  Rational p;
  Rational q;
  Rational x0;
  Rational x1;

  /// The fundamental solution u_0 = 0, u_1 = 1.
  static SequenceDef u_sequence(const Rational& p, const Rational& q) { return {p, q, 0, 1}; }
  /// The companion solution V_0 = 2, V_1 = p.
  static SequenceDef companion(const Rational& p, const Rational& q) { return {p, q, 2, p}; }

  bool same_params(const SequenceDef& o) const { return p == o.p && q == o.q; }
  friend bool operator==(const SequenceDef&, const SequenceDef&) = default;
};

/// A contiguous slice x_start, x_{start+1}, ... of a sequence.
struct SequenceWindow {
  SequenceDef def;
  std::int64_t start_index = 0;
  std::vector<Rational> values;

  std::int64_t end_index() const {  // one past the last index
    return start_index + static_cast<std::int64_t>(values.size());
  }
  bool covers(std::int64_t r) const { return r >= start_index && r < end_index(); }
  const Rational& at(std::int64_t r) const { return values.at(static_cast<std::size_t>(r - start_index)); }
};

/// x_r. Negative r walks the recurrence backwards, which needs q != 0;
/// otherwise BackwardUndefined is thrown.
Rational term(const SequenceDef& def, std::int64_t r);

Rational u_term(const Rational& p, const Rational& q, std::int64_t r);
Rational companion_term(const Rational& p, const Rational& q, std::int64_t r);

/// Terms x_from .. x_to inclusive (from <= to).
SequenceWindow window(const SequenceDef& def, std::int64_t from, std::int64_t to);

/// Evaluates both sides of x_{m+r+1} = u_{m+1} x_{r+1} - q u_m x_r and returns
/// the common value. Throws IdentityViolation if they differ.
Rational index_add(const SequenceDef& def, std::int64_t m, std::int64_t r);

/// Memoizing evaluator for one sequence. Grows a contiguous window on demand,
/// so repeated lookups over a range cost O(1) amortized. Not thread-safe;
/// confine an instance to one thread.
class SequenceCache {
 public:
  explicit SequenceCache(SequenceDef def);

  const Rational& operator()(std::int64_t r);
  const SequenceDef& def() const { return def_; }

 private:
  SequenceDef def_;
  std::int64_t start_ = 0;
  std::vector<Rational> values_;  // x_start_, x_{start_+1}, ...
};

}  // namespace lucas
