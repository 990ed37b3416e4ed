#include "lucas/sequences.hpp"

#include <stdexcept>
#include <string>

#include "lucas/errors.hpp"

namespace lucas {

namespace {

void require_backward(const SequenceDef& def, std::int64_t r) {
  if (r < 0 && def.q.is_zero())
    throw BackwardUndefined("x_" + std::to_string(r) + " is undefined when q = 0");
}

// x_{r-2} from x_{r-1} and x_r.
Rational step_back(const SequenceDef& def, const Rational& prev, const Rational& cur) {
  return (def.p * prev - cur) / def.q;
}

}  // namespace

Rational term(const SequenceDef& def, std::int64_t r) {
  require_backward(def, r);
  if (r == 0) return def.x0;
  if (r == 1) return def.x1;
  if (r > 1) {
    Rational a = def.x0, b = def.x1;
    for (std::int64_t i = 2; i <= r; ++i) {
      Rational c = def.p * b - def.q * a;
      a = std::move(b);
      b = std::move(c);
    }
    return b;
  }
  // walk down: (lo, hi) = (x_{i}, x_{i+1})
  Rational lo = def.x0, hi = def.x1;
  for (std::int64_t i = 0; i > r; --i) {
    Rational below = step_back(def, lo, hi);
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

Rational u_term(const Rational& p, const Rational& q, std::int64_t r) {
  return term(SequenceDef::u_sequence(p, q), r);
}

Rational companion_term(const Rational& p, const Rational& q, std::int64_t r) {
  return term(SequenceDef::companion(p, q), r);
}

SequenceWindow window(const SequenceDef& def, std::int64_t from, std::int64_t to) {
  if (from > to) throw std::invalid_argument("window: from > to");
  require_backward(def, from);
  SequenceWindow w{def, from, {}};
  w.values.reserve(static_cast<std::size_t>(to - from + 1));
  Rational a = term(def, from);
  w.values.push_back(a);
  if (to == from) return w;
  Rational b = term(def, from + 1);
  w.values.push_back(b);
  for (std::int64_t i = from + 2; i <= to; ++i) {
    Rational c = def.p * b - def.q * a;
    a = std::move(b);
    b = c;
    w.values.push_back(std::move(c));
  }
  return w;
}

Rational index_add(const SequenceDef& def, std::int64_t m, std::int64_t r) {
  Rational lhs = term(def, m + r + 1);
  Rational rhs = u_term(def.p, def.q, m + 1) * term(def, r + 1) -
                 def.q * u_term(def.p, def.q, m) * term(def, r);
  if (lhs != rhs)
    throw IdentityViolation("index addition fails at m=" + std::to_string(m) +
                            ", r=" + std::to_string(r) + ": " + lhs.to_string() +
                            " != " + rhs.to_string());
  return lhs;
}

SequenceCache::SequenceCache(SequenceDef def) : def_(std::move(def)) {
  values_.push_back(def_.x0);
  values_.push_back(def_.x1);
}

const Rational& SequenceCache::operator()(std::int64_t r) {
  require_backward(def_, r);
  while (r < start_) {
    Rational below = step_back(def_, values_[0], values_[1]);
    values_.insert(values_.begin(), std::move(below));
    --start_;
  }
  while (r >= start_ + static_cast<std::int64_t>(values_.size())) {
    const std::size_t n = values_.size();
    values_.push_back(def_.p * values_[n - 1] - def_.q * values_[n - 2]);
  }
  return values_[static_cast<std::size_t>(r - start_)];
}

}  // namespace lucas
