#include "lucas/recurrence.hpp"

#include <sstream>
#include <stdexcept>

#include "lucas/binom.hpp"
#include "lucas/errors.hpp"

namespace lucas {

namespace {

// (-1)^i q^{i(i-1)/2}
Rational sign_q_factor(const Rational& q, std::int64_t i) {
  Rational f = pow(q, static_cast<std::uint64_t>(i * (i - 1) / 2));
  return i % 2 == 0 ? f : -f;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " needs n >= 0");
}

}  // namespace

ProductSpec::ProductSpec(std::vector<SequenceDef> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductSpec needs at least one factor");
  for (const auto& f : factors_)
    if (!f.same_params(factors_.front()))
      throw HeterogeneousParams("product factors must share (p, q)");
}

RecurrenceRelation jarden_relation(const Rational& p, const Rational& q, std::int64_t n) {
  require_positive(n, "jarden_relation");
  GenBinomTable table(p, q);
  const auto& row = table.row(n + 1);
  RecurrenceRelation rel{p, q, {}};
  rel.coeffs.reserve(row.size());
  for (std::int64_t i = 0; i <= n + 1; ++i)
    rel.coeffs.push_back(sign_q_factor(q, i) * row[static_cast<std::size_t>(i)]);
  return rel;
}

RecurrenceRelation quotient_relation(const Rational& p, const Rational& q, std::int64_t n) {
  require_positive(n, "quotient_relation");
  const SequenceWindow u = window(SequenceDef::u_sequence(p, q), 0, n + 1);
  for (std::int64_t j = 1; j <= n + 1; ++j)
    if (u.at(j).is_zero())
      throw DegenerateDenominator("u_" + std::to_string(j) +
                                  " = 0; the quotient-form relation is undefined");
  RecurrenceRelation rel{p, q, {}};
  for (std::int64_t i = 0; i <= n + 1; ++i) {
    Rational num(1), den(1);
    for (std::int64_t j = 0; j < i; ++j) {
      num *= u.at(n + 1 - j);
      den *= u.at(j + 1);
    }
    rel.coeffs.push_back(sign_q_factor(q, i) * num / den);
  }
  return rel;
}

RecurrenceRelation degenerate_relation(const Rational& p, const Rational& q, std::int64_t n,
                                       std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("degenerate_relation needs n >= 1 and k >= 1");
  const Rational uk = u_term(p, q, k);
  if (!uk.is_zero())
    throw HypothesisViolated("u_" + std::to_string(k) + " = " + uk.to_string() + " is not zero");
  RecurrenceRelation rel{p, q, std::vector<Rational>(static_cast<std::size_t>(k + 1))};
  rel.coeffs[0] = 1;
  rel.coeffs[static_cast<std::size_t>(k)] = -pow(u_term(p, q, k + 1), static_cast<std::uint64_t>(n));
  return rel;
}

Rational eval_product(const ProductSpec& spec, std::int64_t m) {
  Rational acc(1);
  for (const auto& f : spec.factors()) acc *= term(f, m);
  return acc;
}

RecurrenceRelation convolve(const RecurrenceRelation& a, const RecurrenceRelation& b) {
  if (a.p != b.p || a.q != b.q) throw HeterogeneousParams("convolve: relations differ in (p, q)");
  const DensePoly prod = a.as_poly() * b.as_poly();
  return {a.p, a.q, prod.coefficients()};
}

VerificationReport verify_relation(const RecurrenceRelation& rel, const ValueWindow& values,
                                   std::int64_t m_from, std::int64_t m_to) {
  const auto order = static_cast<std::int64_t>(rel.order());
  if (m_from > m_to) return {};
  if (m_from - order < values.start || m_to >= values.end())
    throw InsufficientWindow("window [" + std::to_string(values.start) + ", " +
                             std::to_string(values.end() - 1) + "] does not cover [" +
                             std::to_string(m_from - order) + ", " + std::to_string(m_to) + "]");
  for (std::int64_t m = m_from; m <= m_to; ++m) {
    Rational sum;
    for (std::int64_t i = 0; i <= order; ++i) {
      const Rational& c = rel.coeffs[static_cast<std::size_t>(i)];
      if (!c.is_zero()) sum += c * values.values[static_cast<std::size_t>(m - i - values.start)];
    }
    if (!sum.is_zero()) return {false, m, sum};
  }
  return {};
}

VerificationReport verify_relation(const RecurrenceRelation& rel,
                                   const std::function<Rational(std::int64_t)>& x,
                                   std::int64_t m_from, std::int64_t m_to) {
  if (m_from > m_to) return {};
  ValueWindow w{m_from - static_cast<std::int64_t>(rel.order()), {}};
  for (std::int64_t m = w.start; m <= m_to; ++m) w.values.push_back(x(m));
  return verify_relation(rel, w, m_from, m_to);
}

std::string to_string(const RecurrenceRelation& rel) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rel.coeffs.size(); ++i) os << (i ? " " : "") << rel.coeffs[i];
  return os.str();
}

}  // namespace lucas
