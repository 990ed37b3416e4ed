#include "lucas/binom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

void require_nonnegative_r(std::int64_t r) {
  if (r < 0) throw std::invalid_argument("generalized binomial needs r >= 0, got " + std::to_string(r));
}

}  // namespace

GenBinomTable::GenBinomTable(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  u_ = {Rational(0), Rational(1)};
}

const Rational& GenBinomTable::u(std::int64_t j) {
  while (static_cast<std::int64_t>(u_.size()) <= j) {
    const std::size_t n = u_.size();
    u_.push_back(p_ * u_[n - 1] - q_ * u_[n - 2]);
  }
  return u_[static_cast<std::size_t>(j)];
}

const std::vector<Rational>& GenBinomTable::row(std::int64_t r) {
  require_nonnegative_r(r);
  if (rows_.empty()) rows_.push_back({Rational(1)});
  while (static_cast<std::int64_t>(rows_.size()) <= r) {
    const auto n = static_cast<std::int64_t>(rows_.size());
    const std::vector<Rational>& prev = rows_.back();
    std::vector<Rational> next(static_cast<std::size_t>(n + 1));
    next[0] = 1;
    next[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t k = 1; k < n; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      next[ks] = u(k + 1) * prev[ks] - q_ * u(n - k - 1) * prev[ks - 1];
    }
    rows_.push_back(std::move(next));
  }
  return rows_[static_cast<std::size_t>(r)];
}

Rational GenBinomTable::at(std::int64_t r, std::int64_t k) {
  if (k < 0 || k > r) return 0;
  return row(r)[static_cast<std::size_t>(k)];
}

Rational genbinom_pascal(const GenBinomQuery& query) {
  require_nonnegative_r(query.r);
  if (query.k < 0 || query.k > query.r) return 0;
  GenBinomTable table(query.p, query.q);
  return table.at(query.r, query.k);
}

std::vector<Rational> genbinom_row(const Rational& p, const Rational& q, std::int64_t r) {
  GenBinomTable table(p, q);
  return table.row(r);
}

std::vector<DensePoly> v_polys(const Rational& p, const Rational& q, std::int64_t count,
                               Deformation deformation) {
  const DensePoly z = DensePoly::monomial(1, 1);
  // v_j = a * v_{j-1} - b * v_{j-2}
  const DensePoly a = deformation == Deformation::kQ ? DensePoly(p) : z;
  const DensePoly b = deformation == Deformation::kQ ? z : DensePoly(q);
  std::vector<DensePoly> v{DensePoly{}, DensePoly(Rational(1))};
  for (std::int64_t j = 2; j <= count; ++j) {
    const std::size_t n = v.size();
    v.push_back(a * v[n - 1] - b * v[n - 2]);
  }
  v.resize(static_cast<std::size_t>(std::max<std::int64_t>(count, 0) + 1));
  return v;
}

Rational genbinom_limit(const GenBinomQuery& query) {
  require_nonnegative_r(query.r);
  if (query.k < 0 || query.k > query.r)
    throw std::invalid_argument("limit route needs 0 <= k <= r");
  const Deformation deformation = query.p.is_zero() ? Deformation::kP : Deformation::kQ;
  const auto v = v_polys(query.p, query.q, query.r, deformation);

  DensePoly numerator(Rational(1));
  DensePoly denominator(Rational(1));
  for (std::int64_t i = 0; i < query.k; ++i) {
    numerator = numerator * v[static_cast<std::size_t>(query.r - i)];
    denominator = denominator * v[static_cast<std::size_t>(i + 1)];
  }
  const DensePoly c = poly_exact_div(numerator, denominator);
  return poly_eval(c, deformation == Deformation::kQ ? query.q : query.p);
}

Rational genbinom_quotient(const GenBinomQuery& query) {
  require_nonnegative_r(query.r);
  if (query.k < 0 || query.k > query.r) return 0;
  const SequenceWindow u = window(SequenceDef::u_sequence(query.p, query.q), 0, query.r);
  Rational numerator(1), denominator(1);
  for (std::int64_t i = 0; i < query.k; ++i) {
    const Rational& d = u.at(i + 1);
    if (d.is_zero())
      throw DegenerateDenominator("u_" + std::to_string(i + 1) + " = 0; quotient (" +
                                  std::to_string(query.r) + "|" + std::to_string(query.k) +
                                  ")_u is undefined");
    numerator *= u.at(query.r - i);
    denominator *= d;
  }
  return numerator / denominator;
}

DensePoly gaussian_binomial(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("gaussian_binomial needs m, n >= 0");
  const DensePoly one(Rational(1));
  DensePoly numerator = one, denominator = one;
  for (std::int64_t i = 1; i <= n; ++i) {
    numerator = numerator * (one - DensePoly::monomial(1, static_cast<std::size_t>(m + i)));
    denominator = denominator * (one - DensePoly::monomial(1, static_cast<std::size_t>(i)));
  }
  return poly_exact_div(numerator, denominator);
}

IntegralityReport integrality_check(std::int64_t p, std::int64_t q, std::int64_t r) {
  IntegralityReport report{p, q, r, genbinom_row(p, q, r), true};
  for (std::size_t k = 0; k < report.row.size(); ++k) {
    if (!report.row[k].is_integer()) {
      throw NonIntegralValue("(" + std::to_string(r) + "|" + std::to_string(k) + ")_u = " +
                             report.row[k].to_string() + " for p=" + std::to_string(p) +
                             ", q=" + std::to_string(q));
    }
  }
  return report;
}

}  // namespace lucas
