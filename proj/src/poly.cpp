#include "lucas/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lucas/errors.hpp"

namespace lucas {

DensePoly::DensePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  strip();
}

DensePoly::DensePoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

DensePoly DensePoly::monomial(const Rational& c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return DensePoly(std::move(v));
}

std::optional<std::size_t> DensePoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational DensePoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

void DensePoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string DensePoly::to_string(const std::string& var, bool descending) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const std::size_t i = descending ? coeffs_.size() - 1 - j : j;
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return DensePoly(std::move(out));
}

DensePoly operator-(const DensePoly& a) {
  std::vector<Rational> out = a.coefficients();
  for (auto& c : out) c = -c;
  return DensePoly(std::move(out));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return DensePoly(std::move(out));
}

DensePoly operator*(const Rational& s, const DensePoly& a) {
  std::vector<Rational> out = a.coefficients();
  for (auto& c : out) c *= s;
  return DensePoly(std::move(out));
}

std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
  if (a.is_zero() || *a.degree() < *b.degree()) return {DensePoly{}, a};

  const std::size_t db = *b.degree();
  const Rational& lead = b.leading();
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(rem.size() - db);
  const auto& bc = b.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + db];
    if (top.is_zero()) continue;
    Rational t = top / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= t * bc[j];
    quot[k] = std::move(t);
  }
  rem.resize(db);
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b) {
  auto [quot, rem] = poly_divmod(a, b);
  if (!rem.is_zero())
    throw InexactDivision("(" + a.to_string() + ") / (" + b.to_string() + ") leaves remainder " +
                          rem.to_string());
  return quot;
}

Rational poly_eval(const DensePoly& a, const Rational& at) {
  Rational acc;
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= at;
    acc += c[i];
  }
  return acc;
}

}  // namespace lucas
