#include "lucas/matrices.hpp"

#include <sstream>
#include <stdexcept>

#include "lucas/binom.hpp"
#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

// Classical binomial C(n, k); 0 outside 0 <= k <= n.
Rational choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

void require_dim(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("matrix dimension parameter must be >= 1");
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::exchange(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, dim - 1 - i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational ExactMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.dim();
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) += b(i, j);
  return out;
}

ExactMatrix build_A(std::int64_t n, const Rational& p, const Rational& q) {
  if (n < 0) throw std::invalid_argument("build_A needs n >= 0");
  const auto dim = static_cast<std::size_t>(n + 1);
  ExactMatrix a(dim);
  for (std::int64_t r = 0; r <= n; ++r)
    for (std::int64_t c = 0; c <= n; ++c) {
      const Rational b = choose(r, n - c);
      if (b.is_zero()) continue;  // also rules out negative powers of p
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          b * pow(p, static_cast<std::uint64_t>(r + c - n)) *
          pow(-q, static_cast<std::uint64_t>(n - c));
    }
  return a;
}

ExactMatrix build_Q(std::int64_t n, const Rational& p, const Rational& q) {
  require_dim(n);
  ExactMatrix m(static_cast<std::size_t>(n));
  for (std::int64_t r = 1; r <= n; ++r)
    for (std::int64_t c = 1; c <= n; ++c) {
      const Rational b = choose(n - c, r - 1);
      if (b.is_zero()) continue;
      m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) =
          b * pow(p, static_cast<std::uint64_t>(n - c - r + 1)) *
          pow(-q, static_cast<std::uint64_t>(r - 1));
    }
  return m;
}

bool similarity_check(std::int64_t n, const Rational& p, const Rational& q) {
  require_dim(n);
  const ExactMatrix e = ExactMatrix::exchange(static_cast<std::size_t>(n));
  return build_A(n - 1, p, q) == e * build_Q(n, p, q).transpose() * e;
}

DensePoly char_poly(const ExactMatrix& mat) {
  const std::size_t n = mat.dim();
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  ExactMatrix m(n);
  const ExactMatrix id = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix scaled = id;
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = c[n - k + 1];
    m = mat * m + scaled;
    c[n - k] = -(mat * m).trace() / Rational(static_cast<long>(k));
  }
  return DensePoly(std::move(c));
}

std::vector<Rational> binomial_form(std::int64_t n, const Rational& p, const Rational& q) {
  require_dim(n);
  const auto row = genbinom_row(p, q, n);
  std::vector<Rational> out;
  for (std::int64_t i = 0; i <= n; ++i) {
    Rational f = pow(q, static_cast<std::uint64_t>(i * (i - 1) / 2)) * row[static_cast<std::size_t>(i)];
    out.push_back(i % 2 ? -f : f);
  }
  return out;
}

std::vector<Rational> quotient_form(std::int64_t n, const Rational& p, const Rational& q) {
  require_dim(n);
  const SequenceWindow u = window(SequenceDef::u_sequence(p, q), 0, n);
  for (std::int64_t j = 1; j <= n; ++j)
    if (u.at(j).is_zero())
      throw DegenerateDenominator("u_" + std::to_string(j) + " = 0; quotient form undefined");
  std::vector<Rational> out;
  for (std::int64_t i = 0; i <= n; ++i) {
    Rational num(1), den(1);
    for (std::int64_t j = 0; j < i; ++j) {
      num *= u.at(n - j);
      den *= u.at(j + 1);
    }
    Rational f = pow(q, static_cast<std::uint64_t>(i * (i - 1) / 2)) * num / den;
    out.push_back(i % 2 ? -f : f);
  }
  return out;
}

std::vector<Rational> reversed(const DensePoly& monic, std::size_t degree) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i <= degree; ++i) out.push_back(monic.coeff(degree - i));
  return out;
}

bool verify_binomial_form(std::int64_t n, const Rational& p, const Rational& q) {
  require_dim(n);
  const auto dim = static_cast<std::size_t>(n);
  return reversed(char_poly(build_Q(n, p, q)), dim) == binomial_form(n, p, q);
}

}  // namespace lucas
