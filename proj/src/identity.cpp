#include "lucas/identity.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lucas/errors.hpp"

namespace lucas {

// ---------------------------------------------------------------------------
// Environment

SequenceEnv::SequenceEnv(std::map<std::string, SequenceDef> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sequence environment is empty");
  const SequenceDef& first = entries_.begin()->second;
  for (const auto& [name, def] : entries_)
    if (!def.same_params(first))
      throw HeterogeneousParams("sequence '" + name + "' has (p, q) = (" + def.p.to_string() +
                                ", " + def.q.to_string() + "), expected (" +
                                first.p.to_string() + ", " + first.q.to_string() + ")");
}

SequenceEnv SequenceEnv::parse(std::string_view text) {
  std::map<std::string, SequenceDef> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 5)
      throw ParseError("env line " + std::to_string(lineno) + ": expected `NAME p q x0 x1`");
    if (f[0] == "det" || f[0] == "n" || !(std::isalpha(static_cast<unsigned char>(f[0][0])) || f[0][0] == '_'))
      throw ParseError("env line " + std::to_string(lineno) + ": invalid sequence name '" + f[0] + "'");
    if (entries.count(f[0]))
      throw ParseError("env line " + std::to_string(lineno) + ": duplicate sequence '" + f[0] + "'");
    entries.emplace(f[0], SequenceDef{Rational::parse(f[1]), Rational::parse(f[2]),
                                      Rational::parse(f[3]), Rational::parse(f[4])});
  }
  return SequenceEnv(std::move(entries));
}

const SequenceDef* SequenceEnv::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Nodes

namespace {

std::set<std::int64_t> sumset(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

}  // namespace

ExprPtr make_const(Rational value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kConst;
  e->value = std::move(value);
  e->degrees = {0};
  return e;
}

ExprPtr make_ref(SeqRef ref) {
  if (ref.multiplier < 0) throw NonAffineIndex("index multiplier must be non-negative");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kSeqRef;
  e->degrees = {ref.multiplier};
  e->ref = std::move(ref);
  return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  switch (kind) {
    case ExprKind::kAdd:
    case ExprKind::kSub:
      e->degrees = lhs->degrees;
      e->degrees.insert(rhs->degrees.begin(), rhs->degrees.end());
      break;
    case ExprKind::kMul:
      e->degrees = sumset(lhs->degrees, rhs->degrees);
      break;
    default:
      throw std::invalid_argument("make_binary: not a binary kind");
  }
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_pow(ExprPtr base, std::uint32_t exponent) {
  if (exponent < 1) throw UnsupportedExponent("exponent must be >= 1");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kPow;
  e->exponent = exponent;
  e->degrees = base->degrees;
  for (std::uint32_t i = 1; i < exponent; ++i) e->degrees = sumset(e->degrees, base->degrees);
  e->children = {std::move(base)};
  return e;
}

ExprPtr make_det(std::size_t dim, std::vector<ExprPtr> entries) {
  if (dim == 0 || entries.size() != dim * dim)
    throw std::invalid_argument("make_det: entries must form a nonempty square matrix");
  if (dim > 20) throw std::invalid_argument("make_det: dimension too large");
  // reachable[mask]: degree sets of partial Leibniz monomials using the
  // columns in mask for the first popcount(mask) rows.
  std::vector<std::set<std::int64_t>> reachable(std::size_t{1} << dim);
  reachable[0] = {0};
  for (std::size_t mask = 0; mask + 1 < reachable.size(); ++mask) {
    if (reachable[mask].empty()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < dim; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      auto next = sumset(reachable[mask], entries[row * dim + col]->degrees);
      reachable[mask | (std::size_t{1} << col)].insert(next.begin(), next.end());
    }
  }
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kDet;
  e->dim = dim;
  e->degrees = reachable.back();
  e->children = std::move(entries);
  return e;
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::kConst:
      return a.value == b.value;
    case ExprKind::kSeqRef:
      return a.ref == b.ref;
    case ExprKind::kPow:
      if (a.exponent != b.exponent) return false;
      break;
    case ExprKind::kDet:
      if (a.dim != b.dim) return false;
      break;
    default:
      break;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_expr(*a.children[i], *b.children[i])) return false;
  return true;
}

std::set<std::int64_t> Identity::degrees() const {
  std::set<std::int64_t> d = left->degrees;
  d.insert(right->degrees.begin(), right->degrees.end());
  return d;
}

bool same_identity(const Identity& a, const Identity& b) {
  return same_expr(*a.left, *b.left) && same_expr(*a.right, *b.right);
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { kNumber, kName, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kName, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*^=()[],/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw SyntaxError(i, "a token", "'" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const SequenceEnv& env) : toks_(lex(text)), env_(env) {}

  Identity identity() {
    ExprPtr lhs = expr();
    expect("=");
    ExprPtr rhs = expr();
    if (peek().kind != Tok::kEnd) fail("end of input");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  bool at(const char* sym, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::kSymbol && t.text == sym;
  }
  bool at_name(const char* name, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::kName && t.text == name;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, expected, t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'");
  }

  void expect(const char* sym) {
    if (!at(sym)) fail(std::string("'") + sym + "'");
    ++i_;
  }

  std::int64_t integer(const Token& t) const {
    try {
      return std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError(t.pos, "an integer that fits in 64 bits", "'" + t.text + "'");
    }
  }

  ExprPtr expr() {
    ExprPtr acc = term();
    while (at("+") || at("-")) {
      ExprKind kind = next().text == "+" ? ExprKind::kAdd : ExprKind::kSub;
      acc = make_binary(kind, std::move(acc), term());
    }
    return acc;
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    while (at("*")) {
      ++i_;
      acc = make_binary(ExprKind::kMul, std::move(acc), factor());
    }
    return acc;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (!at("^")) return b;
    ++i_;
    const Token& t = peek();
    if (t.kind != Tok::kNumber)
      throw UnsupportedExponent("exponent at position " + std::to_string(t.pos) +
                                " must be a positive integer literal");
    if (at("/", 1))
      throw UnsupportedExponent("exponent at position " + std::to_string(t.pos) +
                                " must be an integer");
    ++i_;
    const std::int64_t e = integer(t);
    if (e < 1 || e > 1000)
      throw UnsupportedExponent("exponent " + t.text + " at position " + std::to_string(t.pos) +
                                " is outside 1..1000");
    return make_pow(std::move(b), static_cast<std::uint32_t>(e));
  }

  ExprPtr base() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      ++i_;
      std::string text = t.text;
      if (at("/")) {
        ++i_;
        if (peek().kind != Tok::kNumber) fail("a denominator");
        text += "/" + next().text;
      }
      try {
        return make_const(Rational::parse(text));
      } catch (const InvalidRational&) {
        throw SyntaxError(t.pos, "a nonzero denominator", "'" + text + "'");
      }
    }
    if (at("(")) {
      ++i_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (at_name("det") && at("[", 1)) {
      ++i_;
      return matrix();
    }
    if (t.kind == Tok::kName && at("[", 1)) return seqref();
    fail("a number, sequence reference, '(' or 'det'");
  }

  ExprPtr matrix() {
    const std::size_t start = peek().pos;
    expect("[");
    std::vector<std::vector<ExprPtr>> rows;
    do {
      expect("[");
      std::vector<ExprPtr> row{expr()};
      while (at(",")) {
        ++i_;
        row.push_back(expr());
      }
      expect("]");
      rows.push_back(std::move(row));
    } while (at(",") && (++i_, true));
    expect("]");
    const std::size_t dim = rows.size();
    std::vector<ExprPtr> entries;
    for (auto& row : rows) {
      if (row.size() != dim) throw SyntaxError(start, "a square matrix", "a non-square matrix");
      for (auto& e : row) entries.push_back(std::move(e));
    }
    return make_det(dim, std::move(entries));
  }

  [[noreturn]] void non_affine() const {
    throw NonAffineIndex("index at position " + std::to_string(peek().pos) +
                         " is not of the form a*n+b with integer a >= 0");
  }

  ExprPtr seqref() {
    const Token& name = next();
    if (!env_.find(name.text))
      throw UnknownSequence("unknown sequence '" + name.text + "' at position " +
                            std::to_string(name.pos));
    expect("[");
    SeqRef ref{name.text, 0, 0};
    bool negative = false;
    if (at("-")) {
      negative = true;
      ++i_;
    }
    if (peek().kind == Tok::kNumber) {
      const std::int64_t v = integer(next());
      if (at("*") || at_name("n")) {
        if (negative) non_affine();
        if (at("*")) ++i_;
        if (!at_name("n")) non_affine();
        ++i_;
        ref.multiplier = v;
        offset(ref);
      } else {
        ref.offset = negative ? -v : v;
      }
    } else if (at_name("n")) {
      if (negative) non_affine();
      ++i_;
      ref.multiplier = 1;
      offset(ref);
    } else if (peek().kind == Tok::kName || at("(")) {
      non_affine();
    } else {
      fail("an affine index");
    }
    if (!at("]")) {
      if (at("*") || at("^") || at("/") || at("(") || at("[") || peek().kind == Tok::kName) non_affine();
      fail("']'");
    }
    ++i_;
    return make_ref(std::move(ref));
  }

  void offset(SeqRef& ref) {
    if (!at("+") && !at("-")) return;
    const bool minus = next().text == "-";
    if (peek().kind != Tok::kNumber) {
      if (peek().kind == Tok::kName || at("(")) non_affine();
      fail("an integer offset");
    }
    const std::int64_t v = integer(next());
    ref.offset = minus ? -v : v;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const SequenceEnv& env_;
};

}  // namespace

Identity parse_identity(std::string_view text, const SequenceEnv& env) {
  return Parser(text, env).identity();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool is_additive(const Expr& e) { return e.kind == ExprKind::kAdd || e.kind == ExprKind::kSub; }

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + pretty_print(e) + ")" : pretty_print(e);
}

std::string index_text(const SeqRef& r) {
  if (r.multiplier == 0) return std::to_string(r.offset);
  std::string s = r.multiplier == 1 ? "n" : std::to_string(r.multiplier) + "*n";
  if (r.offset > 0) s += "+" + std::to_string(r.offset);
  if (r.offset < 0) s += "-" + std::to_string(-r.offset);
  return s;
}

}  // namespace

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kConst:
      return e.value.to_string();
    case ExprKind::kSeqRef:
      return e.ref.name + "[" + index_text(e.ref) + "]";
    case ExprKind::kAdd:
    case ExprKind::kSub:
      return pretty_print(*e.children[0]) + (e.kind == ExprKind::kAdd ? " + " : " - ") +
             wrap(*e.children[1], is_additive(*e.children[1]));
    case ExprKind::kMul:
      return wrap(*e.children[0], is_additive(*e.children[0])) + "*" +
             wrap(*e.children[1], is_additive(*e.children[1]) || e.children[1]->kind == ExprKind::kMul);
    case ExprKind::kPow: {
      const Expr& b = *e.children[0];
      const bool atomic = b.kind == ExprKind::kConst || b.kind == ExprKind::kSeqRef || b.kind == ExprKind::kDet;
      return wrap(b, !atomic) + "^" + std::to_string(e.exponent);
    }
    case ExprKind::kDet: {
      std::string s = "det[";
      for (std::size_t r = 0; r < e.dim; ++r) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < e.dim; ++c)
          s += (c ? ", " : "") + pretty_print(*e.children[r * e.dim + c]);
        s += "]";
      }
      return s + "]";
    }
  }
  return {};
}

std::string pretty_print(const Identity& id) {
  return pretty_print(*id.left) + " = " + pretty_print(*id.right);
}

// ---------------------------------------------------------------------------
// Evaluation

Rational determinant(std::vector<Rational> a, std::size_t dim) {
  if (a.size() != dim * dim) throw std::invalid_argument("determinant: not square");
  Rational det(1);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot * dim + col].is_zero()) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < dim; ++c) std::swap(a[pivot * dim + c], a[col * dim + c]);
      det = -det;
    }
    const Rational piv = a[col * dim + col];
    det *= piv;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (a[r * dim + col].is_zero()) continue;
      const Rational f = a[r * dim + col] / piv;
      for (std::size_t c = col; c < dim; ++c) a[r * dim + c] -= f * a[col * dim + c];
    }
  }
  return det;
}

Evaluator::Evaluator(const SequenceEnv& env) {
  for (const auto& [name, def] : env.entries()) caches_.emplace(name, SequenceCache(def));
}

Rational Evaluator::eval(const Expr& e, std::int64_t n) {
  switch (e.kind) {
    case ExprKind::kConst:
      return e.value;
    case ExprKind::kSeqRef: {
      auto it = caches_.find(e.ref.name);
      if (it == caches_.end()) throw UnknownSequence("unknown sequence '" + e.ref.name + "'");
      return it->second(e.ref.multiplier * n + e.ref.offset);
    }
    case ExprKind::kAdd:
      return eval(*e.children[0], n) + eval(*e.children[1], n);
    case ExprKind::kSub:
      return eval(*e.children[0], n) - eval(*e.children[1], n);
    case ExprKind::kMul:
      return eval(*e.children[0], n) * eval(*e.children[1], n);
    case ExprKind::kPow:
      return pow(eval(*e.children[0], n), e.exponent);
    case ExprKind::kDet: {
      std::vector<Rational> vals;
      vals.reserve(e.children.size());
      for (const auto& c : e.children) vals.push_back(eval(*c, n));
      return determinant(std::move(vals), e.dim);
    }
  }
  return {};
}

}  // namespace lucas
