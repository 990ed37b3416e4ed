#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lucas/errors.hpp"
#include "lucas/identity.hpp"
#include "test_support.hpp"

using namespace lucas;
using lucas::testing::Gen;

namespace {

const SequenceEnv& fib_env() {
  static const SequenceEnv env = SequenceEnv::parse("F 1 -1 0 1\nL 1 -1 2 1\n");
  return env;
}

const char* const kDet3 =
    "det[[F[n],F[n+1],F[n+2]],[F[n+2],F[n],F[n+1]],[F[n+1],F[n+2],F[n]]] = 2*(F[n]^3 + F[n+1]^3)";

ExprPtr random_expr(Gen& gen, int depth) {
  const auto pick = depth <= 0 ? gen.integer(0, 1) : gen.integer(0, 6);
  switch (pick) {
    case 0: {
      const long num = static_cast<long>(gen.integer(0, 9));
      return make_const(Rational(num, static_cast<long>(gen.integer(1, 4))));
    }
    case 1:
      return make_ref({gen.coin() ? "F" : "L", gen.integer(0, 3), gen.integer(-3, 3)});
    case 2:
      return make_binary(ExprKind::kAdd, random_expr(gen, depth - 1), random_expr(gen, depth - 1));
    case 3:
      return make_binary(ExprKind::kSub, random_expr(gen, depth - 1), random_expr(gen, depth - 1));
    case 4:
      return make_binary(ExprKind::kMul, random_expr(gen, depth - 1), random_expr(gen, depth - 1));
    case 5:
      return make_pow(random_expr(gen, depth - 1), static_cast<std::uint32_t>(gen.integer(1, 3)));
    default: {
      const auto dim = static_cast<std::size_t>(gen.integer(1, 3));
      std::vector<ExprPtr> entries;
      for (std::size_t i = 0; i < dim * dim; ++i) entries.push_back(random_expr(gen, depth - 2));
      return make_det(dim, std::move(entries));
    }
  }
}

// Total degree of every monomial of the formal expansion, listed one by one
// without cancellation.
std::vector<std::int64_t> expand(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kConst:
      return {0};
    case ExprKind::kSeqRef:
      return {e.ref.multiplier};
    case ExprKind::kAdd:
    case ExprKind::kSub: {
      auto a = expand(*e.children[0]), b = expand(*e.children[1]);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case ExprKind::kMul: {
      std::vector<std::int64_t> out;
      for (auto x : expand(*e.children[0]))
        for (auto y : expand(*e.children[1])) out.push_back(x + y);
      return out;
    }
    case ExprKind::kPow: {
      const auto base = expand(*e.children[0]);
      std::vector<std::int64_t> out{0};
      for (std::uint32_t i = 0; i < e.exponent; ++i) {
        std::vector<std::int64_t> next;
        for (auto x : out)
          for (auto y : base) next.push_back(x + y);
        out = std::move(next);
      }
      return out;
    }
    case ExprKind::kDet: {
      std::vector<std::size_t> perm(e.dim);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::int64_t> out;
      do {
        std::vector<std::int64_t> mono{0};
        for (std::size_t r = 0; r < e.dim; ++r) {
          std::vector<std::int64_t> next;
          for (auto x : mono)
            for (auto y : expand(*e.children[r * e.dim + perm[r]])) next.push_back(x + y);
          mono = std::move(next);
        }
        out.insert(out.end(), mono.begin(), mono.end());
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
  }
  return {};
}

}  // namespace

TEST(Parse, DefiningRecurrence) {
  const Identity id = parse_identity("F[n+2] = F[n+1] + F[n]", fib_env());
  EXPECT_EQ(id.left->degrees, (std::set<std::int64_t>{1}));
  EXPECT_EQ(id.right->degrees, (std::set<std::int64_t>{1}));
  ASSERT_EQ(id.left->kind, ExprKind::kSeqRef);
  EXPECT_EQ(id.left->ref, (SeqRef{"F", 1, 2}));
}

TEST(Parse, DeterminantIdentity) {
  const Identity id = parse_identity(kDet3, fib_env());
  EXPECT_EQ(id.left->kind, ExprKind::kDet);
  EXPECT_EQ(id.left->dim, 3u);
  EXPECT_EQ(id.left->degrees, (std::set<std::int64_t>{3}));
  EXPECT_EQ(id.right->degrees, (std::set<std::int64_t>{3}));
}

TEST(Parse, MultiplierLeaf) {
  const Identity id = parse_identity("F[2n+1] = F[n+1]^2 + F[n]^2", fib_env());
  EXPECT_EQ(id.left->ref, (SeqRef{"F", 2, 1}));
  EXPECT_EQ(id.degrees(), (std::set<std::int64_t>{2}));
  EXPECT_EQ(parse_identity("F[3*n-2] = F[4]", fib_env()).left->ref, (SeqRef{"F", 3, -2}));
  EXPECT_EQ(parse_identity("F[-3] = 2", fib_env()).left->ref, (SeqRef{"F", 0, -3}));
  EXPECT_EQ(parse_identity("F[n] + 1 = F[n]", fib_env()).degrees(), (std::set<std::int64_t>{0, 1}));
}

TEST(Parse, WhitespaceInsensitive) {
  const Identity a = parse_identity("F[2n+1]=F[n+1]^2+F[n]^2", fib_env());
  const Identity b = parse_identity("  F [ 2 n + 1 ] =\tF[n + 1] ^ 2 + F[ n ]^2 ", fib_env());
  EXPECT_TRUE(same_identity(a, b));
}

TEST(Parse, SyntaxErrors) {
  for (const char* bad : {"F[n] =", "F[n] F[n]", "= F[n]", "F[n] = (F[n]", "F[n] = det[[F[n], 1]]",
                          "F[n] = 1/0", "F[n] = F[n] = F[n]", "F[n] = $", "F[n = 1"}) {
    EXPECT_THROW(parse_identity(bad, fib_env()), SyntaxError) << bad;
  }
  try {
    parse_identity("F[n] = F[n] +", fib_env());
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 13u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parse, OtherErrors) {
  EXPECT_THROW(parse_identity("G[n] = F[n]", fib_env()), UnknownSequence);
  for (const char* bad : {"F[n*n] = 1", "F[n^2] = 1", "F[F[n]] = 1", "F[n+m] = 1", "F[-2n] = 1"})
    EXPECT_THROW(parse_identity(bad, fib_env()), NonAffineIndex) << bad;
  for (const char* bad : {"F[n]^0 = 1", "F[n]^1/2 = 1", "F[n]^F[n] = 1", "F[n]^1001 = 1"})
    EXPECT_THROW(parse_identity(bad, fib_env()), UnsupportedExponent) << bad;
}

TEST(PrettyPrint, Canonical) {
  EXPECT_EQ(pretty_print(parse_identity("F[2n+1]=F[n+1]^2+F[n]^2", fib_env())),
            "F[2*n+1] = F[n+1]^2 + F[n]^2");
  EXPECT_EQ(pretty_print(parse_identity("det[[F[n],1],[0,L[n-1]]] = 2*(F[n] - (L[n] - 1))", fib_env())),
            "det[[F[n], 1], [0, L[n-1]]] = 2*(F[n] - (L[n] - 1))");
}

TEST(PrettyPrint, RoundTripsRandomTrees) {
  Gen gen(51);
  for (int i = 0; i < 300; ++i) {
    Identity id{random_expr(gen, 4), random_expr(gen, 4)};
    const std::string text = pretty_print(id);
    const Identity back = parse_identity(text, fib_env());
    EXPECT_TRUE(same_identity(id, back)) << text;
    EXPECT_EQ(pretty_print(back), text);
  }
}

TEST(Degrees, MatchFormalExpansion) {
  Gen gen(52);
  for (int i = 0; i < 300; ++i) {
    const ExprPtr e = random_expr(gen, 3);
    const auto monomials = expand(*e);
    EXPECT_EQ(e->degrees, std::set<std::int64_t>(monomials.begin(), monomials.end())) << pretty_print(*e);
  }
}

TEST(Evaluate, DeterminantMatchesPermutationExpansion) {
  Gen gen(53);
  Evaluator ev(fib_env());
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(gen.integer(2, 3));
    std::vector<ExprPtr> entries;
    for (std::size_t j = 0; j < dim * dim; ++j)
      entries.push_back(make_ref({gen.coin() ? "F" : "L", gen.integer(0, 2), gen.integer(-4, 4)}));
    const ExprPtr det = make_det(dim, entries);
    const std::int64_t n = gen.integer(-6, 10);
    std::vector<Rational> values;
    for (const auto& x : entries) values.push_back(ev.eval(*x, n));
    EXPECT_EQ(ev.eval(*det, n), lucas::testing::leibniz_det(values, dim));
    EXPECT_EQ(determinant(values, dim), lucas::testing::leibniz_det(values, dim));
  }
}

TEST(Evaluate, Values) {
  Evaluator ev(fib_env());
  const Identity id = parse_identity(kDet3, fib_env());
  EXPECT_EQ(ev.eval(*id.left, 0), Rational(2));
  EXPECT_EQ(ev.eval(*id.right, 0), Rational(2));
  EXPECT_EQ(ev.eval(*parse_identity("F[2n+1] = 1/2*L[n]^2", fib_env()).right, 3), Rational(8));
}

TEST(Env, ParseAndErrors) {
  const auto env = SequenceEnv::parse("# pair\nF 1 -1 0 1  # fib\n\nL 1 -1 2 1\n");
  EXPECT_EQ(env.entries().size(), 2u);
  EXPECT_EQ(env.p(), Rational(1));
  EXPECT_EQ(env.q(), Rational(-1));
  ASSERT_NE(env.find("L"), nullptr);
  EXPECT_EQ(env.find("L")->x0, Rational(2));
  EXPECT_EQ(env.find("G"), nullptr);

  EXPECT_THROW(SequenceEnv::parse(""), std::invalid_argument);
  EXPECT_THROW(SequenceEnv::parse("F 1 -1 0"), ParseError);
  EXPECT_THROW(SequenceEnv::parse("det 1 -1 0 1"), ParseError);
  EXPECT_THROW(SequenceEnv::parse("n 1 -1 0 1"), ParseError);
  EXPECT_THROW(SequenceEnv::parse("9F 1 -1 0 1"), ParseError);
  EXPECT_THROW(SequenceEnv::parse("F 1 -1 0 1\nF 1 -1 2 1"), ParseError);
  EXPECT_THROW(SequenceEnv::parse("F 1 -1 0 1\nU 1 1 0 1"), HeterogeneousParams);
  EXPECT_THROW(SequenceEnv::parse("F 1 x 0 1"), InvalidRational);
}
