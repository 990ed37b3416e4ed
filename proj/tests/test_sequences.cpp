#include <gtest/gtest.h>

#include "lucas/errors.hpp"
#include "lucas/sequences.hpp"
#include "test_support.hpp"

using namespace lucas;
using lucas::testing::Gen;
using lucas::testing::ints;

namespace {

const SequenceDef kFib = SequenceDef::u_sequence(1, -1);

SequenceDef random_def(Gen& gen, bool nonzero_q) {
  return {gen.rational(), nonzero_q ? gen.nonzero_rational() : gen.rational(), gen.rational(),
          gen.rational()};
}

}  // namespace

TEST(Term, Fibonacci) {
  EXPECT_EQ(term(kFib, 10), Rational(55));
  EXPECT_EQ(term(kFib, -1), Rational(1));
  EXPECT_EQ(term(kFib, -2), Rational(-1));
}

TEST(Term, DegenerateExample) {
  // u_3 vanishes for p = 2, q = 4
  EXPECT_EQ(u_term(2, 4, 2), Rational(2));
  EXPECT_EQ(u_term(2, 4, 3), Rational(0));
  EXPECT_EQ(u_term(2, 4, 4), Rational(-8));
}

TEST(Term, BackwardUndefinedWhenQIsZero) {
  EXPECT_THROW(u_term(1, 0, -1), BackwardUndefined);
  EXPECT_NO_THROW(u_term(1, 0, 5));
  SequenceCache cache(SequenceDef::u_sequence(3, 0));
  EXPECT_THROW(cache(-1), BackwardUndefined);
}

TEST(UTerm, PeriodSixWhenPEqualsQEqualsOne) {
  EXPECT_EQ(window(SequenceDef::u_sequence(1, 1), 0, 7).values, ints({0, 1, 1, 0, -1, -1, 0, 1}));
}

TEST(UTerm, IdentityForPTwoQOne) {
  for (long r = 0; r <= 30; ++r) EXPECT_EQ(u_term(2, 1, r), Rational(r));
}

TEST(UTerm, InitialValues) {
  Gen gen(11);
  for (int i = 0; i < 20; ++i) {
    Rational p = gen.rational(), q = gen.rational();
    EXPECT_EQ(u_term(p, q, 0), Rational(0));
    EXPECT_EQ(u_term(p, q, 1), Rational(1));
  }
}

TEST(Companion, KnownValues) {
  EXPECT_EQ(companion_term(Rational(7, 3), 5, 0), Rational(2));
  EXPECT_EQ(companion_term(Rational(7, 3), 5, 1), Rational(7, 3));
  EXPECT_EQ(window(SequenceDef::companion(1, -1), 0, 5).values, ints({2, 1, 3, 4, 7, 11}));
  EXPECT_EQ(companion_term(2, 4, 2), Rational(-4));
  EXPECT_EQ(companion_term(2, 4, 3), Rational(-16));
}

TEST(Companion, RelatesToUSequence) {
  Gen gen(12);
  for (int i = 0; i < 30; ++i) {
    Rational p = gen.rational(), q = gen.nonzero_rational();
    for (std::int64_t r = -6; r <= 12; ++r)
      EXPECT_EQ(companion_term(p, q, r), 2 * u_term(p, q, r + 1) - p * u_term(p, q, r));
  }
}

TEST(IndexAdd, Examples) {
  EXPECT_EQ(index_add(kFib, 3, 4), Rational(21));
  Gen gen(13);
  SequenceDef d = random_def(gen, true);
  EXPECT_EQ(index_add(d, 0, 5), term(d, 6));
  // u_3 = 0 for p = 2, q = 4: x_{r+3} collapses to u_3 x_{r+1} - q u_2 x_r
  EXPECT_EQ(index_add(SequenceDef::u_sequence(2, 4), 2, 1), Rational(-8));
}

TEST(IndexAdd, HoldsOnGridForRandomDefs) {
  Gen gen(14);
  for (int i = 0; i < 10; ++i) {
    SequenceDef d = random_def(gen, true);
    for (std::int64_t m = -10; m <= 10; ++m)
      for (std::int64_t r = -10; r <= 10; ++r) EXPECT_NO_THROW(index_add(d, m, r));
  }
}

TEST(Window, SatisfiesRecurrence) {
  Gen gen(15);
  for (int i = 0; i < 50; ++i) {
    SequenceDef d = random_def(gen, true);
    SequenceWindow w = window(d, -8, 20);
    for (std::size_t j = 0; j + 2 < w.values.size(); ++j)
      EXPECT_TRUE((w.values[j + 2] - d.p * w.values[j + 1] + d.q * w.values[j]).is_zero());
    EXPECT_EQ(w.at(0), d.x0);
    EXPECT_EQ(w.at(1), d.x1);
  }
}

TEST(Term, ForwardBackwardRoundTrip) {
  Gen gen(16);
  for (int i = 0; i < 50; ++i) {
    SequenceDef d = random_def(gen, true);
    const std::int64_t r = gen.integer(2, 25);
    // restart the sequence at (r, r+1) and walk back to index 0
    SequenceDef shifted{d.p, d.q, term(d, r), term(d, r + 1)};
    EXPECT_EQ(term(shifted, -r), d.x0);
    EXPECT_EQ(term(shifted, 1 - r), d.x1);
  }
}

TEST(SequenceCache, MatchesTerm) {
  Gen gen(17);
  SequenceDef d = random_def(gen, true);
  SequenceCache cache(d);
  for (std::int64_t r : {5, -3, 12, 0, -9, 1, 30})
    EXPECT_EQ(cache(r), term(d, r)) << r;
}
