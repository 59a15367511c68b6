#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace splinereg;

namespace {

Monomial m(int x, int y, int z) { return {x, y, z}; }

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(StaircaseClosedForm, R8S3) {
  const auto st = staircase_closed_form(8, 3);
  EXPECT_EQ(st.lambda, (std::vector<int>{13, 11, 10, 8, 7, 5, 4, 2, 1}));
  const MonomialIdeal expected{m(0, 9, 0),  m(0, 8, 1),  m(0, 7, 2), m(0, 6, 4),  m(0, 5, 5),
                               m(0, 4, 7),  m(0, 3, 8),  m(0, 2, 10), m(0, 1, 11), m(0, 0, 13)};
  EXPECT_EQ(staircase_ideal(st, Var::Y), expected);
}

TEST(StaircaseClosedForm, R0S2) {
  const auto st = staircase_closed_form(0, 2);
  EXPECT_EQ(st.lambda, (std::vector<int>{1}));
  EXPECT_EQ(staircase_ideal(st), (MonomialIdeal{m(1, 0, 0), m(0, 0, 1)}));
}

TEST(StaircaseClosedForm, R8S2MatchesOracle) {
  const MonomialIdeal expected{m(9, 0, 0), m(8, 0, 1), m(7, 0, 3),  m(6, 0, 5),  m(5, 0, 7),
                               m(4, 0, 9), m(3, 0, 11), m(2, 0, 13), m(1, 0, 15), m(0, 0, 17)};
  EXPECT_EQ(staircase_ideal(staircase_closed_form(8, 2)), expected);
  EXPECT_EQ(initial_ideal_oracle(8, q({0, 1}), 19), expected);
}

TEST(StaircaseClosedForm, RejectsSingleSlope) {
  try {
    staircase_closed_form(3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSlopeCount);
  }
}

TEST(InitialIdealOracle, Examples) {
  EXPECT_EQ(initial_ideal_oracle(8, q({0, 1, 2}), 15), staircase_ideal(staircase_closed_form(8, 3)));
  EXPECT_EQ(initial_ideal_oracle(1, q({0}), 4), MonomialIdeal{m(2, 0, 0)});
  EXPECT_EQ(initial_ideal_oracle(2, q({0, 1, -1}), 6), (MonomialIdeal{m(3, 0, 0), m(2, 0, 1), m(1, 0, 2), m(0, 0, 4)}));
}

TEST(InitialIdealOracle, DuplicateSlope) {
  try {
    initial_ideal_oracle(2, {Rational(1, 2), Rational(2, 4)}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateSlope);
  }
}

TEST(ColonStaircase, Examples) {
  const auto c82 = colon_staircase(staircase_closed_form(8, 2));
  EXPECT_EQ(c82.i0, 4);
  EXPECT_EQ(colon_ideal(c82), (MonomialIdeal{m(4, 0, 0), m(3, 0, 2), m(2, 0, 4), m(1, 0, 6), m(0, 0, 8)}));
  const auto c83 = colon_staircase(staircase_closed_form(8, 3));
  EXPECT_EQ(c83.i0, 3);
  EXPECT_EQ(colon_ideal(c83, Var::Y), (MonomialIdeal{m(0, 3, 0), m(0, 2, 1), m(0, 1, 2), m(0, 0, 4)}));
  const auto c02 = colon_staircase(staircase_closed_form(0, 2));
  EXPECT_EQ(c02.i0, 0);
  EXPECT_TRUE(colon_ideal(c02).is_unit());
}

TEST(BuildQ, Example348) {
  const auto qd = build_q(3, 4, 8);
  EXPECT_EQ(qd.in_q, (MonomialIdeal{m(4, 0, 0), m(3, 0, 2), m(0, 3, 0), m(0, 2, 1), m(0, 1, 2), m(0, 0, 4)}));
  EXPECT_EQ(qd.i0(), 4);
  EXPECT_EQ(qd.j0(), 3);
  EXPECT_EQ(qd.l0, 3);
}

TEST(BuildQ, Example332) {
  EXPECT_EQ(build_q(3, 3, 2).in_q, (MonomialIdeal{m(1, 0, 0), m(0, 1, 0), m(0, 0, 2)}));
}

TEST(BuildQ, TrivialAtRZero) { EXPECT_TRUE(build_q(5, 5, 0).trivial()); }

TEST(BuildQ, Errors) {
  try {
    build_q(2, 4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSlopeCount);
  }
  EXPECT_THROW(build_q(5, 4, 3), Error);
}

TEST(SumInitialOracle, Examples) {
  EXPECT_EQ(sum_initial_oracle(2, q({0, 1}), q({0, 1}), 6), build_q(3, 3, 2).in_q);
  EXPECT_EQ(sum_initial_oracle(8, q({0, 1}), q({0, 1, 2}), 12), build_q(3, 4, 8).in_q);
  EXPECT_TRUE(sum_initial_oracle(0, q({0, 3}), q({0, 5, 7}), 4).is_unit());
}

TEST(PowersFormsProperties, StaircaseShape) {
  for (int s = 2; s <= 6; ++s)
    for (int r = 0; r <= 12; ++r) {
      const auto st = staircase_closed_form(r, s);
      EXPECT_EQ(st.lambda[static_cast<std::size_t>(r)], 1);
      EXPECT_EQ(st.lambda[0], r + 1 + r / (s - 1));
      for (int i = 1; i <= r; ++i) {
        const int step = st.lambda[i - 1] - st.lambda[i];
        EXPECT_TRUE(step == 1 || step == 2);
      }
      const auto cs = colon_staircase(st);
      EXPECT_EQ(cs.i0, (r + 1) / s);
      EXPECT_EQ(cs.lambda_prime.back(), 0);
      for (int i = 1; i <= cs.i0; ++i) EXPECT_LT(cs.lambda_prime[i], cs.lambda_prime[i - 1]);
      EXPECT_EQ(colon_ideal(cs), colon_by_monomial(staircase_ideal(st), m(0, 0, r + 1)));
    }
}

TEST(PowersFormsProperties, OracleMatchesClosedFormOnRandomSlopes) {
  std::mt19937_64 rng(5);
  for (int s = 2; s <= 4; ++s)
    for (int r = 0; r <= 7; ++r) {
      const auto st = staircase_closed_form(r, s);
      const auto slopes = fixtures::random_slopes(rng, s);
      EXPECT_EQ(initial_ideal_oracle(r, slopes, st.lambda[0] + 2, Var::Y), staircase_ideal(st, Var::Y))
          << "r=" << r << " s=" << s;
      EXPECT_EQ(colon_initial_oracle(r, slopes, st.lambda[0] + 2), colon_ideal(colon_staircase(st)));
    }
}

TEST(PowersFormsProperties, BuildQStructure) {
  for (int a = 3; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      for (int r = 0; r <= 12; ++r) {
        const auto qd = build_q(a, b, r);
        if (qd.trivial()) {
          EXPECT_EQ(qd.j0(), 0);
          continue;
        }
        std::vector<Monomial> expected;
        for (int i = qd.l0; i <= qd.i0(); ++i)
          if (i > 0) expected.push_back(m(i, 0, qd.lambda_prime()[i]));
        for (int j = 1; j <= qd.j0(); ++j) expected.push_back(m(0, j, qd.eta_prime()[j]));
        expected.push_back(m(0, 0, qd.eta_prime()[0]));
        EXPECT_EQ(qd.in_q, MonomialIdeal(expected)) << a << " " << b << " " << r;
        EXPECT_EQ(qd.in_q.size(), expected.size());
        EXPECT_LE(qd.eta_prime()[0], qd.lambda_prime()[0]);

        // l0 > r(b-a)/((a-1)(b-2)) - (a-3)/(a-1)
        const Rational bound = Rational(r * (b - a), (a - 1) * (b - 2)) - Rational(a - 3, a - 1);
        EXPECT_GT(Rational(qd.l0), bound) << a << " " << b << " " << r;
      }
}

TEST(PowersFormsProperties, SumIdentityOnRandomSlopes) {
  std::mt19937_64 rng(9);
  for (int a = 3; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int r = 0; r <= 6; ++r) {
        const auto qd = build_q(a, b, r);
        const auto s1 = fixtures::random_slopes(rng, a - 1), s2 = fixtures::random_slopes(rng, b - 1);
        EXPECT_EQ(sum_initial_oracle(r, s1, s2, qd.stair1.lambda[0] + 2), qd.in_q) << a << " " << b << " " << r;
      }
}
