#include "realgw/multicover.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace realgw {
namespace {

constexpr TransformConvention kBoth[] = {TransformConvention::Sinh, TransformConvention::Sin};

InvariantVector vec(std::int64_t c1b, int max_genus, std::map<int, Rational> entries) {
  return InvariantVector{std::move(entries), c1b, max_genus};
}

TEST(MulticoverCoefficient, Examples) {
  EXPECT_EQ(multicover_coefficient(1, 0, 0, TransformConvention::Sinh), Rational(1));
  EXPECT_EQ(multicover_coefficient(2, 0, 1, TransformConvention::Sinh), Rational(1, 24));
  EXPECT_EQ(multicover_coefficient(2, 0, 1, TransformConvention::Sin), Rational(-1, 24));
  EXPECT_EQ(multicover_coefficient(0, 0, 1, TransformConvention::Sinh), Rational(-1, 24));
}

TEST(MulticoverCoefficient, ExponentIsData) {
  EXPECT_EQ(multicover_exponent(0, 0), -1);
  EXPECT_EQ(multicover_exponent(3, -4), 0);
  EXPECT_EQ(multicover_exponent(2, 8), 5);
  EXPECT_THROW(multicover_exponent(1, 3), DomainError);
}

TEST(MulticoverCoefficient, Unitriangular) {
  for (auto conv : kBoth) {
    for (int h = 0; h <= 10; ++h) {
      for (int c1b = -12; c1b <= 12; c1b += 2) {
        EXPECT_EQ(multicover_coefficient(h, c1b, 0, conv), Rational(1));
      }
    }
  }
}

TEST(MulticoverCoefficient, ConventionRelation) {
  for (int h = 0; h <= 6; ++h) {
    for (int c1b : {-4, -2, 0, 2, 4, 8}) {
      for (int g = 0; g <= 8; ++g) {
        Rational sinh = multicover_coefficient(h, c1b, g, TransformConvention::Sinh);
        Rational sin = multicover_coefficient(h, c1b, g, TransformConvention::Sin);
        EXPECT_EQ(sin, g % 2 == 0 ? sinh : -sinh) << h << " " << c1b << " " << g;
      }
    }
  }
}

TEST(MulticoverCoefficient, MatchesBruteForceThroughT24) {
  for (int h = 0; h <= 5; ++h) {
    for (int c1b : {-6, -2, 0, 2, 6}) {
      for (auto conv : kBoth) {
        bool sin = conv == TransformConvention::Sin;
        auto expected = oracle::power(oracle::half_angle(24, sin), h - 1 + c1b / 2);
        for (int g = 0; g <= 12; ++g) {
          EXPECT_EQ(multicover_coefficient(h, c1b, g, conv).to_string(),
                    oracle::text(expected[static_cast<std::size_t>(2 * g)]))
              << "h=" << h << " c1B=" << c1b << " g=" << g;
        }
      }
    }
  }
}

TEST(CoefficientTable, AgreesWithDirectCoefficient) {
  CoefficientTable table(2, 10, TransformConvention::Sin);
  for (int g = 0; g <= 10; ++g) {
    for (int h = g % 2; h <= g; h += 2) {
      EXPECT_EQ(table.link(h, g), multicover_coefficient(h, 2, (g - h) / 2, TransformConvention::Sin));
    }
  }
}

TEST(ForwardTransform, Examples) {
  auto conv = TransformConvention::Sinh;
  EXPECT_EQ(forward_transform(vec(0, 0, {{0, Rational(1)}}), conv), vec(0, 0, {{0, Rational(1)}}));

  auto gw = forward_transform(vec(0, 2, {{0, Rational(0)}, {1, Rational(1)}, {2, Rational(0)}}), conv);
  EXPECT_EQ(gw.at(1), Rational(1));
  EXPECT_EQ(gw.at(0), Rational(0));

  gw = forward_transform(vec(0, 2, {{0, Rational(1)}, {2, Rational(0)}}), conv);
  EXPECT_EQ(gw.at(2), multicover_coefficient(0, 0, 1, conv));
  EXPECT_EQ(gw.at(2), Rational(-1, 24));
  EXPECT_EQ(gw.c1B, 0);
  EXPECT_EQ(gw.max_genus, 2);
}

// Direct evaluation of the defining sum against the oracle coefficients.
TEST(ForwardTransform, MatchesDefiningSum) {
  std::mt19937_64 rng(3);
  for (auto conv : kBoth) {
    for (int c1b : {-2, 0, 4}) {
      const int top = 8;
      InvariantVector e = vec(c1b, top, {});
      for (int h = 0; h <= top; ++h) e.entries[h] = Rational(static_cast<int>(rng() % 21) - 10);
      auto gw = forward_transform(e, conv);
      for (int g = 0; g <= top; ++g) {
        oracle::Q sum = 0;
        for (int h = g % 2; h <= g; h += 2) {
          oracle::Q eh(e.at(h).numerator(), e.at(h).denominator());
          sum += oracle::coefficient(h, c1b, (g - h) / 2, conv == TransformConvention::Sin) * eh;
        }
        EXPECT_EQ(gw.at(g).to_string(), oracle::text(sum));
      }
    }
  }
}

TEST(ForwardTransform, ParityDecoupling) {
  InvariantVector e = vec(2, 9, {});
  for (int h = 0; h <= 9; ++h) e.entries[h] = Rational(h + 1, 3);
  auto base = forward_transform(e, TransformConvention::Sinh);
  for (int bump = 0; bump <= 9; ++bump) {
    InvariantVector changed = e;
    changed.entries[bump] = changed.entries[bump] + Rational(5, 7);
    auto gw = forward_transform(changed, TransformConvention::Sinh);
    for (int g = 0; g <= 9; ++g) {
      if ((g - bump) % 2 != 0 || g < bump) EXPECT_EQ(gw.at(g), base.at(g)) << bump << " " << g;
    }
  }
}

TEST(InvertTransform, Examples) {
  auto conv = TransformConvention::Sinh;
  EXPECT_EQ(invert_transform(vec(0, 0, {{0, Rational(1)}}), conv), vec(0, 0, {{0, Rational(1)}}));
  auto e = invert_transform(vec(0, 2, {{0, Rational(1)}, {2, Rational(-1, 24)}}), conv);
  EXPECT_EQ(e, vec(0, 2, {{0, Rational(1)}, {2, Rational(0)}}));
}

TEST(InvertTransform, RoundTripBothDirections) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 9);
  for (auto conv : kBoth) {
    for (int top = 0; top <= 12; ++top) {
      for (int c1b : {-6, -2, 0, 2, 10}) {
        InvariantVector e = vec(c1b, top, {});
        for (int h = 0; h <= top; ++h) {
          if (rng() % 4 != 0) e.entries[h] = Rational(num(rng), den(rng));
        }
        EXPECT_EQ(invert_transform(forward_transform(e, conv), conv), e);
        EXPECT_EQ(forward_transform(invert_transform(e, conv), conv), e);
      }
    }
  }
}

TEST(IntegralityCheck, Examples) {
  EXPECT_TRUE(integrality_check(vec(0, 1, {{0, Rational(3)}, {1, Rational(-2)}})).empty());
  auto v = integrality_check(vec(0, 0, {{0, Rational(1, 2)}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].first, 0);
  EXPECT_EQ(v[0].second, Rational(1, 2));

  InvariantVector integer = vec(4, 6, {});
  for (int h = 0; h <= 6; ++h) integer.entries[h] = Rational(h * h - 7);
  auto back = invert_transform(forward_transform(integer, TransformConvention::Sin), TransformConvention::Sin);
  EXPECT_TRUE(integrality_check(back).empty());
}

TEST(InvariantVector, Validation) {
  EXPECT_THROW(forward_transform(vec(1, 0, {}), TransformConvention::Sinh), DomainError);
  EXPECT_THROW(forward_transform(vec(0, 1, {{2, Rational(1)}}), TransformConvention::Sinh),
               DomainError);
  EXPECT_THROW(parse_convention("cosh"), DomainError);
  EXPECT_EQ(parse_convention("sin"), TransformConvention::Sin);
  EXPECT_EQ(to_string(TransformConvention::Sinh), "sinh");
}

}  // namespace
}  // namespace realgw
