#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "hilzeta/field.hpp"
#include "hilzeta/surface_config.hpp"
#include "oracles.hpp"

using namespace hilzeta;

TEST(Field, SquareRootHelpers) {
  EXPECT_EQ(detail::isqrt(0), 0);
  EXPECT_EQ(detail::isqrt(99), 9);
  EXPECT_EQ(detail::isqrt(100), 10);
  EXPECT_TRUE(detail::is_square(49));
  EXPECT_FALSE(detail::is_square(50));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
}

TEST(Field, ElementArithmetic) {
  const auto phi = AlgebraicInteger{1, 1, 5};
  EXPECT_TRUE(phi.well_formed());
  EXPECT_EQ(phi.norm(), -1);
  EXPECT_EQ(phi.trace(), 1);
  const auto sq = phi * phi;
  EXPECT_EQ(sq, phi + AlgebraicInteger::integer(1, 5));  // phi^2 = phi + 1
  EXPECT_NEAR(phi.value(), (1.0 + std::sqrt(5.0)) / 2.0, 1e-15);
  EXPECT_EQ(galois_conjugate(phi).y, -1);
  const auto q = divide_exact(sq, phi);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, phi);
  EXPECT_FALSE(divide_exact(AlgebraicInteger::integer(1, 5), AlgebraicInteger::integer(2, 5)).has_value());
}

TEST(Field, FundamentalUnitMatchesContinuedFractionOracle) {
  for (std::int64_t d = 2; d < 100; ++d) {
    if (!is_squarefree(d)) continue;
    const auto F = make_field(d);
    const auto [x, y] = oracle::cf_unit(d);
    SCOPED_TRACE("d = " + std::to_string(d));
    EXPECT_EQ(F.eps.x, x);
    EXPECT_EQ(F.eps.y, y);
    const auto n = F.eps.norm();
    EXPECT_TRUE(n == 1 || n == -1);
    EXPECT_GT(F.eps_value(), 1.0);
  }
}

TEST(Field, SmallUnitsByHand) {
  EXPECT_EQ(make_field(5).eps, (AlgebraicInteger{1, 1, 5}));
  EXPECT_EQ(make_field(2).eps, (AlgebraicInteger{2, 1, 8}));    // 1 + sqrt 2
  EXPECT_EQ(make_field(13).eps, (AlgebraicInteger{3, 1, 13}));  // (3 + sqrt 13)/2
  EXPECT_NEAR(make_field(5).log_eps, 0.48121182505960347, 1e-15);
}

TEST(Field, ZetaMinusOneExactValues) {
  EXPECT_EQ(zeta_K_minus1(5), Rational(1, 30));
  EXPECT_EQ(zeta_K_minus1(8), Rational(1, 12));
  EXPECT_EQ(zeta_K_minus1(13), Rational(1, 6));
}

TEST(Field, ZetaMinusOneMatchesDivisorOracle) {
  for (std::int64_t D : {5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 41, 44, 53, 56, 57, 61, 73, 76, 77, 88, 89, 92, 93, 97}) {
    SCOPED_TRACE(D);
    EXPECT_EQ(zeta_K_minus1(D), oracle::divisor_sum_oracle(D));
  }
}

TEST(Field, RejectsBadD) {
  EXPECT_THROW(make_field(1), ValidationError);
  EXPECT_THROW(make_field(8), ValidationError);
  EXPECT_THROW(make_field(-3), ValidationError);
}

TEST(Surface, SampleConfigurationHasEulerCharacteristicFour) {
  const auto F = make_field(5);
  const EllipticLocus L{{{2, 1, 2}, {3, 1, 2}, {5, 1, 1}, {5, 2, 1}}};
  EXPECT_EQ(euler_characteristic(F, L), Rational(4));
  EXPECT_EQ(validate_surface(F, L), Rational(4));
}

TEST(Surface, OddOrFractionalEulerCharacteristicRejected) {
  const auto F = make_field(5);
  EXPECT_THROW(validate_surface(F, EllipticLocus{{{2, 1, 1}}}), ParityViolation);
  EXPECT_THROW(validate_surface(F, EllipticLocus{}), ParityViolation);
  // 1/15 + 2(1/2) + 2(2/3) + 4/5 = 16/5
  EXPECT_THROW(validate_surface(F, EllipticLocus{{{2, 1, 2}, {3, 1, 2}, {5, 1, 1}}}), ParityViolation);
}

TEST(Surface, PointValidationNamesEntry) {
  try {
    validate_point({5, 5, 1});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("nu=5, t=5"), std::string::npos);
  }
  EXPECT_THROW(validate_point({4, 2, 1}), ValidationError);
  EXPECT_THROW(validate_point({3, 1, 0}), ValidationError);
  EXPECT_THROW(validate_point({1, 1, 1}), ValidationError);
  EXPECT_NO_THROW(validate_point({7, 3, 2}));
}

TEST(SurfaceConfig, ParsesSampleFile) {
  const auto cfg = load_surface_config(std::string(HILZETA_DATA_DIR) + "/d5.surface");
  EXPECT_EQ(cfg.field.D, 5);
  ASSERT_EQ(cfg.locus.points.size(), 4u);
  EXPECT_EQ(cfg.locus.points[3], (EllipticPoint{5, 2, 1}));
  EXPECT_EQ(validate_surface(cfg.field, cfg.locus), Rational(4));
}

TEST(SurfaceConfig, ErrorsCarryLineNumbers) {
  try {
    parse_surface_config("d = 5\nelliptic = { nu = 4, t = 2, count = 1 }\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_surface_config("elliptic = { nu = 2, t = 1, count = 1 }\n"), ValidationError);
  EXPECT_THROW(parse_surface_config("d = 5\nd = 13\n"), ValidationError);
  EXPECT_THROW(parse_surface_config("d = 5\nelliptic = { nu = 2, t = 1 }\n"), ValidationError);
  EXPECT_THROW(parse_surface_config("d = 5\nfoo = 3\n"), ValidationError);
  EXPECT_THROW(parse_surface_config("# nothing\n"), ValidationError);
  EXPECT_THROW(load_surface_config("/nonexistent/file.surface"), IoError);
}

TEST(SurfaceConfig, CommentsAndBlankLinesSkipped) {
  const auto cfg = parse_surface_config("# header\n\nd = 13\n  # indented comment\nelliptic = {nu=3,t=2,count=4}\n");
  EXPECT_EQ(cfg.field.D, 13);
  ASSERT_EQ(cfg.locus.points.size(), 1u);
  EXPECT_EQ(cfg.locus.points[0], (EllipticPoint{3, 2, 4}));
}
