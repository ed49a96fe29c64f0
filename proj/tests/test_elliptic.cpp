#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hilzeta/elliptic.hpp"
#include "hilzeta/field.hpp"

using namespace hilzeta;

namespace {

// Coefficient of log(s/nu) produced by Stirling applied to sum_l e_l log Gamma((s+l)/nu):
// since sum_l e_l = 0 only the l/nu part of each exponent survives.
Rational stirling_log_coefficient(int m, int nu, int t) {
  Rational c(0);
  for (int l = 0; l < nu; ++l) c -= ell_exponent(l, m, nu, t) * Rational(l, nu);
  return c;
}

int direct_alpha(int l, int nu, int t, int m, int sign) {
  int a = l;
  for (int k = 0; k < t * (m - 2) / 2; ++k) a = (a + sign + nu) % nu;
  return a;
}

}  // namespace

TEST(AlphaTable, MatchesRepeatedShift) {
  for (int nu = 2; nu <= 13; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= 14; m += 2) {
        const auto tab = alpha_table(nu, t, m);
        for (int l = 0; l < nu; ++l) {
          EXPECT_EQ(tab.alpha[l], direct_alpha(l, nu, t, m, +1));
          EXPECT_EQ(tab.alpha_bar[l], direct_alpha(l, nu, t, m, -1));
        }
      }
    }
  }
}

TEST(AlphaTable, WorkedExampleNuFive) {
  const auto tab = alpha_table(5, 1, 4);
  EXPECT_EQ(tab.alpha, (std::vector<int>{1, 2, 3, 4, 0}));
  EXPECT_EQ(tab.alpha_bar, (std::vector<int>{4, 0, 1, 2, 3}));
  EXPECT_EQ(alpha0(4, 5, 1), 1);
  EXPECT_EQ(alpha0(6, 5, 2), 4);
  EXPECT_EQ(alpha0(2, 7, 3), 0);
}

TEST(AlphaTable, PermutationAndPiecewiseForm) {
  for (int nu = 2; nu <= 30; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= 20; m += 2) {
        const auto tab = alpha_table(nu, t, m);
        auto a = tab.alpha;
        auto b = tab.alpha_bar;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int l = 0; l < nu; ++l) {
          ASSERT_EQ(a[l], l);
          ASSERT_EQ(b[l], l);
        }
        ASSERT_TRUE(piecewise_alpha_check(tab)) << nu << " " << t << " " << m;
      }
    }
  }
}

TEST(AlphaTable, RejectsBadInput) {
  EXPECT_THROW(alpha_table(4, 2, 4), ValidationError);
  EXPECT_THROW(alpha_table(5, 1, 3), ValidationError);
  EXPECT_THROW(alpha_table(5, 1, 0), ValidationError);
  EXPECT_THROW(ell_exponent(5, 4, 5, 1), ValidationError);
}

TEST(WeightedSum, HalvedAlphaTermHoldsEverywhere) {
  for (int nu = 2; nu <= 30; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= 20; m += 2) {
        const auto ws = weighted_sum_identity(alpha_table(nu, t, m), Alpha0Weight::Six);
        ASSERT_EQ(ws.lhs, ws.rhs) << nu << " " << t << " " << m;
      }
    }
  }
}

TEST(WeightedSum, UnhalvedAlphaTermFailsWhenAlphaZeroNonzero) {
  const auto ws = weighted_sum_identity(alpha_table(5, 1, 4), Alpha0Weight::Twelve);
  EXPECT_NE(ws.lhs, ws.rhs);
  // With alpha_0 = 0 both forms agree.
  const auto ws2 = weighted_sum_identity(alpha_table(5, 1, 2), Alpha0Weight::Twelve);
  EXPECT_EQ(ws2.lhs, ws2.rhs);
}

TEST(CosecantSum, ClosedForm) {
  for (int nu = 2; nu <= 60; ++nu) {
    EXPECT_EQ(cosecant_sum(nu), Rational(nu * nu - 1, 6));
    double direct = 0.0;
    for (int k = 1; k < nu; ++k) {
      const double c = 1.0 / std::sin(std::numbers::pi * k / nu);
      direct += 0.5 * c * c;  // 1/(1 - cos 2x) = csc^2(x)/2
    }
    EXPECT_NEAR(cosecant_sum_numeric(nu), direct, 1e-10 * direct);
  }
  EXPECT_THROW(cosecant_sum(1), ValidationError);
}

TEST(Exponents, SumToZero) {
  for (int nu = 2; nu <= 25; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= 16; m += 2) {
        Rational s(0);
        for (int l = 0; l < nu; ++l) s += ell_exponent(l, m, nu, t);
        ASSERT_EQ(s.numerator(), 0);
      }
    }
  }
  EXPECT_EQ(ell_exponent(0, 2, 3, 1), Rational(1, 3));
  EXPECT_EQ(ell_exponent(2, 2, 3, 1), Rational(-1, 3));
  EXPECT_EQ(ell_exponent(0, 4, 5, 1), Rational(-1, 5));
  EXPECT_EQ(ell_exponent(1, 4, 5, 1), Rational(2, 5));
}

TEST(LogCoefficient, AgreesWithStirlingOfExponents) {
  for (int nu = 2; nu <= 25; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= 16; m += 2) {
        ASSERT_EQ(elliptic_log_coefficient(m, {nu, t, 1}, Alpha0Weight::Six), stirling_log_coefficient(m, nu, t))
            << nu << " " << t << " " << m;
      }
    }
  }
}

TEST(LogCoefficient, DoubledAlphaTermDisagreesWithExponents) {
  EXPECT_NE(elliptic_log_coefficient(4, {5, 1, 1}, Alpha0Weight::Twelve), stirling_log_coefficient(4, 5, 1));
}

TEST(HeatCoefficient, WorkedExamples) {
  const EllipticLocus five{{{5, 1, 1}}};
  // Printed coefficient convention.
  EXPECT_EQ(b0(4, five, Alpha0Weight::Twelve), Rational(2, 5));
  const auto F = make_field(5);
  EXPECT_NEAR(C_const(4, F, five, Alpha0Weight::Twelve), -0.8 * std::log(5.0), 1e-14);
  // Consistent convention: the alpha_0 contribution cancels the nu^2 - 1 part here.
  EXPECT_EQ(b0(4, five, Alpha0Weight::Six), Rational(0));
  EXPECT_NEAR(C_const(4, F, five, Alpha0Weight::Six), 0.0, 1e-15);
  EXPECT_EQ(b0(2, five), Rational(-1, 5));
}

TEST(HeatCoefficient, WeightTwoValues) {
  const EllipticLocus L{{{2, 1, 2}, {3, 1, 2}, {5, 1, 1}, {5, 2, 1}}};
  // -(2*3/48 + 2*8/72 + 2*24/120) = -(1/8 + 2/9 + 2/5)
  EXPECT_EQ(b0(2, L), -(Rational(1, 8) + Rational(2, 9) + Rational(2, 5)));
  const auto F = make_field(5);
  const double expect = -0.5 * F.log_eps + 2 * (3.0 / 24.0) * std::log(2.0) + 2 * (8.0 / 36.0) * std::log(3.0) +
                        2 * (24.0 / 60.0) * std::log(5.0);
  EXPECT_NEAR(C_const(2, F, L), expect, 1e-14);
}

TEST(HeatCoefficient, RejectsOddWeight) {
  EXPECT_THROW(b0(3, EllipticLocus{}), ValidationError);
  EXPECT_THROW(require_even_weight(0), ValidationError);
}
