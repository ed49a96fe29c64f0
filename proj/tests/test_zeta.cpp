#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hilzeta/zeta.hpp"

using namespace hilzeta;

namespace {

const QuadraticField& golden() {
  static const QuadraticField f = make_field(5);
  return f;
}

const EllipticLocus kSample{{{2, 1, 2}, {3, 1, 2}, {5, 1, 1}, {5, 2, 1}}};

// -sum_j log(1 - e^{i phi} N^{-s-j}): the Euler product written over its local factors.
std::complex<double> local_factor_oracle(std::complex<double> s, double N, double phi, int terms = 200) {
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < terms; ++j) acc -= std::log(1.0 - std::polar(1.0, phi) * std::exp(-(s + double(j)) * std::log(N)));
  return acc;
}

}  // namespace

TEST(EulerProduct, EmptyListIsZero) {
  const auto v = log_Z_he({3.0, 0.0}, 2, {}, 5);
  EXPECT_EQ(v.value, std::complex<double>(0.0, 0.0));
  EXPECT_EQ(v.truncation_norm, 0.0);
}

TEST(EulerProduct, SinglePrimitiveHalfFactor) {
  const std::vector<GeodesicClass> p{{11.0, 0.7, 1, true, 11.0}};
  const auto one = log_Z_he({3.0, 0.0}, 2, p, 1);
  EXPECT_NEAR(one.value.real(), 0.5 * std::pow(11.0, -3) / (1.0 - 1.0 / 11.0), 1e-18);
  EXPECT_NEAR(one.value.real(), 4.133e-4, 1e-7);
  const auto full = log_Z_he({3.0, 0.0}, 2, p, 40);
  EXPECT_NEAR(full.value.real(), 0.5 * local_factor_oracle({3.0, 0.0}, 11.0, 0.0).real(), 1e-16);
  EXPECT_LT(full.truncation_norm, 1e-100);
}

TEST(EulerProduct, PhaseForHigherWeight) {
  const std::vector<GeodesicClass> p{{11.0, std::numbers::pi / 2, 1, true, 11.0}};
  const auto v = log_Z_he({3.0, 0.0}, 4, p, 1);
  EXPECT_NEAR(v.value.real(), -std::pow(11.0, -3) / (1.0 - 1.0 / 11.0), 1e-18);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-18);
}

TEST(EulerProduct, MatchesLocalFactorsAtComplexS) {
  const std::vector<GeodesicClass> p{{10.99925469285987, 0.8079482931769544, 1, true, 10.99925469285987},
                                     {120.98360, 1.6158965863539088, 2, true, 120.98360}};
  for (int m : {2, 4, 6}) {
    const std::complex<double> s{1.7, 4.2};
    const auto v = log_Z_he(s, m, p, 60);
    std::complex<double> ref{0.0, 0.0};
    for (const auto& g : p) ref += double(g.mult) * local_factor_oracle(s, g.norm, (m - 2) * g.omega);
    if (m == 2) ref *= 0.5;
    EXPECT_NEAR(std::abs(v.value - ref), 0.0, 1e-14) << m;
  }
}

TEST(EulerProduct, SkipsNonPrimitiveEntriesAndReportsTruncation) {
  const GeodesicClass p{5.0, 0.3, 1, true, 5.0};
  const GeodesicClass p2{25.0, 0.6, 1, false, 5.0};
  const auto a = log_Z_he({2.0, 0.0}, 4, {p}, 3);
  const auto b = log_Z_he({2.0, 0.0}, 4, {p, p2}, 3);
  EXPECT_EQ(a.value, b.value);
  const double fourth = std::pow(5.0, -8) / (4.0 * (1.0 - std::pow(5.0, -4)));
  EXPECT_NEAR(a.truncation_norm, fourth, 1e-20);
}

TEST(EulerProduct, RejectsOutsideConvergence) {
  EXPECT_THROW(log_Z_he({1.0, 2.0}, 2, {}, 3), ValidationError);
  EXPECT_THROW(log_Z_he({2.0, 0.0}, 2, {}, 0), ValidationError);
  EXPECT_THROW(log_Z_he({2.0, 0.0}, 3, {}, 2), ValidationError);
}

TEST(IdentityFactor, ReferenceValue) {
  // (1/30)(log Gamma_2(1) + log Gamma_2(2)) with mpmath values for Gamma_2.
  EXPECT_NEAR(log_Z_id(1.0, golden(), 2), (-0.1654211437004509292 + 0.7535173895042218126) / 30.0, 1e-14);
  EXPECT_NEAR(log_Z_id(2.0, golden(), 4), 2.0 * log_Z_id(2.0, golden(), 2), 1e-15);
  EXPECT_NEAR(log_Z_id(1.0 + 1e-9, golden(), 2), log_Z_id(1.0, golden(), 2), 1e-9);
  EXPECT_THROW(log_Z_id(0.0, golden(), 2), ValidationError);
}

TEST(EllipticFactor, ReferenceValues) {
  EXPECT_EQ(log_Z_ell(2.0, 2, EllipticLocus{}), 0.0);
  EXPECT_NEAR(log_Z_ell(1.0, 2, EllipticLocus{{{2, 1, 1}}}), 0.25 * std::log(std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_NEAR(log_Z_ell(1.0, 2, EllipticLocus{{{2, 1, 1}}}), 0.1430912, 1e-7);
  // nu = 5, t = 1, m = 4: exponents (-1, 2, 0, -2, 1)/5.
  const double s = 3.0;
  const double ref = (-std::lgamma(s / 5) + 2 * std::lgamma((s + 1) / 5) - 2 * std::lgamma((s + 3) / 5) + std::lgamma((s + 4) / 5)) / 5;
  EXPECT_NEAR(log_Z_ell(s, 4, EllipticLocus{{{5, 1, 1}}}), ref, 1e-14);
  EXPECT_NEAR(log_Z_ell(s, 4, EllipticLocus{{{5, 1, 3}}}), 3 * ref, 1e-14);
}

TEST(EllipticFactor, NegativeArgumentsUseAbsoluteGamma) {
  const double s = -0.5;  // (s+l)/2 = -1/4, 1/4
  EXPECT_NEAR(log_Z_ell(s, 2, EllipticLocus{{{2, 1, 1}}}), 0.25 * (std::lgamma(-0.25) - std::lgamma(0.25)), 1e-13);
}

TEST(EllipticFactor, PoleNamesEntry) {
  try {
    log_Z_ell(-2.0, 2, EllipticLocus{{{3, 1, 1}, {2, 1, 1}}});
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("j=0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("l=2"), std::string::npos) << msg;
  }
}

TEST(ScatteringFactors, ReferenceValues) {
  EXPECT_NEAR(log_Z_parsct(1.0, golden()), -0.48121182505960347, 1e-15);
  EXPECT_EQ(log_Z_parsct(0.0, golden()), 0.0);
  EXPECT_NEAR(log_Z_parsct(2.0, golden()), 2.0 * log_Z_parsct(1.0, golden()), 1e-15);
  // 1/(1 - eps^-2) = eps for the golden ratio.
  EXPECT_NEAR(log_Z_hyp2sct(1.0, golden(), 2), golden().log_eps, 1e-15);
  const double e = golden().eps_value();
  EXPECT_NEAR(log_Z_hyp2sct(2.0, golden(), 4), -std::log(1 - std::pow(e, -6)) + std::log(1 - std::pow(e, -4)), 1e-15);
  EXPECT_LT(std::abs(log_Z_hyp2sct(60.0, golden(), 2)), 1e-24);
  EXPECT_THROW(log_Z_hyp2sct(0.0, golden(), 2), ValidationError);
  EXPECT_THROW(log_Z_hyp2sct(0.0, golden(), 4), ValidationError);   // s + m/2 - 2 = 0
  EXPECT_THROW(log_Z_hyp2sct(-1.0, golden(), 6), ValidationError);  // s + m/2 - 2 = 0
}

TEST(Assembly, WeightTwoSumsFourFactors) {
  const auto z = log_Zhat({10.0, 0.0}, 2, golden(), kSample, {}, 4);
  ASSERT_TRUE(z.log_parsct.has_value());
  EXPECT_EQ(z.log_he, std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(z.log_total.real(), z.log_id + z.log_ell + *z.log_parsct + z.log_hyp2sct, 1e-12);
  EXPECT_EQ(z.log_total.imag(), 0.0);
}

TEST(Assembly, HigherWeightHasNoParabolicFactor) {
  const std::vector<GeodesicClass> p{{10.99925469285987, 0.8079482931769544, 1, true, 10.99925469285987}};
  const auto z = log_Zhat({10.0, 0.0}, 4, golden(), kSample, p, 6);
  EXPECT_FALSE(z.log_parsct.has_value());
  EXPECT_NEAR(std::abs(z.log_total - (z.log_he + z.log_id + z.log_ell + z.log_hyp2sct)), 0.0, 1e-12);
  EXPECT_GT(z.truncation_norm, 0.0);
  EXPECT_THROW(log_Zhat({2.0, 1.0}, 4, golden(), kSample, p, 6), ValidationError);
  EXPECT_THROW(log_Zhat({1.0, 0.0}, 4, golden(), kSample, p, 6), ValidationError);
  EXPECT_NO_THROW(log_Zhat({0.5, 0.0}, 2, golden(), kSample, {}, 6));
}

TEST(Asymptotics, RemainderDecreasesAndShrinks) {
  for (int m : {2, 4, 6}) {
    double prev = INFINITY;
    for (double s : {10.0, 20.0, 40.0, 100.0, 300.0, 1000.0}) {
      const double r = std::abs(asymptotic_remainder(s, m, golden(), kSample));
      EXPECT_LT(r, prev) << "m=" << m << " s=" << s;
      prev = r;
    }
    EXPECT_LT(prev, 1e-3) << m;
  }
}

TEST(Asymptotics, DoubledAlphaTermLeavesGrowingRemainder) {
  const double a = std::abs(asymptotic_remainder(100.0, 4, golden(), kSample, Alpha0Weight::Twelve));
  const double b = std::abs(asymptotic_remainder(1000.0, 4, golden(), kSample, Alpha0Weight::Twelve));
  EXPECT_GT(b, a);
}

TEST(Asymptotics, PolynomialIsSymmetric) {
  for (int m : {2, 4, 8}) {
    for (double s : {0.2, 1.3, 7.0}) EXPECT_NEAR(P_polynomial(s, m, golden(), kSample), P_polynomial(1.0 - s, m, golden(), kSample), 1e-13);
  }
  EXPECT_NEAR(P_polynomial(0.5, 2, golden(), kSample), C_const(2, golden(), kSample), 1e-15);
}
