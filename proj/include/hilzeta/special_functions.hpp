#ifndef HILZETA_SPECIAL_FUNCTIONS_HPP
#define HILZETA_SPECIAL_FUNCTIONS_HPP

// log Gamma, Barnes G, the double Gamma function Gamma_2 and a slow
// Euler-Maclaurin oracle for the zeta-regularized definition of Gamma_2.
//
// Normalization: log Gamma_2(x) = zeta'(-1) + (x-1)/2 log(2 pi) - log G(x),
// so that Gamma_2(x) = exp(d/ds|_{s=0} sum_{m,n>=0} (m+n+x)^{-s}).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hilzeta/errors.hpp"

namespace hilzeta {

struct SpecialConstants {
  double zeta_prime_m1 = -0.16542114370045092921;
  double log_two_pi = 1.8378770664093454836;
  double euler_gamma = 0.57721566490153286061;
};

inline constexpr SpecialConstants kConstants{};

namespace detail {

// B_2, B_4, ..., B_28
inline constexpr std::array<double, 14> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,           -1.0 / 30.0,  5.0 / 66.0,
    -691.0 / 2730.0,    7.0 / 6.0,            -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0,     -236364091.0 / 2730.0, 8553103.0 / 6.0,
    -23749461029.0 / 870.0};

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

/// Stirling series for log Gamma at |z| >= 15, Re z > 0.
template <typename T>
T stirling_log_gamma(const T& z) {
  using std::log;
  T sum = (z - 0.5) * log(z) - z + 0.5 * kConstants.log_two_pi;
  const T inv = T(1.0) / z;
  const T inv2 = inv * inv;
  T p = inv;
  for (int k = 1; k <= 8; ++k) {
    sum += kBernoulliEven[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return sum;
}

/// Riemann zeta at integers k >= 2 by Euler-Maclaurin with N = 10.
inline double zeta_int(int k) {
  constexpr int N = 10;
  double s = 0.0;
  for (int n = N - 1; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
  const double q = N;
  s += std::pow(q, 1.0 - k) / (k - 1.0) + 0.5 * std::pow(q, -k);
  double fact = 1.0;   // (2j)!
  double rising = 1.0; // k (k+1) ... (k+2j-2)
  for (int j = 1; j <= 10; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    rising *= (j == 1) ? k : (k + 2.0 * j - 3.0) * (k + 2.0 * j - 2.0);
    s += kBernoulliEven[j - 1] / fact * rising * std::pow(q, -k - 2.0 * j + 1.0);
  }
  return s;
}

/// log G(1+z) for |z| <= 0.5 from the Taylor series of the Weierstrass product.
inline double log_barnes_g_taylor(double z) {
  static const std::array<double, 80> zeta_table = [] {
    std::array<double, 80> t{};
    for (int k = 2; k < 80; ++k) t[k] = zeta_int(k);
    return t;
  }();
  double sum = 0.5 * z * kConstants.log_two_pi - 0.5 * (z + (1.0 + kConstants.euler_gamma) * z * z);
  double zp = z * z * z;  // z^{k+1}
  for (int k = 2; k < 80; ++k) {
    const double term = ((k % 2 == 0) ? 1.0 : -1.0) * zeta_table[k] * zp / (k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18) break;
    zp *= z;
  }
  return sum;
}

/// Large-argument expansion of log G(z+1).
inline double log_barnes_g_asymptotic(double z) {
  const double lz = std::log(z);
  double sum = 0.5 * z * z * lz - 0.75 * z * z + 0.5 * z * kConstants.log_two_pi - lz / 12.0 + kConstants.zeta_prime_m1;
  const double inv2 = 1.0 / (z * z);
  double p = inv2;
  for (int k = 1; k <= 6; ++k) {
    sum += kBernoulliEven[k] / (4.0 * k * (k + 1.0)) * p;
    p *= inv2;
  }
  return sum;
}

}  // namespace detail

/// Principal log Gamma for complex z (continuous branch on Re z > 0).
/// Accepts any non-pole z; for Re z <= 0 the result is some logarithm of Gamma(z).
inline std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real())) {
    throw ValidationError("log_gamma: pole at z = " + std::to_string(z.real()));
  }
  std::complex<double> shift{0.0, 0.0};
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return detail::stirling_log_gamma(z) - shift;
}

/// log Gamma(x) for real x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw ValidationError("log_gamma: need x > 0, got " + std::to_string(x));
  double shift = 0.0;
  while (x < 15.0) {
    shift += std::log(x);
    x += 1.0;
  }
  return detail::stirling_log_gamma(x) - shift;
}

/// log |Gamma(x)| for real non-pole x.
inline double log_abs_gamma(double x) {
  if (detail::is_nonpositive_integer(x)) throw ValidationError("log_abs_gamma: pole at x = " + std::to_string(x));
  if (x > 0.0) return log_gamma(x);
  double shift = 0.0;
  while (x < 15.0) {
    shift += std::log(std::abs(x));
    x += 1.0;
  }
  return detail::stirling_log_gamma(x) - shift;
}

/// Crossover between the recurrence and the asymptotic expansion of log G.
inline constexpr double kBarnesAsymptoticFrom = 50.0;

/// log G(x) for real x > 0.
inline double log_barnes_g(double x) {
  if (!(x > 0.0)) throw ValidationError("log_barnes_g: need x > 0, got " + std::to_string(x));
  if (x > kBarnesAsymptoticFrom) return detail::log_barnes_g_asymptotic(x - 1.0);
  if (x < 0.5) return detail::log_barnes_g_taylor(x) - log_gamma(x);  // G(x) = G(x+1)/Gamma(x)
  // G(x) = G(x-n) * prod_{j=1..n} Gamma(x-j), x-n in [0.5, 1.5]
  double base = x;
  double acc = 0.0;
  while (base > 1.5) {
    base -= 1.0;
    acc += log_gamma(base);
  }
  return detail::log_barnes_g_taylor(base - 1.0) + acc;
}

inline double log_gamma2(double x) {
  if (!(x > 0.0)) throw ValidationError("log_gamma2: need x > 0, got " + std::to_string(x));
  return kConstants.zeta_prime_m1 + 0.5 * (x - 1.0) * kConstants.log_two_pi - log_barnes_g(x);
}

namespace detail {

/// d/ds zeta_H(s, a) by Euler-Maclaurin with N explicit terms and J Bernoulli corrections.
inline double hurwitz_zeta_ds(double s, double a, int N = 30, int J = 10) {
  double d = 0.0;
  for (int k = N - 1; k >= 0; --k) {
    const double u = k + a;
    d -= std::log(u) * std::pow(u, -s);
  }
  const double q = N + a;
  const double L = std::log(q);
  d += -L * std::pow(q, 1.0 - s) / (s - 1.0) - std::pow(q, 1.0 - s) / ((s - 1.0) * (s - 1.0));
  d += -0.5 * L * std::pow(q, -s);
  double fact = 1.0;
  for (int j = 1; j <= J; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    const int n = 2 * j - 1;  // rising factorial length
    double P = 1.0;
    double dP = 0.0;
    for (int i = 0; i < n; ++i) {
      dP = dP * (s + i) + P;
      P *= (s + i);
    }
    const double qp = std::pow(q, -s - 2.0 * j + 1.0);
    d += kBernoulliEven[j - 1] / fact * (dP * qp - L * P * qp);
  }
  return d;
}

}  // namespace detail

/// d/ds|_{s=0} sum_{m,n>=0} (m+n+x)^{-s}, for 0 < x <= 10.
///
/// Uses sum_k (k+1)(k+x)^{-s} = zeta_H(s-1, x) + (1-x) zeta_H(s, x). Independent of the
/// Barnes G path; meant as a slow cross-check of log_gamma2.
inline double double_zeta_oracle(double x) {
  if (!(x > 0.0 && x <= 10.0)) throw ValidationError("double_zeta_oracle: x must lie in (0, 10], got " + std::to_string(x));
  return detail::hurwitz_zeta_ds(-1.0, x) + (1.0 - x) * detail::hurwitz_zeta_ds(0.0, x);
}

/// log Gamma_2(z+1) - [3/4 z^2 - (z^2/2 - 1/12) log z]; tends to 0 as z grows.
inline double gamma2_stirling_remainder(double z) {
  if (!(z > 0.0)) throw ValidationError("gamma2_stirling_remainder: need z > 0");
  return log_gamma2(z + 1.0) - (0.75 * z * z - (0.5 * z * z - 1.0 / 12.0) * std::log(z));
}

}  // namespace hilzeta

#endif  // HILZETA_SPECIAL_FUNCTIONS_HPP
