#ifndef HILZETA_ZETA_HPP
#define HILZETA_ZETA_HPP

// Truncated Euler products over hyperbolic-elliptic classes and the closed
// Gamma / double Gamma / scattering factors of the completed zeta functions.
//
// Weight m = 2 always means the square-root version: half Euler product, half
// identity and elliptic exponents, and the par/sct factor eps^{-s}. Weights
// m >= 4 have no par/sct factor.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hilzeta/elliptic.hpp"
#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/geodesics.hpp"
#include "hilzeta/special_functions.hpp"

namespace hilzeta {

struct EulerProductValue {
  std::complex<double> value;
  double truncation_norm = 0.0;  // largest |(k_max+1)-th term| over the primitives
};

/// log Z_m(s) (or log sqrt(Z_2(s)) for m = 2) summed over the primitive entries of `classes`:
/// sum_p mult_p sum_{k=1}^{k_max} (1/k) e^{ik(m-2)omega} N^{-ks} / (1 - N^{-k}).
inline EulerProductValue log_Z_he(std::complex<double> s, int m, const std::vector<GeodesicClass>& classes, int k_max) {
  require_even_weight(m);
  if (!(s.real() > 1.0)) throw ValidationError("log_Z_he: Euler product needs Re s > 1");
  if (k_max < 1) throw ValidationError("log_Z_he: k_max must be >= 1");
  const double factor = (m == 2) ? 0.5 : 1.0;
  EulerProductValue out{{0.0, 0.0}, 0.0};
  auto term = [&](const GeodesicClass& p, int k) {
    const double logN = std::log(p.norm);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, k * (m - 2) * p.omega));
    const std::complex<double> decay = std::exp(-static_cast<double>(k) * s * logN);
    return factor * p.mult * phase * decay / (k * (1.0 - std::pow(p.norm, -k)));
  };
  for (const auto& p : classes) {
    if (!p.primitive) continue;
    for (int k = k_max; k >= 1; --k) out.value += term(p, k);
    out.truncation_norm = std::max(out.truncation_norm, std::abs(term(p, k_max + 1)));
  }
  return out;
}

/// zeta_K(-1) (log Gamma_2(s) + log Gamma_2(s+1)); doubled for m >= 4.
inline double log_Z_id(double s, const QuadraticField& field, int m) {
  require_even_weight(m);
  if (!(s > 0.0)) throw ValidationError("log_Z_id: need s > 0");
  const double half = field.zeta_m1_value() * (log_gamma2(s) + log_gamma2(s + 1.0));
  return m == 2 ? half : 2.0 * half;
}

/// sum_j count_j sum_l exponent(l) log |Gamma((s+l)/nu_j)|.
inline double log_Z_ell(double s, int m, const EllipticLocus& locus) {
  require_even_weight(m);
  validate_locus(locus);
  double total = 0.0;
  for (std::size_t j = 0; j < locus.points.size(); ++j) {
    const auto& p = locus.points[j];
    for (int l = 0; l < p.nu; ++l) {
      const Rational e = ell_exponent(l, m, p.nu, p.t);
      if (e.numerator() == 0) continue;
      const double arg = (s + l) / p.nu;
      if (arg <= 0.0 && arg == std::floor(arg)) {
        throw ValidationError("log_Z_ell: Gamma pole at elliptic entry j=" + std::to_string(j) + ", l=" + std::to_string(l));
      }
      total += p.count * to_double(e) * log_abs_gamma(arg);
    }
  }
  return total;
}

inline double log_Z_parsct(double s, const QuadraticField& field) { return -s * field.log_eps; }

namespace detail {

/// log |zeta_eps(x)| = -log |1 - eps^{-2x}|.
inline double log_zeta_eps(double x, const QuadraticField& field) {
  if (x == 0.0) throw ValidationError("zeta_eps has a pole at argument 0");
  return -std::log(std::abs(-std::expm1(-2.0 * x * field.log_eps)));
}

}  // namespace detail

/// m = 2: log zeta_eps(s); m >= 4: log zeta_eps(s + m/2 - 1) - log zeta_eps(s + m/2 - 2).
inline double log_Z_hyp2sct(double s, const QuadraticField& field, int m) {
  require_even_weight(m);
  if (m == 2) return detail::log_zeta_eps(s, field);
  return detail::log_zeta_eps(s + m / 2.0 - 1.0, field) - detail::log_zeta_eps(s + m / 2.0 - 2.0, field);
}

struct ZetaFactorization {
  std::complex<double> s;
  int m = 2;
  std::complex<double> log_he;
  double log_id = 0.0;
  double log_ell = 0.0;
  std::optional<double> log_parsct;  // m = 2 only
  double log_hyp2sct = 0.0;
  std::complex<double> log_total;
  double truncation_norm = 0.0;
};

/// All factors of the completed zeta function at real s. The Euler product part is
/// skipped (zero) when `classes` holds no primitive entry, otherwise it needs s > 1.
inline ZetaFactorization log_Zhat(std::complex<double> s, int m, const QuadraticField& field, const EllipticLocus& locus,
                                  const std::vector<GeodesicClass>& classes, int k_max) {
  require_even_weight(m);
  if (s.imag() != 0.0) throw ValidationError("log_Zhat: closed factors are evaluated on the real axis only");
  const double x = s.real();
  ZetaFactorization z;
  z.s = s;
  z.m = m;
  const bool any_primitive = std::any_of(classes.begin(), classes.end(), [](const GeodesicClass& g) { return g.primitive; });
  if (any_primitive) {
    const auto he = log_Z_he(s, m, classes, k_max);
    z.log_he = he.value;
    z.truncation_norm = he.truncation_norm;
  }
  z.log_id = log_Z_id(x, field, m);
  z.log_ell = log_Z_ell(x, m, locus);
  if (m == 2) z.log_parsct = log_Z_parsct(x, field);
  z.log_hyp2sct = log_Z_hyp2sct(x, field, m);
  z.log_total = z.log_he + z.log_id + z.log_ell + z.log_parsct.value_or(0.0) + z.log_hyp2sct;
  return z;
}

/// Main terms of the large-s expansion of log Zhat (Euler product part taken as 0).
inline double asymptotic_main_terms(double s, int m, const QuadraticField& field, const EllipticLocus& locus,
                                    Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  const double id = field.zeta_m1_value() * (1.5 * s * s - s - (s * s - s + 1.0 / 3.0) * std::log(s));
  double main = (m == 2) ? id : 2.0 * id;
  for (const auto& p : locus.points) {
    main -= p.count * to_double(elliptic_log_coefficient(m, p, weight)) * std::log(s / p.nu);
  }
  if (m == 2) main -= s * field.log_eps;
  return main;
}

/// log Zhat(s) without the Euler product minus its main terms; tends to 0 as s grows.
inline double asymptotic_remainder(double s, int m, const QuadraticField& field, const EllipticLocus& locus,
                                   Alpha0Weight weight = Alpha0Weight::Six) {
  const auto z = log_Zhat({s, 0.0}, m, field, locus, {}, 1);
  return z.log_total.real() - asymptotic_main_terms(s, m, field, locus, weight);
}

/// P_2(s) = (s-1/2)^2 zeta_K(-1) + C_2; P_m(s) = 2 (s-1/2)^2 zeta_K(-1) + C_m.
inline double P_polynomial(double s, int m, const QuadraticField& field, const EllipticLocus& locus,
                           Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  const double sq = (s - 0.5) * (s - 0.5) * field.zeta_m1_value();
  return (m == 2 ? sq : 2.0 * sq) + C_const(m, field, locus, weight);
}

}  // namespace hilzeta

#endif  // HILZETA_ZETA_HPP
