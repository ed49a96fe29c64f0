#ifndef HILZETA_SPECTRAL_HPP
#define HILZETA_SPECTRAL_HPP

// Heat traces of finite spectra, the geometric side of the double-difference
// trace formulas under the Gaussian heat pair
//   h(r) = exp(-t (r^2 + 1/4)),  g(u) = (4 pi t)^{-1/2} exp(-t/4 - u^2 / 4t),
// small-t coefficient fits, the eta_p continuation functions and determinant
// expressions built from the completed zeta functions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hilzeta/elliptic.hpp"
#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/geodesics.hpp"
#include "hilzeta/quadrature.hpp"
#include "hilzeta/special_functions.hpp"
#include "hilzeta/zeta.hpp"

namespace hilzeta {

// ---------------------------------------------------------------- spectra

struct Spectrum {
  int m = 2;
  std::vector<double> lambdas;  // ascending, > 0
};

inline Spectrum make_spectrum(int m, std::vector<double> lambdas) {
  require_even_weight(m);
  for (double l : lambdas) {
    if (!(l > 0.0) || !std::isfinite(l)) throw ValidationError("spectrum entries must be finite and > 0, got " + format_double(l));
  }
  std::sort(lambdas.begin(), lambdas.end());
  return {m, std::move(lambdas)};
}

inline constexpr const char* kSpectrumCsvHeader = "lambda";

inline Spectrum read_spectrum(std::istream& in, int m) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("line 1: missing spectrum CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSpectrumCsvHeader) throw ValidationError("line 1: expected header 'lambda'");
  std::vector<double> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(line, &used);
    } catch (const std::exception&) {
      throw ValidationError("line " + std::to_string(line_no) + ": not a number: '" + line + "'");
    }
    if (used != line.size()) throw ValidationError("line " + std::to_string(line_no) + ": trailing characters");
    if (!(v > 0.0)) throw ValidationError("line " + std::to_string(line_no) + ": eigenvalue must be > 0");
    values.push_back(v);
  }
  return make_spectrum(m, std::move(values));
}

inline Spectrum load_spectrum(const std::string& path, int m) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spectrum file: " + path);
  return read_spectrum(in, m);
}

inline void write_spectrum(std::ostream& out, const Spectrum& spec) {
  out << kSpectrumCsvHeader << '\n';
  for (double l : spec.lambdas) out << format_double(l) << '\n';
}

inline void require_positive_time(double t) {
  if (!(t > 0.0)) throw ValidationError("heat time t must be > 0, got " + format_double(t));
}

/// sum_j exp(-t lambda_j).
inline double theta(const Spectrum& spec, double t) {
  require_positive_time(t);
  double s = 0.0;
  for (auto it = spec.lambdas.rbegin(); it != spec.lambdas.rend(); ++it) s += std::exp(-t * *it);
  return s;
}

// ---------------------------------------------------------------- heat pair

struct HeatTestPair {
  double t = 1.0;

  explicit HeatTestPair(double t_) : t(t_) { require_positive_time(t); }

  double h(double r) const { return std::exp(-t * (r * r + 0.25)); }
  double g(double u) const { return std::exp(-0.25 * t - u * u / (4.0 * t)) / std::sqrt(4.0 * std::numbers::pi * t); }
};

/// Heat-kernel normalization: vol / 16 pi^2 = zeta_K(-1)/2 for m = 2, vol / 8 pi^2 = zeta_K(-1) above.
inline double identity_prefactor(const QuadraticField& field, int m) {
  require_even_weight(m);
  return m == 2 ? 0.5 * field.zeta_m1_value() : field.zeta_m1_value();
}

/// prefactor * int_R h(r) r tanh(pi r) dr, using r tanh(pi r) = |r| - 2|r| / (e^{2 pi |r|} + 1).
inline double identity_term(const QuadraticField& field, int m, double t) {
  require_positive_time(t);
  const auto tail = integrate([&](double r) { return std::exp(-t * r * r) * r / (std::exp(2.0 * std::numbers::pi * r) + 1.0); },
                              0.0, 12.0, 1e-11);
  const double full = 2.0 * std::exp(-0.25 * t) * (0.5 / t - 2.0 * tail.value);
  return identity_prefactor(field, m) * full;
}

/// Direct quadrature of int_R h(r) r tanh(pi r) dr without the closed-form split.
inline double identity_integral_direct(double t) {
  const HeatTestPair pair(t);
  const double rmax = std::sqrt((40.0 * std::log(10.0) + std::log(1.0 + 1.0 / t)) / t);
  const auto v = integrate([&](double r) { return pair.h(r) * r * std::tanh(std::numbers::pi * r); }, 0.0, rmax, 1e-9);
  return 2.0 * v.value;
}

/// int_0^inf r^2 / cosh^2(pi r) dr (closed form 1/(12 pi)).
inline double r2_sech2_integral() {
  return integrate([](double r) {
           const double c = std::cosh(std::numbers::pi * r);
           return r * r / (c * c);
         }, 0.0, 20.0, 1e-13).value;
}

// ---------------------------------------------------------------- elliptic term

inline constexpr double kImaginaryTolerance = 1e-10;

/// Half-width in v = u / sqrt(t) beyond which exp(-v^2/4) < 1e-16.
inline double elliptic_v_max() { return 2.0 * std::sqrt(16.0 * std::log(10.0)) + 0.5; }

/// Gaussian tail cutoff in u.
inline double elliptic_u_max(double t) { return std::sqrt(t) * elliptic_v_max(); }

namespace detail {

/// int g(u) e^{-u/2} (e^u - e^{2 i th}) / (cosh u - cos 2 th) du, integrated in v = u / sqrt(t).
inline std::complex<double> elliptic_kernel_integral(double t, double theta1) {
  const double sq = std::sqrt(t);
  const std::complex<double> e2 = std::polar(1.0, 2.0 * theta1);
  const double c2 = std::cos(2.0 * theta1);
  auto f = [&](double v) {
    const double u = sq * v;
    const std::complex<double> bracket = (std::exp(u) - e2) / (std::cosh(u) - c2);
    return std::exp(-0.25 * v * v - 0.5 * u) * bracket;
  };
  const double vmax = elliptic_v_max();
  const auto left = integrate_complex(f, -vmax, 0.0, 1e-11);
  const auto right = integrate_complex(f, 0.0, vmax, 1e-11);
  return (left.value + right.value) * std::exp(-0.25 * t) / (2.0 * std::sqrt(std::numbers::pi));
}

}  // namespace detail

struct ComplexHeatTerm {
  double value = 0.0;
  double imag = 0.0;
};

/// Elliptic sum with classes k = 1..nu-1, (theta1, theta2) = (k pi/nu, k t_j pi/nu), nu_R = nu.
/// Returns real and imaginary parts without checking.
inline ComplexHeatTerm elliptic_term_raw(const EllipticLocus& locus, int m, double t) {
  require_even_weight(m);
  require_positive_time(t);
  validate_locus(locus);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& p : locus.points) {
    for (int k = 1; k < p.nu; ++k) {
      const double th1 = std::numbers::pi * k / p.nu;
      const double th2 = std::numbers::pi * static_cast<double>(k) * p.t / p.nu;
      const std::complex<double> i1{0.0, 1.0};
      std::complex<double> pref = i1 * std::polar(1.0, -th1) / std::sin(th1);
      pref /= (m == 2) ? 8.0 * p.nu : 4.0 * p.nu;
      if (m != 2) pref *= std::polar(1.0, (m - 2) * th2);
      sum -= static_cast<double>(p.count) * pref * detail::elliptic_kernel_integral(t, th1);
    }
  }
  return {sum.real(), sum.imag()};
}

/// Real elliptic term; throws NumericError when the imaginary residue exceeds 1e-10.
inline double elliptic_term(const EllipticLocus& locus, int m, double t) {
  const auto e = elliptic_term_raw(locus, m, t);
  if (std::abs(e.imag) > kImaginaryTolerance) {
    throw NumericError("elliptic_term: imaginary residue " + format_double(e.imag) + " above tolerance");
  }
  return e.value;
}

/// t -> 0+ limit of the elliptic term by Richardson extrapolation over t0, t0/2, t0/4.
inline double elliptic_limit(const EllipticLocus& locus, int m, double t0 = 0.002) {
  const double e0 = elliptic_term(locus, m, t0);
  const double e1 = elliptic_term(locus, m, 0.5 * t0);
  const double e2 = elliptic_term(locus, m, 0.25 * t0);
  return (8.0 * e2 - 6.0 * e1 + e0) / 3.0;
}

// ---------------------------------------------------------------- hyperbolic terms

struct HeHeatTerm {
  double value = 0.0;
  double imag = 0.0;
  bool power_closed = true;
};

/// -1/2 sum log N0 g(log N) / (N^{1/2} - N^{-1/2}) for m = 2; for m >= 4 no 1/2 and a phase e^{i(m-2) omega}.
/// The list should contain all powers of its primitive entries; power_closed reports whether it does.
inline HeHeatTerm he_term(const std::vector<GeodesicClass>& geodesics, int m, double t) {
  require_even_weight(m);
  const HeatTestPair pair(t);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& g : geodesics) {
    validate_geodesic(g);
    const double logN = std::log(g.norm);
    const double w = std::log(g.primitive_norm) * pair.g(logN) / (std::sqrt(g.norm) - 1.0 / std::sqrt(g.norm)) * g.mult;
    sum += (m == 2) ? std::complex<double>(0.5 * w, 0.0) : w * std::polar(1.0, (m - 2) * g.omega);
  }
  return {-sum.real(), -sum.imag(), is_power_closed(geodesics)};
}

struct ScatteringTerms {
  double PS = 0.0;
  double HS = 0.0;
};

/// PS = -log eps g(0) (m = 2 only); HS = -2 log eps sum_k g(2k log eps) w_k with
/// w_k = eps^{-k} for m = 2 and eps^{-k(m-1)} - eps^{-k(m-3)} otherwise.
inline ScatteringTerms parabolic_and_hyp2_terms(const QuadraticField& field, int m, double t) {
  require_even_weight(m);
  const HeatTestPair pair(t);
  const double le = field.log_eps;
  ScatteringTerms out;
  if (m == 2) out.PS = -le * pair.g(0.0);
  double hs = 0.0;
  for (int k = 1; k < 10000; ++k) {
    const double w = (m == 2) ? std::exp(-k * le) : std::exp(-k * (m - 1) * le) - std::exp(-k * (m - 3) * le);
    const double term = -2.0 * le * pair.g(2.0 * k * le) * w;
    hs += term;
    if (std::abs(term) < 1e-18) break;
  }
  out.HS = hs;
  return out;
}

// ---------------------------------------------------------------- assembly

struct GeometricSideBreakdown {
  double t = 0.0;
  int m = 2;
  double I = 0.0;
  double E = 0.0;
  double HE = 0.0;
  double PS = 0.0;
  double HS = 0.0;
  double total = 0.0;
  bool power_closed = true;
};

/// Right-hand side of the double-difference trace formula with the heat pair at time t.
/// For m = 2 it equals theta_2(t) - 1; for m >= 4 it equals theta_m(t) - theta_{m-2}(t) + [m = 4].
inline GeometricSideBreakdown geometric_theta(const QuadraticField& field, const EllipticLocus& locus,
                                              const std::vector<GeodesicClass>& geodesics, int m, double t) {
  require_even_weight(m);
  require_positive_time(t);
  GeometricSideBreakdown b;
  b.t = t;
  b.m = m;
  b.I = identity_term(field, m, t);
  b.E = elliptic_term(locus, m, t);
  const auto he = he_term(geodesics, m, t);
  if (std::abs(he.imag) > kImaginaryTolerance) {
    throw NumericError("he_term: imaginary residue " + format_double(he.imag) + " above tolerance");
  }
  b.HE = he.value;
  b.power_closed = he.power_closed;
  const auto sc = parabolic_and_hyp2_terms(field, m, t);
  b.PS = sc.PS;
  b.HS = sc.HS;
  b.total = b.I + b.E + b.HE + b.PS + b.HS;
  return b;
}

/// theta_m(t) implied by the geometric sides of weights 2, 4, ..., m.
inline double theta_estimate(const QuadraticField& field, const EllipticLocus& locus,
                             const std::vector<GeodesicClass>& geodesics, int m, double t) {
  require_even_weight(m);
  double th = 1.0;
  for (int q = 2; q <= m; q += 2) {
    th += geometric_theta(field, locus, geodesics, q, t).total;
    if (q == 4) th -= 1.0;
  }
  return th;
}

// ---------------------------------------------------------------- small-t fit

struct SmallTFit {
  double c_minus1 = 0.0;  // coefficient of 1/t
  double c_half = 0.0;    // coefficient of t^{-1/2}
  double c_0 = 0.0;
};

/// Least squares of a/t + b/sqrt(t) + c through (t, value) samples.
inline SmallTFit small_t_fit(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) throw ValidationError("small_t_fit: need at least 3 samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = samples[static_cast<std::size_t>(i)].first;
    require_positive_time(t);
    A(i, 0) = 1.0 / t;
    A(i, 1) = 1.0 / std::sqrt(t);
    A(i, 2) = 1.0;
    y(i) = samples[static_cast<std::size_t>(i)].second;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 3) throw ValidationError("small_t_fit: sample times must be distinct");
  const Eigen::Vector3d c = qr.solve(y);
  return {c(0), c(1), c(2)};
}

/// Closed-form small-t coefficients of theta_m: ((m-1)/2 zeta_K(-1), -log eps/(2 sqrt pi),
/// -(m-1)/6 zeta_K(-1) + b_0(2) + ... + b_0(m) + [m = 2]).
inline SmallTFit theta_coefficients(const QuadraticField& field, const EllipticLocus& locus, int m,
                                    Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  const double z = field.zeta_m1_value();
  double b = 0.0;
  for (int q = 2; q <= m; q += 2) b += to_double(b0(q, locus, weight));
  return {0.5 * (m - 1) * z, -field.log_eps / (2.0 * std::sqrt(std::numbers::pi)), -(m - 1) * z / 6.0 + b + (m == 2 ? 1.0 : 0.0)};
}

// ---------------------------------------------------------------- eta functions

inline double shifted_square(double s) { return s * (s - 1.0); }

inline void require_eta_order(double p) {
  if (p != 0.0 && p != 0.5 && p != 1.0) throw ValidationError("eta: p must be 0, 1/2 or 1");
}

/// eta_p(w, s) = Gamma(w - p) (s(s-1))^{p-w} / Gamma(w), continued analytically through w = 0.
inline std::complex<double> eta(std::complex<double> w, double s, double p) {
  require_eta_order(p);
  const double X = shifted_square(s);
  if (!(X > 0.0)) throw ValidationError("eta: need s(s-1) > 0");
  const double logX = std::log(X);
  const std::complex<double> power = std::exp((p - w) * logX);
  if (p == 0.0) return power;
  if (p == 1.0) {
    if (w == std::complex<double>(1.0, 0.0)) throw ValidationError("eta_1: pole at w = 1");
    return power / (w - 1.0);  // Gamma(w-1)/Gamma(w) = 1/(w-1)
  }
  const std::complex<double> a = w - 0.5;
  if (a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::floor(a.real())) {
    throw ValidationError("eta_1/2: pole of Gamma(w - 1/2)");
  }
  const std::complex<double> b = w + 1.0;
  if (b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::floor(b.real())) return {0.0, 0.0};
  // 1/Gamma(w) = w / Gamma(w+1)
  return w * std::exp(log_gamma(a) - log_gamma(b)) * power;
}

/// d/dw eta_p(w, s) at w = 0.
inline double eta_deriv0(double s, double p) {
  require_eta_order(p);
  const double X = shifted_square(s);
  if (!(X > 0.0)) throw ValidationError("eta_deriv0: need s(s-1) > 0");
  if (p == 0.0) return -std::log(X);
  if (p == 0.5) return -2.0 * std::sqrt(std::numbers::pi) * std::sqrt(X);
  return X * (std::log(X) - 1.0);
}

// ---------------------------------------------------------------- determinants

/// sum_n log(lambda_n + s(s-1)); exact for a finite spectrum.
inline double finite_log_det(const Spectrum& spec, double s) {
  const double X = shifted_square(s);
  double total = 0.0;
  for (double l : spec.lambdas) {
    const double v = l + X;
    if (!(v > 0.0)) throw ValidationError("finite_log_det: shifted eigenvalue " + format_double(v) + " is not positive");
    total += std::log(v);
  }
  return total;
}

struct LogDetValue {
  std::complex<double> value;
  double truncation_norm = 0.0;
};

/// log Det(box_m + s(s-1)) from the completed zeta functions:
/// m = 2: log(s(s-1)) - (s-1/2)^2 zeta_K(-1) - C_2 + log Zhat_2^{1/2}(s);
/// m >= 4: -(m-1)(s-1/2)^2 zeta_K(-1) - (C_2 + ... + C_m) + sum_q log Zhat_q(s).
inline LogDetValue corollary_log_det(double s, int m, const QuadraticField& field, const EllipticLocus& locus,
                                     const std::vector<GeodesicClass>& primitives, int k_max,
                                     Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  const double sq = (s - 0.5) * (s - 0.5) * field.zeta_m1_value();
  LogDetValue out;
  if (m == 2) {
    const double X = shifted_square(s);
    if (!(X > 0.0)) throw ValidationError("corollary_log_det: need s(s-1) > 0 for m = 2");
    out.value = std::log(X) - sq - C_const(2, field, locus, weight);
  } else {
    out.value = -(m - 1) * sq;
  }
  for (int q = 2; q <= m; q += 2) {
    if (m != 2) out.value -= C_const(q, field, locus, weight);
    const auto z = log_Zhat({s, 0.0}, q, field, locus, primitives, k_max);
    out.value += z.log_total;
    out.truncation_norm += z.truncation_norm;
  }
  return out;
}

/// Largest |lhs - rhs| over q = 2, 4, ..., m of the three determinant relations
///   log Zhat_2^{1/2} = (s-1/2)^2 z + C_2 + L_2 - log(s(s-1)),
///   log Zhat_4 = 2(s-1/2)^2 z + C_4 + log(s(s-1)) + L_4 - L_2,
///   log Zhat_q = 2(s-1/2)^2 z + C_q + L_q - L_{q-2}  (q >= 6),
/// with L_q = corollary_log_det(s, q).
inline double telescoping_residual(double s, int m, const QuadraticField& field, const EllipticLocus& locus,
                                   const std::vector<GeodesicClass>& primitives, int k_max,
                                   Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  const double z = field.zeta_m1_value();
  const double sq = (s - 0.5) * (s - 0.5) * z;
  const double logX = std::log(shifted_square(s));
  double worst = 0.0;
  std::complex<double> prev;
  for (int q = 2; q <= m; q += 2) {
    const std::complex<double> L = corollary_log_det(s, q, field, locus, primitives, k_max, weight).value;
    const std::complex<double> zq = log_Zhat({s, 0.0}, q, field, locus, primitives, k_max).log_total;
    const double Cq = C_const(q, field, locus, weight);
    std::complex<double> rhs;
    if (q == 2) {
      rhs = sq + Cq + L - logX;
    } else if (q == 4) {
      rhs = 2.0 * sq + Cq + logX + L - prev;
    } else {
      rhs = 2.0 * sq + Cq + L - prev;
    }
    worst = std::max(worst, std::abs(zq - rhs));
    prev = L;
  }
  return worst;
}

/// Least-squares slope of the counting function N(T) = #{lambda_j <= T} over the grid.
inline double weyl_slope(const Spectrum& spec, const std::vector<double>& T_grid) {
  if (T_grid.empty()) throw ValidationError("weyl_slope: empty grid");
  if (T_grid.size() == 1) {
    const double T = T_grid.front();
    if (!(T > 0.0)) throw ValidationError("weyl_slope: single grid point must be > 0");
    return static_cast<double>(std::upper_bound(spec.lambdas.begin(), spec.lambdas.end(), T) - spec.lambdas.begin()) / T;
  }
  double mx = 0.0;
  double my = 0.0;
  std::vector<double> counts;
  for (double T : T_grid) {
    counts.push_back(static_cast<double>(std::upper_bound(spec.lambdas.begin(), spec.lambdas.end(), T) - spec.lambdas.begin()));
    mx += T;
    my += counts.back();
  }
  mx /= static_cast<double>(T_grid.size());
  my /= static_cast<double>(T_grid.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    sxy += (T_grid[i] - mx) * (counts[i] - my);
    sxx += (T_grid[i] - mx) * (T_grid[i] - mx);
  }
  if (sxx == 0.0) throw ValidationError("weyl_slope: grid points must not all coincide");
  return sxy / sxx;
}

}  // namespace hilzeta

#endif  // HILZETA_SPECTRAL_HPP
