#ifndef HILZETA_VERIFY_HPP
#define HILZETA_VERIFY_HPP

// Self-consistency suite run by `hilzeta verify`. Each check reports a measured
// quantity, its tolerance and a short topic label.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hilzeta/elliptic.hpp"
#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/geodesics.hpp"
#include "hilzeta/special_functions.hpp"
#include "hilzeta/spectral.hpp"
#include "hilzeta/surface_config.hpp"
#include "hilzeta/zeta.hpp"

namespace hilzeta {

struct CheckResult {
  std::string name;
  std::string topic;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline CheckResult bound_check(std::string name, std::string topic, double measured, double tol, std::string detail = {}) {
  return {std::move(name), std::move(topic), measured, tol, std::isfinite(measured) && measured <= tol, std::move(detail)};
}

/// Largest step |r_{i+1}| - |r_i|; negative means strictly decreasing magnitudes.
inline double largest_increase(const std::vector<double>& r) {
  double worst = -INFINITY;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) worst = std::max(worst, std::abs(r[i + 1]) - std::abs(r[i]));
  return worst;
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : " ") + format_double(x);
  return s;
}

/// Exhaustive sweep over nu <= nu_max, coprime t, even m <= m_max. Returns the number of failures.
inline int alpha_sweep(int nu_max, int m_max, Alpha0Weight weight) {
  int failures = 0;
  for (int nu = 2; nu <= nu_max; ++nu) {
    for (int t = 1; t < nu; ++t) {
      if (std::gcd(t, nu) != 1) continue;
      for (int m = 2; m <= m_max; m += 2) {
        const auto tab = alpha_table(nu, t, m);
        std::vector<int> a = tab.alpha;
        std::vector<int> b = tab.alpha_bar;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        bool ok = true;
        for (int l = 0; l < nu; ++l) ok = ok && a[l] == l && b[l] == l;
        Rational sum(0);
        for (int l = 0; l < nu; ++l) sum += ell_exponent(l, m, nu, t);
        ok = ok && sum.numerator() == 0 && piecewise_alpha_check(tab);
        const auto ws = weighted_sum_identity(tab, weight);
        ok = ok && ws.lhs == ws.rhs;
        if (!ok) ++failures;
      }
    }
  }
  return failures;
}

}  // namespace detail

/// Runs every check on the configuration. Geodesic data may be empty.
inline std::vector<CheckResult> run_verification(const SurfaceConfig& cfg, const std::vector<GeodesicClass>& geodesics,
                                                 int k_max = 8) {
  const auto& F = cfg.field;
  const auto& L = cfg.locus;
  std::vector<CheckResult> out;

  try {
    const Rational e = validate_surface(F, L);
    out.push_back({"euler-characteristic", "surface parity", to_double(e), 0.0, true, "E = " + to_string(e)});
  } catch (const ParityViolation& ex) {
    out.push_back({"euler-characteristic", "surface parity", to_double(euler_characteristic(F, L)), 0.0, false, ex.what()});
  }

  {
    std::vector<double> r;
    for (double z : {10.0, 30.0, 100.0, 300.0}) r.push_back(gamma2_stirling_remainder(z));
    out.push_back(detail::bound_check("stirling-remainder-size", "double gamma asymptotics", std::abs(r[2]), 1e-2, detail::join(r)));
    auto c = detail::bound_check("stirling-remainder-trend", "double gamma asymptotics", detail::largest_increase(r), 0.0, detail::join(r));
    c.passed = c.measured < 0.0;
    out.push_back(c);
  }
  {
    double worst = 0.0;
    for (double x : {0.5, 1.5, 2.5, 4.0}) worst = std::max(worst, std::abs(log_gamma2(x) - double_zeta_oracle(x)));
    out.push_back(detail::bound_check("double-gamma-oracle", "double gamma definition", worst, 1e-6));
  }
  {
    const int failures = detail::alpha_sweep(30, 20, Alpha0Weight::Six);
    out.push_back(detail::bound_check("alpha-combinatorics", "elliptic residues", failures, 0.0, "nu <= 30, m <= 20"));
  }
  {
    double worst = 0.0;
    for (int nu = 2; nu <= 50; ++nu) {
      worst = std::max(worst, std::abs(cosecant_sum_numeric(nu) - (nu * nu - 1.0) / 6.0));
    }
    out.push_back(detail::bound_check("cosecant-identity", "elliptic residues", worst, 1e-10));
  }
  for (int m : {2, 4}) {
    std::vector<double> r;
    for (double s : {10.0, 20.0, 40.0}) r.push_back(asymptotic_remainder(s, m, F, L));
    const double r30 = asymptotic_remainder(30.0, m, F, L);
    const std::string tag = "m" + std::to_string(m);
    out.push_back(detail::bound_check("asymptotic-remainder-" + tag, "completed zeta asymptotics", std::abs(r30), 1e-2, detail::join(r)));
    auto c = detail::bound_check("asymptotic-trend-" + tag, "completed zeta asymptotics", detail::largest_increase(r), 0.0, detail::join(r));
    c.passed = c.measured < 0.0;
    out.push_back(c);
  }
  for (int m : {2, 4}) {
    const double lim = elliptic_limit(L, m);
    const double closed = to_double(b0(m, L));
    out.push_back(detail::bound_check("elliptic-limit-b0-m" + std::to_string(m), "heat coefficients", std::abs(lim - closed), 1e-6,
                                      "limit " + format_double(lim) + ", closed form " + format_double(closed)));
  }
  {
    std::vector<std::pair<double, double>> samples;
    for (double t : {0.02, 0.01, 0.005}) samples.emplace_back(t, theta_estimate(F, L, geodesics, 2, t));
    const auto fit = small_t_fit(samples);
    const auto ref = theta_coefficients(F, L, 2);
    out.push_back(detail::bound_check("small-t-fit-inverse", "heat coefficients", std::abs(fit.c_minus1 / ref.c_minus1 - 1.0), 1e-4,
                                      "fit " + format_double(fit.c_minus1) + ", closed form " + format_double(ref.c_minus1)));
    out.push_back(detail::bound_check("small-t-fit-half", "heat coefficients", std::abs(fit.c_half - ref.c_half), 1e-3,
                                      "fit " + format_double(fit.c_half) + ", closed form " + format_double(ref.c_half)));
    out.push_back(detail::bound_check("small-t-fit-constant", "heat coefficients", std::abs(fit.c_0 - ref.c_0), 1e-2,
                                      "fit " + format_double(fit.c_0) + ", closed form " + format_double(ref.c_0)));
  }
  {
    double worst = 0.0;
    constexpr double h = 1e-4;
    for (double s : {2.0, 3.0, 5.0}) {
      for (double p : {0.0, 0.5, 1.0}) {
        const double fd = (eta({h, 0.0}, s, p) - eta({-h, 0.0}, s, p)).real() / (2.0 * h);
        worst = std::max(worst, std::abs(fd - eta_deriv0(s, p)));
      }
    }
    out.push_back(detail::bound_check("eta-derivatives", "spectral zeta continuation", worst, 1e-6));
  }
  {
    double worst = 0.0;
    for (double s : {2.0, 3.5, 10.0}) {
      for (int m : {2, 4, 6}) worst = std::max(worst, telescoping_residual(s, m, F, L, geodesics, k_max));
    }
    out.push_back(detail::bound_check("telescoping", "determinant expressions", worst, 1e-12));
  }
  {
    const double v = r2_sech2_integral();
    out.push_back(detail::bound_check("sech2-integral", "quadrature", std::abs(v - 1.0 / (12.0 * std::numbers::pi)), 1e-10));
  }
  {
    constexpr double t = 0.01;
    const double le = F.log_eps;
    const double gauss = 1.0 / std::sqrt(4.0 * std::numbers::pi * t);
    double worst_ratio = 0.0;
    for (int m : {2, 4}) {
      const double hs = parabolic_and_hyp2_terms(F, m, t).HS;
      const double hs_bound = 2.0 * le * gauss * std::exp(-le * le / t) / (F.eps_value() - 1.0);
      worst_ratio = std::max(worst_ratio, std::abs(hs) / hs_bound);
      if (!geodesics.empty()) {
        double n_min = INFINITY;
        double pref = 0.0;
        for (const auto& g : geodesics) {
          n_min = std::min(n_min, g.norm);
          pref += std::log(g.primitive_norm) * g.mult / (std::sqrt(g.norm) - 1.0 / std::sqrt(g.norm));
        }
        const double c = 0.25 * std::log(n_min) * std::log(n_min);
        const double he_bound = pref * gauss * std::exp(-c / t);
        worst_ratio = std::max(worst_ratio, std::abs(he_term(geodesics, m, t).value) / he_bound);
      }
    }
    out.push_back(detail::bound_check("exponential-decay", "hyperbolic heat terms", worst_ratio, 1.0, "ratio to e^{-c/t} bound at t = 0.01"));
  }
  return out;
}

}  // namespace hilzeta

#endif  // HILZETA_VERIFY_HPP
