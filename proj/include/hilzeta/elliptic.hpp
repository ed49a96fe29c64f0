#ifndef HILZETA_ELLIPTIC_HPP
#define HILZETA_ELLIPTIC_HPP

// Finite combinatorics of elliptic fixed points: the rotation residues
// alpha_l, alpha_bar_l, exponents of the elliptic Gamma factors, heat
// coefficients b_0(m) and determinant constants C_m. Everything is exact
// until a logarithm is taken.

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/rational.hpp"

namespace hilzeta {

/// Weight of the alpha_0 (nu - alpha_0) term in b_0(m), C_m and the elliptic asymptotics (m >= 4).
///
/// Six is what the exponent sums and the small-t limit of the elliptic heat term both
/// produce. Twelve is kept so results can be compared against the alternative normalization;
/// with Twelve the closed forms do not match the underlying sums when alpha_0 != 0.
enum class Alpha0Weight : int { Six = 6, Twelve = 12 };

inline void require_even_weight(int m) {
  if (m < 2 || m % 2 != 0) throw ValidationError("weight m must be an even integer >= 2, got " + std::to_string(m));
}

struct AlphaTable {
  int nu = 2;
  int t = 1;
  int m = 2;
  std::vector<int> alpha;
  std::vector<int> alpha_bar;
};

inline int positive_mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// alpha_l = l + t(m-2)/2 and alpha_bar_l = l - t(m-2)/2, both mod nu.
inline AlphaTable alpha_table(int nu, int t, int m) {
  validate_point({nu, t, 1});
  require_even_weight(m);
  AlphaTable tab{nu, t, m, std::vector<int>(nu), std::vector<int>(nu)};
  const long long shift = static_cast<long long>(t) * (m - 2) / 2;
  for (int l = 0; l < nu; ++l) {
    tab.alpha[l] = positive_mod(l + shift, nu);
    tab.alpha_bar[l] = positive_mod(l - shift, nu);
  }
  return tab;
}

inline int alpha0(int m, int nu, int t) { return alpha_table(nu, t, m).alpha[0]; }

/// alpha_l = alpha_0 + l for l <= nu - alpha_0 - 1, alpha_0 - nu + l above.
inline bool piecewise_alpha_check(const AlphaTable& tab) {
  const int a0 = tab.alpha[0];
  for (int l = 0; l < tab.nu; ++l) {
    const int expected = (l <= tab.nu - a0 - 1) ? a0 + l : a0 - tab.nu + l;
    if (tab.alpha[l] != expected) return false;
  }
  return true;
}

struct WeightedSum {
  Rational lhs;
  Rational rhs;
};

/// lhs = sum_l l alpha_l / nu^2, rhs = (nu-1)(2nu-1)/(6nu) + alpha_0(alpha_0 - nu)/(k nu),
/// with k = 2 for Alpha0Weight::Six and k = 1 for Alpha0Weight::Twelve.
inline WeightedSum weighted_sum_identity(const AlphaTable& tab, Alpha0Weight weight = Alpha0Weight::Six) {
  const long long nu = tab.nu;
  long long s = 0;
  for (int l = 0; l < tab.nu; ++l) s += static_cast<long long>(l) * tab.alpha[l];
  const long long a0 = tab.alpha[0];
  const long long k = weight == Alpha0Weight::Six ? 2 : 1;
  return {Rational(s, nu * nu), Rational((nu - 1) * (2 * nu - 1), 6 * nu) + Rational(a0 * (a0 - nu), k * nu)};
}

inline double cosecant_sum_numeric(int nu) {
  if (nu < 2) throw ValidationError("cosecant_sum: nu must be >= 2");
  double s = 0.0;
  for (int k = 1; k < nu; ++k) s += 1.0 / (1.0 - std::cos(2.0 * std::numbers::pi * k / nu));
  return s;
}

/// sum_{k=1}^{nu-1} 1/(1 - cos(2 pi k/nu)) = (nu^2 - 1)/6, checked numerically to 1e-10.
inline Rational cosecant_sum(int nu) {
  const double numeric = cosecant_sum_numeric(nu);
  const Rational closed(static_cast<long long>(nu) * nu - 1, 6);
  if (std::abs(numeric - to_double(closed)) > 1e-10) {
    throw NumericError("cosecant sum mismatch at nu = " + std::to_string(nu));
  }
  return closed;
}

/// Coefficient c with log Z_ell ~ -c log(s/nu) for one elliptic point (count not applied):
/// (nu^2-1)/(12 nu) for m = 2, (nu^2 - 1 - w alpha_0 (nu - alpha_0))/(6 nu) for m >= 4.
inline Rational elliptic_log_coefficient(int m, const EllipticPoint& p, Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  validate_point(p);
  const long long nu = p.nu;
  if (m == 2) return Rational(nu * nu - 1, 12 * nu);
  const long long a = alpha0(m, p.nu, p.t);
  return Rational(nu * nu - 1 - static_cast<long long>(weight) * a * (nu - a), 6 * nu);
}

inline Rational b0(int m, const EllipticLocus& locus, Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  validate_locus(locus);
  Rational total(0);
  for (const auto& p : locus.points) {
    const long long nu = p.nu;
    if (m == 2) {
      total -= Rational(p.count) * Rational(nu * nu - 1, 24 * nu);
    } else {
      total -= Rational(p.count) * elliptic_log_coefficient(m, p, weight) / Rational(2);
    }
  }
  return total;
}

/// C_2 = -1/2 log eps + sum (nu^2-1)/(12 nu) log nu; C_m = sum c_m(nu, t) log nu for m >= 4.
inline double C_const(int m, const QuadraticField& field, const EllipticLocus& locus, Alpha0Weight weight = Alpha0Weight::Six) {
  require_even_weight(m);
  validate_locus(locus);
  double c = (m == 2) ? -0.5 * field.log_eps : 0.0;
  for (const auto& p : locus.points) {
    c += p.count * to_double(elliptic_log_coefficient(m, p, weight)) * std::log(static_cast<double>(p.nu));
  }
  return c;
}

/// Exponent of Gamma((s+l)/nu) in the elliptic factor: (nu-1-2l)/(2nu) for m = 2,
/// (nu-1-alpha_l-alpha_bar_l)/nu for m >= 4.
inline Rational ell_exponent(int l, int m, int nu, int t) {
  const AlphaTable tab = alpha_table(nu, t, m);
  if (l < 0 || l >= nu) throw ValidationError("ell_exponent: l out of range");
  if (m == 2) return Rational(nu - 1 - 2 * l, 2 * nu);
  return Rational(nu - 1 - tab.alpha[l] - tab.alpha_bar[l], nu);
}

}  // namespace hilzeta

#endif  // HILZETA_ELLIPTIC_HPP
