#ifndef HILZETA_FIELD_HPP
#define HILZETA_FIELD_HPP

// Exact arithmetic in a real quadratic field K = Q(sqrt d) of class number one.
//
// Elements of the ring of integers are stored as (x + y*sqrt(D))/2 with D the
// field discriminant and x = y*D (mod 2). All products go through __int128 and
// are checked against int64 overflow.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hilzeta/errors.hpp"
#include "hilzeta/rational.hpp"

namespace hilzeta {

namespace detail {

inline std::int64_t narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw NumericError(std::string("int64 overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

/// Sign of p + q*sqrt(D) for D > 0 not a perfect square.
inline int sign_surd(__int128 p, __int128 q, std::int64_t D) {
  const int sp = (p > 0) - (p < 0);
  const int sq = (q > 0) - (q < 0);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const __int128 lhs = p * p;
  const __int128 rhs = q * q * D;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

}  // namespace detail

/// (x + y*sqrt(D))/2 in the ring of integers of Q(sqrt D).
struct AlgebraicInteger {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t D = 5;

  static AlgebraicInteger integer(std::int64_t n, std::int64_t D) { return {2 * n, 0, D}; }

  bool well_formed() const { return ((x - y * D) % 2) == 0; }

  double value() const {
    return static_cast<double>((static_cast<long double>(x) + static_cast<long double>(y) * std::sqrt(static_cast<long double>(D))) / 2.0L);
  }

  /// Absolute norm a*a' = (x^2 - D y^2)/4.
  std::int64_t norm() const {
    const __int128 n = static_cast<__int128>(x) * x - static_cast<__int128>(D) * y * y;
    return detail::narrow(n / 4, "norm");
  }

  /// Absolute trace a + a' = x.
  std::int64_t trace() const { return x; }

  /// Sign of the real embedding a (not a').
  int sign() const { return detail::sign_surd(x, y, D); }

  friend bool operator==(const AlgebraicInteger&, const AlgebraicInteger&) = default;

  friend AlgebraicInteger operator+(const AlgebraicInteger& a, const AlgebraicInteger& b) {
    return {detail::narrow(static_cast<__int128>(a.x) + b.x, "add"), detail::narrow(static_cast<__int128>(a.y) + b.y, "add"), a.D};
  }
  friend AlgebraicInteger operator-(const AlgebraicInteger& a, const AlgebraicInteger& b) {
    return {detail::narrow(static_cast<__int128>(a.x) - b.x, "sub"), detail::narrow(static_cast<__int128>(a.y) - b.y, "sub"), a.D};
  }
  friend AlgebraicInteger operator-(const AlgebraicInteger& a) { return {-a.x, -a.y, a.D}; }
  friend AlgebraicInteger operator*(const AlgebraicInteger& a, const AlgebraicInteger& b) {
    const __int128 nx = static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y * a.D;
    const __int128 ny = static_cast<__int128>(a.x) * b.y + static_cast<__int128>(a.y) * b.x;
    return {detail::narrow(nx / 2, "mul"), detail::narrow(ny / 2, "mul"), a.D};
  }
};

/// sigma: sqrt(D) -> -sqrt(D).
inline AlgebraicInteger galois_conjugate(const AlgebraicInteger& a) { return {a.x, -a.y, a.D}; }

/// a / b if the quotient lies in the ring of integers, otherwise nullopt.
inline std::optional<AlgebraicInteger> divide_exact(const AlgebraicInteger& a, const AlgebraicInteger& b) {
  const std::int64_t n = b.norm();
  if (n == 0) throw ValidationError("division by zero in O_K");
  // a/b = a * b' / N(b); a*b' = (X + Y sqrt D)/2, quotient = (X/n + (Y/n) sqrt D)/2.
  const AlgebraicInteger p = a * galois_conjugate(b);
  if (p.x % n != 0 || p.y % n != 0) return std::nullopt;
  AlgebraicInteger q{p.x / n, p.y / n, a.D};
  if (!q.well_formed()) return std::nullopt;
  return q;
}

inline bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t n = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

inline bool is_fundamental_discriminant(std::int64_t D) {
  if (D <= 1) return false;
  if (D % 4 == 1) return is_squarefree(D);
  if (D % 4 != 0) return false;
  const std::int64_t d = D / 4;
  return (d % 4 == 2 || d % 4 == 3) && is_squarefree(d);
}

/// Smallest unit (x + y sqrt D)/2 > 1, searching y = 1, 2, ... up to max_y.
inline AlgebraicInteger fundamental_unit(std::int64_t D, std::int64_t max_y = 2'000'000'000) {
  for (std::int64_t y = 1; y <= max_y; ++y) {
    const __int128 dy2 = static_cast<__int128>(D) * y * y;
    if (dy2 > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) - 4) {
      throw NumericError("fundamental unit search overflowed at y = " + std::to_string(y) + " for D = " + std::to_string(D));
    }
    for (int s : {-4, 4}) {
      const auto x2 = static_cast<std::int64_t>(dy2 + s);
      if (detail::is_square(x2)) {
        const auto x = detail::isqrt(x2);
        if (x > 0) return {x, y, D};
      }
    }
  }
  throw NumericError("fundamental unit not found with y <= " + std::to_string(max_y) + " for D = " + std::to_string(D));
}

/// zeta_K(-1) = (1/60) * sum over b^2 < D, b = D (mod 2) of sigma_1((D - b^2)/4).
inline Rational zeta_K_minus1(std::int64_t D) {
  if (!is_fundamental_discriminant(D)) {
    throw ValidationError("not a fundamental discriminant of a real quadratic field: " + std::to_string(D));
  }
  auto sigma1 = [](std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t k = 1; k * k <= n; ++k) {
      if (n % k == 0) {
        s += k;
        if (k != n / k) s += n / k;
      }
    }
    return s;
  };
  std::int64_t total = 0;
  const std::int64_t parity = D % 2;
  const std::int64_t r = detail::isqrt(D);
  for (std::int64_t b = -r; b <= r; ++b) {
    if (b * b >= D) continue;
    if (((b % 2) + 2) % 2 != parity) continue;
    total += sigma1((D - b * b) / 4);
  }
  return Rational(total, 60);
}

struct QuadraticField {
  std::int64_t d = 5;
  std::int64_t D = 5;
  AlgebraicInteger eps;
  double log_eps = 0.0;
  Rational zeta_m1;

  double eps_value() const { return eps.value(); }
  double zeta_m1_value() const { return to_double(zeta_m1); }
};

/// Builds K = Q(sqrt d). Class number one is the caller's responsibility.
inline QuadraticField make_field(std::int64_t d) {
  if (d < 2) throw ValidationError("d must be >= 2, got " + std::to_string(d));
  if (!is_squarefree(d)) throw ValidationError("d is not squarefree: " + std::to_string(d));
  QuadraticField f;
  f.d = d;
  f.D = (d % 4 == 1) ? d : 4 * d;
  f.eps = fundamental_unit(f.D);
  const long double sq = std::sqrt(static_cast<long double>(f.D));
  f.log_eps = static_cast<double>(std::log((static_cast<long double>(f.eps.x) + f.eps.y * sq) / 2.0L));
  f.zeta_m1 = zeta_K_minus1(f.D);
  return f;
}

/// One elliptic fixed-point type (nu, t) occurring `count` times.
struct EllipticPoint {
  int nu = 2;
  int t = 1;
  int count = 1;
  friend bool operator==(const EllipticPoint&, const EllipticPoint&) = default;
};

struct EllipticLocus {
  std::vector<EllipticPoint> points;
};

inline void validate_point(const EllipticPoint& p) {
  const std::string tag = "(nu=" + std::to_string(p.nu) + ", t=" + std::to_string(p.t) + ", count=" + std::to_string(p.count) + ")";
  if (p.nu < 2) throw ValidationError("elliptic entry " + tag + ": nu must be >= 2");
  if (p.t < 1 || p.t >= p.nu) throw ValidationError("elliptic entry " + tag + ": need 1 <= t < nu");
  if (std::gcd(p.t, p.nu) != 1) throw ValidationError("elliptic entry " + tag + ": gcd(t, nu) != 1");
  if (p.count < 1) throw ValidationError("elliptic entry " + tag + ": count must be positive");
}

inline void validate_locus(const EllipticLocus& locus) {
  for (const auto& p : locus.points) validate_point(p);
}

/// E(X_K) = 2 zeta_K(-1) + sum_j (nu_j - 1)/nu_j, counts expanded.
inline Rational euler_characteristic(const QuadraticField& field, const EllipticLocus& locus) {
  validate_locus(locus);
  Rational e = field.zeta_m1 * Rational(2);
  for (const auto& p : locus.points) e += Rational(p.count) * Rational(p.nu - 1, p.nu);
  return e;
}

/// Returns E(X_K) if it is a positive even integer, throws ParityViolation otherwise.
inline Rational validate_surface(const QuadraticField& field, const EllipticLocus& locus) {
  const Rational e = euler_characteristic(field, locus);
  if (e.denominator() != 1 || e.numerator() <= 0 || e.numerator() % 2 != 0) {
    throw ParityViolation("Euler characteristic E(X_K) = " + to_string(e) + " is not a positive even integer");
  }
  return e;
}

}  // namespace hilzeta

#endif  // HILZETA_FIELD_HPP
