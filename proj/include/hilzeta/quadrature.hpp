#ifndef HILZETA_QUADRATURE_HPP
#define HILZETA_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hilzeta/errors.hpp"

namespace hilzeta {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive 61-point Gauss-Kronrod on [a, b] (either end may be infinite).
/// Throws NumericError when the error estimate exceeds abs_tol.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-10, unsigned max_depth = 25) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, 1e-14, &err);
  if (!std::isfinite(v) || err > abs_tol) {
    throw NumericError("quadrature did not converge on [" + std::to_string(a) + ", " + std::to_string(b) +
                       "]: error estimate " + std::to_string(err));
  }
  return {v, err};
}

struct ComplexQuadratureResult {
  std::complex<double> value;
  double error = 0.0;
};

template <typename F>
ComplexQuadratureResult integrate_complex(F&& f, double a, double b, double abs_tol = 1e-10, unsigned max_depth = 25) {
  const auto re = integrate([&](double u) { return f(u).real(); }, a, b, abs_tol, max_depth);
  const auto im = integrate([&](double u) { return f(u).imag(); }, a, b, abs_tol, max_depth);
  return {{re.value, im.value}, re.error + im.error};
}

}  // namespace hilzeta

#endif  // HILZETA_QUADRATURE_HPP
