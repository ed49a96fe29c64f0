#ifndef HILZETA_RATIONAL_HPP
#define HILZETA_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace hilzeta {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace hilzeta

#endif  // HILZETA_RATIONAL_HPP
