#ifndef HILZETA_GEODESICS_HPP
#define HILZETA_GEODESICS_HPP

// Elements of PSL(2, O_K), their type under the trace classification, and a
// bounded-height search for hyperbolic-elliptic conjugacy classes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/parallel.hpp"

namespace hilzeta {

struct GroupElement {
  AlgebraicInteger a, b, c, d;

  AlgebraicInteger det() const { return a * d - b * c; }
  AlgebraicInteger trace() const { return a + d; }
  bool unimodular() const { return det() == AlgebraicInteger::integer(1, a.D); }

  GroupElement galois() const { return {galois_conjugate(a), galois_conjugate(b), galois_conjugate(c), galois_conjugate(d)}; }
  GroupElement inverse() const { return {d, -b, -c, a}; }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  static GroupElement identity(std::int64_t D) {
    const auto one = AlgebraicInteger::integer(1, D);
    const auto zero = AlgebraicInteger::integer(0, D);
    return {one, zero, zero, one};
  }
};

enum class ElementTag { Identity, Hyperbolic, Elliptic, HyperbolicElliptic, EllipticHyperbolic, Parabolic };
enum class HyperbolicType { Type1, Type2 };

struct ElementClass {
  ElementTag tag = ElementTag::Identity;
  std::optional<HyperbolicType> hyperbolic_subtype;
};

inline const char* to_string(ElementTag tag) {
  switch (tag) {
    case ElementTag::Identity: return "identity";
    case ElementTag::Hyperbolic: return "hyperbolic";
    case ElementTag::Elliptic: return "elliptic";
    case ElementTag::HyperbolicElliptic: return "hyperbolic-elliptic";
    case ElementTag::EllipticHyperbolic: return "elliptic-hyperbolic";
    case ElementTag::Parabolic: return "parabolic";
  }
  return "?";
}

namespace detail {

/// -1, 0, +1 as |t| <, =, > 2 for t = (x + y sqrt D)/2 in the real embedding.
inline int compare_abs_trace(const AlgebraicInteger& t) {
  if (t.y == 0 && (t.x == 4 || t.x == -4)) return 0;
  const bool above = sign_surd(static_cast<__int128>(t.x) - 4, t.y, t.D) > 0;
  const bool below = sign_surd(static_cast<__int128>(t.x) + 4, t.y, t.D) < 0;
  return (above || below) ? 1 : -1;
}

/// Whether n (with n > 0 and n' > 0) is the square of an element of O_K.
inline bool is_square_in_ring(const AlgebraicInteger& n) {
  const double r = std::sqrt(std::max(0.0, n.value()));
  const double rp = std::sqrt(std::max(0.0, galois_conjugate(n).value()));
  const double sqrtD = std::sqrt(static_cast<double>(n.D));
  for (double sp : {1.0, -1.0}) {
    const auto u = static_cast<std::int64_t>(std::llround(r + sp * rp));
    const auto v = static_cast<std::int64_t>(std::llround((r - sp * rp) / sqrtD));
    const AlgebraicInteger cand{u, v, n.D};
    if (cand.well_formed() && cand * cand == n) return true;
  }
  return false;
}

}  // namespace detail

/// Type of an element by the traces of its two real embeddings.
/// Hyperbolic elements are split into Type2 (a fixed point lies in K or at infinity,
/// i.e. it is shared with a parabolic element) and Type1.
inline ElementClass classify(const GroupElement& g) {
  if (!g.unimodular()) throw ValidationError("classify: determinant is not 1");
  const auto one = AlgebraicInteger::integer(1, g.a.D);
  const auto zero = AlgebraicInteger::integer(0, g.a.D);
  if (g.b == zero && g.c == zero && (g.a == one || g.a == -one) && g.d == g.a) return {ElementTag::Identity, {}};

  const AlgebraicInteger t = g.trace();
  const int c1 = detail::compare_abs_trace(t);
  const int c2 = detail::compare_abs_trace(galois_conjugate(t));
  if (c1 == 0 && c2 == 0) return {ElementTag::Parabolic, {}};
  if (c1 == 0 || c2 == 0) throw NumericError("classify: mixed parabolic type, impossible for an irreducible group");
  if (c1 > 0 && c2 > 0) {
    const bool rational_fixed_point = (g.c == zero) || detail::is_square_in_ring(t * t - AlgebraicInteger::integer(4, g.a.D));
    return {ElementTag::Hyperbolic, rational_fixed_point ? HyperbolicType::Type2 : HyperbolicType::Type1};
  }
  if (c1 < 0 && c2 < 0) return {ElementTag::Elliptic, {}};
  if (c1 > 0) return {ElementTag::HyperbolicElliptic, {}};
  return {ElementTag::EllipticHyperbolic, {}};
}

/// x mod pi in [0, pi).
inline double fold_angle(double x) {
  double r = std::fmod(x, std::numbers::pi);
  if (r < 0) r += std::numbers::pi;
  return r;
}

inline double angle_distance_mod_pi(double x, double y) {
  const double r = fold_angle(x - y);
  return std::min(r, std::numbers::pi - r);
}

struct HeInvariants {
  double norm = 0.0;
  double omega = 0.0;
};

/// N(gamma) from the hyperbolic trace and the rotation angle of gamma' mod pi.
/// The orientation of the rotation is read off the sign of c', so gamma^-1 gives pi - omega.
inline HeInvariants he_invariants(const GroupElement& g) {
  if (classify(g).tag != ElementTag::HyperbolicElliptic) throw ValidationError("he_invariants: element is not hyperbolic-elliptic");
  const double t = std::abs(g.trace().value());
  const double tp = galois_conjugate(g.trace()).value();
  const double root = 0.5 * (t + std::sqrt(t * t - 4.0));
  const double cp = galois_conjugate(g.c).value();
  const double half = 0.5 * tp;
  const double theta = std::atan2((cp > 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - half * half)), half);
  return {root * root, fold_angle(theta)};
}

struct GeodesicClass {
  double norm = 0.0;
  double omega = 0.0;
  int mult = 1;
  bool primitive = true;
  double primitive_norm = 0.0;

  friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
};

inline void validate_geodesic(const GeodesicClass& g) {
  if (!(g.norm > 1.0)) throw ValidationError("geodesic norm must be > 1");
  if (!(g.omega > 0.0 && g.omega < std::numbers::pi)) throw ValidationError("geodesic omega must lie in (0, pi)");
  if (g.mult < 1) throw ValidationError("geodesic multiplicity must be positive");
  if (!(g.primitive_norm > 1.0)) throw ValidationError("primitive norm must be > 1");
  if (g.primitive && std::abs(g.primitive_norm - g.norm) > 1e-12 * g.norm) {
    throw ValidationError("primitive class must have primitive_norm == norm");
  }
}

/// All elements (x + y sqrt D)/2 of O_K with |x|, |y| <= height.
inline std::vector<AlgebraicInteger> height_box(std::int64_t D, int height) {
  std::vector<AlgebraicInteger> out;
  for (std::int64_t x = -height; x <= height; ++x) {
    for (std::int64_t y = -height; y <= height; ++y) {
      AlgebraicInteger e{x, y, D};
      if (e.well_formed()) out.push_back(e);
    }
  }
  return out;
}

/// Calls visit(g) for every unimodular matrix with all entries in the height box.
/// Only matrices whose upper-left entry is box[a_index] are visited.
template <typename Visit>
void for_each_in_box(const std::vector<AlgebraicInteger>& box, int height, std::size_t a_index, Visit&& visit) {
  const std::int64_t D = box.front().D;
  const auto one = AlgebraicInteger::integer(1, D);
  const auto zero = AlgebraicInteger::integer(0, D);
  auto in_box = [height](const AlgebraicInteger& e) { return std::abs(e.x) <= height && std::abs(e.y) <= height; };
  const AlgebraicInteger& a = box[a_index];
  for (const auto& d : box) {
    const AlgebraicInteger ad1 = a * d - one;
    for (const auto& c : box) {
      if (c == zero) {
        if (!(ad1 == zero)) continue;
        for (const auto& b : box) visit(GroupElement{a, b, c, d});
        continue;
      }
      const auto b = divide_exact(ad1, c);
      if (b && in_box(*b)) visit(GroupElement{a, *b, c, d});
    }
  }
}

inline constexpr double kClassTolerance = 1e-9;

/// Marks each class primitive unless it matches (N0^k, k omega0 mod pi), k >= 2, for a
/// smaller primitive class already in the list. Input must be sorted by norm.
inline void mark_primitivity(std::vector<GeodesicClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& g = classes[i];
    g.primitive = true;
    g.primitive_norm = g.norm;
    const double ln = std::log(g.norm);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& p = classes[j];
      if (!p.primitive) continue;
      const double l0 = std::log(p.norm);
      const double k = std::round(ln / l0);
      if (k < 2) continue;
      if (std::abs(ln - k * l0) > kClassTolerance * ln) continue;
      if (angle_distance_mod_pi(k * p.omega, g.omega) > kClassTolerance * k) continue;
      g.primitive = false;
      g.primitive_norm = p.norm;
      break;
    }
  }
}

/// Hyperbolic-elliptic classes among unimodular matrices with entries in the height box,
/// deduplicated by (norm, omega). Multiplicities are lower bounds (always 1 here).
inline std::vector<GeodesicClass> enumerate_he(const QuadraticField& field, int height, unsigned threads = 0) {
  if (height < 1) throw ValidationError("enumerate_he: height must be >= 1");
  const auto box = height_box(field.D, height);
  const double work = std::pow(static_cast<double>(box.size()), 3.0);
  if (work > 5e9) throw ValidationError("enumerate_he: search space too large at height " + std::to_string(height));

  auto scan_rows = [&](std::size_t begin, std::size_t end) {
    std::vector<HeInvariants> found;
    for (std::size_t i = begin; i < end; ++i) {
      for_each_in_box(box, height, i, [&](const GroupElement& g) {
        if (classify(g).tag == ElementTag::HyperbolicElliptic) found.push_back(he_invariants(g));
      });
    }
    return found;
  };
  std::vector<HeInvariants> all = parallel_chunks<HeInvariants>(box.size(), threads, scan_rows);

  std::sort(all.begin(), all.end(), [](const HeInvariants& x, const HeInvariants& y) {
    return x.norm != y.norm ? x.norm < y.norm : x.omega < y.omega;
  });
  std::vector<GeodesicClass> classes;
  for (const auto& inv : all) {
    bool dup = false;
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      if (inv.norm - it->norm > kClassTolerance * inv.norm) break;
      if (angle_distance_mod_pi(inv.omega, it->omega) <= kClassTolerance) {
        dup = true;
        break;
      }
    }
    if (!dup) classes.push_back({inv.norm, inv.omega, 1, true, inv.norm});
  }
  std::sort(classes.begin(), classes.end(), [](const GeodesicClass& x, const GeodesicClass& y) {
    return x.norm != y.norm ? x.norm < y.norm : x.omega < y.omega;
  });
  mark_primitivity(classes);
  return classes;
}

/// (N0^k, k omega0 mod pi) for each primitive entry while N0^k <= norm_cutoff.
inline std::vector<GeodesicClass> expand_powers(const std::vector<GeodesicClass>& primitives, double norm_cutoff) {
  if (!(norm_cutoff > 1.0)) throw ValidationError("expand_powers: cutoff must be > 1");
  std::vector<GeodesicClass> out;
  for (const auto& p : primitives) {
    if (!p.primitive) continue;
    double n = p.norm;
    for (int k = 1; n <= norm_cutoff; ++k) {
      out.push_back({n, fold_angle(k * p.omega), p.mult, k == 1, p.norm});
      n *= p.norm;
    }
  }
  std::sort(out.begin(), out.end(), [](const GeodesicClass& x, const GeodesicClass& y) {
    return x.norm != y.norm ? x.norm < y.norm : x.omega < y.omega;
  });
  return out;
}

/// True when every power N0^k <= max norm of each primitive entry is present.
inline bool is_power_closed(const std::vector<GeodesicClass>& list) {
  double max_norm = 1.0;
  for (const auto& g : list) max_norm = std::max(max_norm, g.norm);
  for (const auto& p : list) {
    if (!p.primitive) continue;
    double n = p.norm * p.norm;
    for (int k = 2; n <= max_norm * (1.0 + kClassTolerance); ++k, n *= p.norm) {
      const double w = fold_angle(k * p.omega);
      const bool present = std::any_of(list.begin(), list.end(), [&](const GeodesicClass& g) {
        return std::abs(g.norm - n) <= kClassTolerance * n && angle_distance_mod_pi(g.omega, w) <= kClassTolerance * k;
      });
      if (!present) return false;
    }
  }
  return true;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline constexpr const char* kGeodesicCsvHeader = "norm,omega,mult,primitive,primitive_norm";

inline void write_geodesics(std::ostream& out, const std::vector<GeodesicClass>& list) {
  out << kGeodesicCsvHeader << '\n';
  for (const auto& g : list) {
    out << format_double(g.norm) << ',' << format_double(g.omega) << ',' << g.mult << ',' << (g.primitive ? 1 : 0) << ','
        << format_double(g.primitive_norm) << '\n';
  }
}

inline void save_geodesics(const std::string& path, const std::vector<GeodesicClass>& list) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write geodesics file: " + path);
  write_geodesics(out, list);
  if (!out) throw IoError("write failed: " + path);
}

inline std::vector<GeodesicClass> read_geodesics(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("line 1: missing geodesic CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kGeodesicCsvHeader) throw ValidationError("line 1: expected header '" + std::string(kGeodesicCsvHeader) + "'");
  std::vector<GeodesicClass> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (cells.size() != 5) throw ValidationError(where + "expected 5 fields");
    GeodesicClass g;
    try {
      std::size_t used = 0;
      g.norm = std::stod(cells[0], &used);
      if (used != cells[0].size()) throw std::invalid_argument("norm");
      g.omega = std::stod(cells[1], &used);
      if (used != cells[1].size()) throw std::invalid_argument("omega");
      g.mult = std::stoi(cells[2], &used);
      if (used != cells[2].size()) throw std::invalid_argument("mult");
      if (cells[3] != "0" && cells[3] != "1") throw std::invalid_argument("primitive");
      g.primitive = cells[3] == "1";
      g.primitive_norm = std::stod(cells[4], &used);
      if (used != cells[4].size()) throw std::invalid_argument("primitive_norm");
    } catch (const std::logic_error& e) {
      throw ValidationError(where + "malformed field '" + e.what() + "'");
    }
    try {
      validate_geodesic(g);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
    out.push_back(g);
  }
  return out;
}

inline std::vector<GeodesicClass> load_geodesics(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open geodesics file: " + path);
  return read_geodesics(in);
}

}  // namespace hilzeta

#endif  // HILZETA_GEODESICS_HPP
