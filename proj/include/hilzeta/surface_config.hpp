#ifndef HILZETA_SURFACE_CONFIG_HPP
#define HILZETA_SURFACE_CONFIG_HPP

// Surface configuration files:
//
//   d = 5
//   elliptic = { nu = 2, t = 1, count = 2 }
//   elliptic = { nu = 3, t = 1, count = 2 }
//
// `d` comes first and exactly once. Blank lines and lines starting with '#'
// are skipped. Anything else is an error carrying the line number.

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include "hilzeta/errors.hpp"
#include "hilzeta/field.hpp"

namespace hilzeta {

struct SurfaceConfig {
  QuadraticField field;
  EllipticLocus locus;
};

namespace detail {

inline int parse_int(const std::string& s, int line_no, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) throw std::out_of_range(key);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ValidationError("line " + std::to_string(line_no) + ": invalid integer for '" + key + "': " + s);
  }
}

}  // namespace detail

inline SurfaceConfig parse_surface_config(const std::string& text) {
  static const std::regex d_line(R"(^\s*d\s*=\s*(-?[0-9]+)\s*$)");
  static const std::regex ell_line(R"(^\s*elliptic\s*=\s*\{(.*)\}\s*$)");
  static const std::regex kv(R"(^\s*([A-Za-z_]+)\s*=\s*(-?[0-9]+)\s*$)");
  static const std::regex skip(R"(^\s*(#.*)?$)");

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_d = false;
  std::int64_t d = 0;
  EllipticLocus locus;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, skip)) continue;
    if (std::regex_match(line, m, d_line)) {
      if (have_d) throw ValidationError("line " + std::to_string(line_no) + ": duplicate 'd'");
      if (!locus.points.empty()) throw ValidationError("line " + std::to_string(line_no) + ": 'd' must precede elliptic blocks");
      d = detail::parse_int(m[1].str(), line_no, "d");
      have_d = true;
      continue;
    }
    if (std::regex_match(line, m, ell_line)) {
      if (!have_d) throw ValidationError("line " + std::to_string(line_no) + ": elliptic block before 'd'");
      std::map<std::string, int> fields;
      std::stringstream body(m[1].str());
      std::string item;
      while (std::getline(body, item, ',')) {
        std::smatch km;
        if (!std::regex_match(item, km, kv)) {
          throw ValidationError("line " + std::to_string(line_no) + ": malformed elliptic field '" + item + "'");
        }
        const std::string key = km[1].str();
        if (key != "nu" && key != "t" && key != "count") {
          throw ValidationError("line " + std::to_string(line_no) + ": unknown elliptic key '" + key + "'");
        }
        if (fields.count(key)) throw ValidationError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        fields[key] = detail::parse_int(km[2].str(), line_no, key);
      }
      for (const char* key : {"nu", "t", "count"}) {
        if (!fields.count(key)) throw ValidationError("line " + std::to_string(line_no) + ": missing elliptic key '" + key + "'");
      }
      EllipticPoint p{fields["nu"], fields["t"], fields["count"]};
      try {
        validate_point(p);
      } catch (const ValidationError& e) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
      }
      locus.points.push_back(p);
      continue;
    }
    throw ValidationError("line " + std::to_string(line_no) + ": unrecognized line '" + line + "'");
  }
  if (!have_d) throw ValidationError("missing 'd = <int>'");
  return {make_field(d), std::move(locus)};
}

inline SurfaceConfig load_surface_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open surface config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_surface_config(ss.str());
}

}  // namespace hilzeta

#endif  // HILZETA_SURFACE_CONFIG_HPP
