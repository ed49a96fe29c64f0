#ifndef HILZETA_IO_HPP
#define HILZETA_IO_HPP

// JSON records for zeta factorizations and heat-trace breakdowns, and the
// breakdown CSV row format.

#include <ostream>
#include <string>

#include "json.hpp"

#include "hilzeta/geodesics.hpp"
#include "hilzeta/spectral.hpp"
#include "hilzeta/zeta.hpp"

namespace hilzeta {

using Json = nlohmann::ordered_json;

inline Json to_json_record(const ZetaFactorization& z) {
  Json j;
  j["s_re"] = z.s.real();
  j["s_im"] = z.s.imag();
  j["m"] = z.m;
  j["log_he_re"] = z.log_he.real();
  j["log_he_im"] = z.log_he.imag();
  j["log_id"] = z.log_id;
  j["log_ell"] = z.log_ell;
  j["log_parsct"] = z.log_parsct ? Json(*z.log_parsct) : Json(nullptr);
  j["log_hyp2sct"] = z.log_hyp2sct;
  j["log_total_re"] = z.log_total.real();
  j["log_total_im"] = z.log_total.imag();
  j["truncation_norm"] = z.truncation_norm;
  return j;
}

inline ZetaFactorization zeta_from_json(const Json& j) {
  ZetaFactorization z;
  z.s = {j.at("s_re").get<double>(), j.at("s_im").get<double>()};
  z.m = j.at("m").get<int>();
  z.log_he = {j.at("log_he_re").get<double>(), j.at("log_he_im").get<double>()};
  z.log_id = j.at("log_id").get<double>();
  z.log_ell = j.at("log_ell").get<double>();
  if (!j.at("log_parsct").is_null()) z.log_parsct = j.at("log_parsct").get<double>();
  z.log_hyp2sct = j.at("log_hyp2sct").get<double>();
  z.log_total = {j.at("log_total_re").get<double>(), j.at("log_total_im").get<double>()};
  z.truncation_norm = j.at("truncation_norm").get<double>();
  return z;
}

inline Json to_json_record(const GeometricSideBreakdown& b) {
  Json j;
  j["t"] = b.t;
  j["m"] = b.m;
  j["I"] = b.I;
  j["E"] = b.E;
  j["HE"] = b.HE;
  j["PS"] = b.PS;
  j["HS"] = b.HS;
  j["total"] = b.total;
  return j;
}

inline constexpr const char* kBreakdownCsvHeader = "t,I,E,HE,PS,HS,total";

inline void write_breakdown_row(std::ostream& out, const GeometricSideBreakdown& b) {
  out << format_double(b.t) << ',' << format_double(b.I) << ',' << format_double(b.E) << ',' << format_double(b.HE) << ','
      << format_double(b.PS) << ',' << format_double(b.HS) << ',' << format_double(b.total) << '\n';
}

}  // namespace hilzeta

#endif  // HILZETA_IO_HPP
