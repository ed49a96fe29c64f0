#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilzeta.hpp"

namespace {

using namespace hilzeta;

enum ExitCode { kOk = 0, kIo = 1, kValidation = 2, kNumeric = 3 };

struct Options {
  std::string config;
  int m = 2;
  std::vector<double> s{2.0};
  std::vector<double> t{0.02, 0.01, 0.005};
  int height = 6;
  int k_max = 8;
  std::string geodesics;
  std::string spectrum;
  std::string out;
};

/// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot write output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<GeodesicClass> load_optional_geodesics(const Options& o) {
  return o.geodesics.empty() ? std::vector<GeodesicClass>{} : load_geodesics(o.geodesics);
}

std::string unit_string(const QuadraticField& f) {
  std::ostringstream s;
  s << "(" << f.eps.x << " + " << f.eps.y << " sqrt(" << f.D << "))/2";
  return s.str();
}

int cmd_field(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto& F = cfg.field;
  std::cout << "d = " << F.d << "\n"
            << "D = " << F.D << "\n"
            << "eps = " << unit_string(F) << " = " << format_double(F.eps_value()) << "\n"
            << "log eps = " << format_double(F.log_eps) << "\n"
            << "zeta_K(-1) = " << to_string(F.zeta_m1) << " = " << format_double(F.zeta_m1_value()) << "\n";
  const Rational e = euler_characteristic(F, cfg.locus);
  std::cout << "E(X_K) = " << to_string(e) << "\n";
  validate_surface(F, cfg.locus);
  std::cout << "parity: ok (positive even integer)\n";
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto classes = enumerate_he(cfg.field, o.height);
  Sink sink(o.out);
  write_geodesics(sink.stream(), classes);
  std::ostream& report = sink.to_stdout() ? std::cerr : std::cout;
  report << "classes: " << classes.size() << "\n";
  if (!classes.empty()) report << "smallest norm: " << format_double(classes.front().norm) << "\n";
  return kOk;
}

int cmd_zeta(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto geo = load_optional_geodesics(o);
  const auto records = parallel_map(o.s, 0, [&](double s) {
    return to_json_record(log_Zhat({s, 0.0}, o.m, cfg.field, cfg.locus, geo, o.k_max)).dump();
  });
  Sink sink(o.out);
  for (const auto& r : records) sink.stream() << r << "\n";
  return kOk;
}

void print_symbolic_special_value(const QuadraticField& F, const EllipticLocus& L, int m) {
  const double z = F.zeta_m1_value();
  double c_sum = 0.0;
  for (int q = 2; q <= m; q += 2) c_sum += C_const(q, F, L);
  const double known = -(m - 1) / 4.0 * z - c_sum;
  std::cout << "s = 1: the Euler product is not available here; symbolic form\n";
  std::cout << "log Det(box_" << m << ") = " << format_double(known) << " + log Res_{s=1} Zhat_2^{1/2}(s)";
  if (m >= 4) std::cout << " + log Zhat_4'(1)";
  for (int q = 6; q <= m; q += 2) std::cout << " + log Zhat_" << q << "(1)";
  std::cout << "\n";
  std::cout << "constant part = -" << (m - 1) << "/4 zeta_K(-1) - (C_2";
  for (int q = 4; q <= m; q += 2) std::cout << " + C_" << q;
  std::cout << ")\n";
}

int cmd_det(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto geo = load_optional_geodesics(o);
  std::optional<Spectrum> spec;
  if (!o.spectrum.empty()) spec = load_spectrum(o.spectrum, o.m);
  require_even_weight(o.m);
  int status = kOk;
  for (double s : o.s) {
    std::cout << "s = " << format_double(s) << ", m = " << o.m << "\n";
    if (s == 1.0) {
      print_symbolic_special_value(cfg.field, cfg.locus, o.m);
      continue;
    }
    const auto det = corollary_log_det(s, o.m, cfg.field, cfg.locus, geo, o.k_max);
    const double residual = telescoping_residual(s, o.m, cfg.field, cfg.locus, geo, o.k_max);
    std::cout << "log Det = " << format_double(det.value.real());
    if (det.value.imag() != 0.0) std::cout << " + " << format_double(det.value.imag()) << " i";
    std::cout << "\ntruncation_norm = " << format_double(det.truncation_norm) << "\n";
    std::cout << "telescoping residual = " << format_double(residual) << " (tolerance 1e-12)\n";
    if (spec) std::cout << "finite-spectrum log Det = " << format_double(finite_log_det(*spec, s)) << "\n";
    if (!(residual <= 1e-12)) status = kNumeric;
  }
  return status;
}

int cmd_theta(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto geo = load_optional_geodesics(o);
  std::optional<Spectrum> spec;
  if (!o.spectrum.empty()) spec = load_spectrum(o.spectrum, o.m);
  for (double t : o.t) require_positive_time(t);
  const auto rows = parallel_map(o.t, 0, [&](double t) { return geometric_theta(cfg.field, cfg.locus, geo, o.m, t); });
  Sink sink(o.out);
  sink.stream() << kBreakdownCsvHeader << "\n";
  for (const auto& r : rows) write_breakdown_row(sink.stream(), r);
  std::ostream& report = sink.to_stdout() ? std::cerr : std::cout;
  if (!geo.empty() && !rows.empty() && !rows.front().power_closed) report << "note: geodesic list is not closed under powers\n";
  if (o.t.size() >= 3) {
    std::vector<std::pair<double, double>> samples;
    for (double t : o.t) samples.emplace_back(t, theta_estimate(cfg.field, cfg.locus, geo, o.m, t));
    const auto fit = small_t_fit(samples);
    const auto ref = theta_coefficients(cfg.field, cfg.locus, o.m);
    report << "fit c_-1 = " << format_double(fit.c_minus1) << " (closed form " << format_double(ref.c_minus1) << ")\n"
           << "fit c_-1/2 = " << format_double(fit.c_half) << " (closed form " << format_double(ref.c_half) << ")\n"
           << "fit c_0 = " << format_double(fit.c_0) << " (closed form " << format_double(ref.c_0) << ")\n";
  }
  if (spec) {
    for (double t : o.t) report << "spectral theta(" << format_double(t) << ") = " << format_double(theta(*spec, t)) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto cfg = load_surface_config(o.config);
  const auto geo = load_optional_geodesics(o);
  const auto results = run_verification(cfg, geo, o.k_max);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.topic << "] measured=" << format_double(r.measured)
              << " tolerance=" << format_double(r.tolerance);
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed ? kNumeric : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completed Selberg zeta functions and heat traces for Hilbert modular surfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) { sub->add_option("--config", o.config, "surface configuration file")->required(); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "even weight");
    sub->add_option("--k-max", o.k_max, "Euler product truncation per primitive");
    sub->add_option("--geodesics", o.geodesics, "geodesic CSV");
    sub->add_option("--spectrum", o.spectrum, "spectrum CSV (header 'lambda')");
    sub->add_option("--out", o.out, "output file");
  };

  auto* field = app.add_subcommand("field", "field invariants and surface parity");
  add_config(field);
  auto* enumerate = app.add_subcommand("enumerate", "hyperbolic-elliptic classes in a height box");
  add_config(enumerate);
  enumerate->add_option("--height", o.height, "entry height bound");
  enumerate->add_option("--out", o.out, "output CSV");
  auto* zeta = app.add_subcommand("zeta", "completed zeta factorization, one JSON record per s");
  add_config(zeta);
  add_common(zeta);
  zeta->add_option("--s", o.s, "comma-separated s values")->delimiter(',');
  auto* det = app.add_subcommand("det", "determinant expression and telescoping residual");
  add_config(det);
  add_common(det);
  det->add_option("--s", o.s, "comma-separated s values")->delimiter(',');
  auto* theta_cmd = app.add_subcommand("theta", "geometric side of the heat trace, CSV plus small-t fit");
  add_config(theta_cmd);
  add_common(theta_cmd);
  theta_cmd->add_option("--t", o.t, "comma-separated heat times")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "run the self-consistency suite");
  add_config(verify);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*field) return cmd_field(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*zeta) return cmd_zeta(o);
    if (*det) return cmd_det(o);
    if (*theta_cmd) return cmd_theta(o);
    if (*verify) return cmd_verify(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kValidation;
}
