#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mainprob/experiment.hpp"
#include "mainprob/format.hpp"
#include "mainprob/tables.hpp"

namespace mainprob::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw UsageError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string file_stem(const std::string& case_name, const TruncationSpec& s) {
  return case_name + "_" + std::to_string(s.S) + "-" + std::to_string(s.P);
}

std::string rss_csv(const ExperimentResult& r, const SpecResult& s) {
  std::ostringstream o;
  o << "case,spec,chart,t,rss_position_km,rss_velocity_kms,radial_km,along_km,cross_km\n";
  const std::string prefix = r.config.case_name + "," + s.spec.label() + ",cartesian,";
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    o << prefix << format_double(r.times[i]) << ',' << format_double(s.rss_position[i]) << ','
      << format_double(s.rss_velocity[i]) << ',' << format_double(s.rtn[i][0]) << ','
      << format_double(s.rtn[i][1]) << ',' << format_double(s.rtn[i][2]) << '\n';
  }
  return o.str();
}

std::string mean_csv(const ExperimentResult& r, const SpecResult& s) {
  std::ostringstream o;
  o << "case,order,chart,t,sma_relative,inclination_relative\n";
  const std::string prefix =
      r.config.case_name + "," + std::to_string(s.spec.S) + ",double_prime,";
  for (std::size_t i = 0; i < r.residual_times.size(); ++i) {
    o << prefix << format_double(r.residual_times[i]) << ','
      << format_double(s.sma_relative[i]) << ',' << format_double(s.inclination_relative[i])
      << '\n';
  }
  return o.str();
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j{{"case", v.case_name}, {"spec", v.spec},   {"quantity", v.quantity},
                 {"unit", v.unit},      {"value", v.value}, {"lo", nullptr},
                 {"hi", nullptr},       {"status", v.has_band() ? (v.pass() ? "pass" : "fail") : "info"}};
  if (v.lo) j["lo"] = *v.lo;
  if (v.hi) j["hi"] = *v.hi;
  return j;
}

void print_verdicts(std::ostream& out, const std::vector<Verdict>& vs) {
  out << std::left << std::setw(8) << "case" << std::setw(9) << "spec" << std::setw(36)
      << "quantity" << std::setw(15) << "value" << std::setw(9) << "unit"
      << std::setw(24) << "band"
      << "status\n";
  for (const Verdict& v : vs) {
    std::ostringstream band;
    band << std::setprecision(6);
    if (v.has_band()) {
      band << '[';
      v.lo ? band << *v.lo : band << "-inf";
      band << ", ";
      v.hi ? band << *v.hi : band << "inf";
      band << ']';
    }
    std::ostringstream value;
    value << std::setprecision(4) << v.value;
    out << std::setw(8) << v.case_name << std::setw(9) << v.spec << std::setw(36) << v.quantity
        << std::setw(15) << value.str() << std::setw(9) << v.unit << std::setw(24) << band.str()
        << (v.has_band() ? (v.pass() ? "PASS" : "FAIL") : "info") << '\n';
  }
}

struct RunFlags {
  std::string case_name = "prisma";
  std::optional<double> a, e, inc, raan, argp, anomaly;
  std::vector<std::string> specs;
  double days = 30;
  double cadence = 60;
  double residual_hours = 24;
  double residual_cadence = 60;
  GravityField field;
  double oracle_tol = 1e-13;
  double guard = TheoryOptions{}.guard;
  std::string out_dir = "out";
  std::string reference;
};

ExperimentConfig make_config(const RunFlags& f) {
  ExperimentConfig c;
  TestCase base{"custom", 7000.0, 0.001, 45.0, 0.0, 0.0, 0.0};
  if (f.case_name != "custom") {
    const auto found = find_case(f.case_name);
    if (!found) throw UsageError("unknown case '" + f.case_name + "'");
    base = *found;
  }
  if (f.a) base.a = *f.a;
  if (f.e) base.e = *f.e;
  if (f.inc) base.inc_deg = *f.inc;
  if (f.raan) base.raan_deg = *f.raan;
  if (f.argp) base.argp_deg = *f.argp;
  if (f.anomaly) base.mean_anomaly_deg = *f.anomaly;
  c.case_name = f.case_name;
  c.elements = base.elements();
  c.specs.clear();
  for (const auto& s : f.specs) c.specs.push_back(TruncationSpec::parse(s));
  if (c.specs.empty()) c.specs.push_back({3, 2});
  c.days = f.days;
  c.cadence = f.cadence;
  c.residual_hours = f.residual_hours;
  c.residual_cadence = f.residual_cadence;
  c.field = f.field;
  c.options.guard = f.guard;
  c.oracle.tol = f.oracle_tol;
  c.validate();
  return c;
}

ordered_json manifest(const ExperimentResult& r, const std::vector<std::string>& files,
                      const std::vector<Verdict>& vs) {
  const ExperimentConfig& c = r.config;
  const KeplerianElements& k = c.elements;
  ordered_json m;
  m["schema_version"] = kSchemaVersion;
  m["program"] = {{"name", "mainprob"}, {"version", MAINPROB_VERSION}};
  m["case"] = c.case_name;
  m["elements"] = {{"a_km", k.a},
                   {"e", k.e},
                   {"inc_deg", k.inc / kDeg},
                   {"raan_deg", k.raan / kDeg},
                   {"argp_deg", k.argp / kDeg},
                   {"mean_anomaly_deg", k.anomaly / kDeg}};
  m["gravity"] = {{"mu_km3_s2", c.field.mu}, {"re_km", c.field.Re}, {"j2", c.field.J2}};
  ordered_json specs = ordered_json::array();
  for (const auto& s : c.specs) specs.push_back(s.label());
  m["specs"] = specs;
  m["arc"] = {{"days", c.days}, {"cadence_s", c.cadence}, {"samples", r.times.size()}};
  m["residual_window"] = {{"length_s", r.residual_times.back()},
                          {"cadence_s", c.residual_cadence},
                          {"samples", r.residual_times.size()},
                          {"secular_reference", "arithmetic mean over the window"}};
  m["theory"] = {{"resonance_guard", c.options.guard}, {"inverse_method", "truncated_series"}};
  m["oracle"] = {{"tol", r.reference.tol},
                 {"precision", c.oracle.precision == OraclePrecision::Extended ? "extended"
                                                                                : "double"},
                 {"energy_drift", r.reference.energy_drift},
                 {"N_drift", r.reference.N_drift},
                 {"accepted_steps", r.reference.stats.accepted},
                 {"rejected_steps", r.reference.stats.rejected}};
  m["period_s"] = r.period;
  ordered_json per_spec = ordered_json::array();
  for (const auto& s : r.specs) {
    per_spec.push_back({{"spec", s.spec.label()},
                        {"mean_a_km", s.mean_a},
                        {"mean_inc_rad", s.mean_inc},
                        {"secular_L", s.ephemeris.secular.L},
                        {"secular_G", s.ephemeris.secular.G},
                        {"secular_H", s.ephemeris.secular.H},
                        {"rate_nF", s.ephemeris.secular.rates.nF},
                        {"rate_ng", s.ephemeris.secular.rates.ng},
                        {"rate_nh", s.ephemeris.secular.rates.nh}});
  }
  m["results"] = per_spec;
  m["csv_columns"] = {
      {"rss", "case,spec,chart,t,rss_position_km,rss_velocity_kms,radial_km,along_km,cross_km"},
      {"mean", "case,order,chart,t,sma_relative,inclination_relative"},
      {"oracle", "t,x,y,z,vx,vy,vz,energy,N"}};
  m["files"] = files;
  ordered_json jv = ordered_json::array();
  for (const auto& v : vs) jv.push_back(verdict_json(v));
  m["verdicts"] = jv;
  return m;
}

int do_run(const RunFlags& flags, std::ostream& out) {
  const ExperimentConfig config = make_config(flags);
  std::optional<ReferenceTrajectory> reference;
  if (!flags.reference.empty()) {
    std::ifstream in(flags.reference);
    if (!in) throw UsageError("cannot read reference " + flags.reference);
    reference = read_trajectory_csv(in);
  }
  const ExperimentResult r = run_experiment(config, std::move(reference));
  const std::vector<Verdict> vs = verdicts(r);

  const fs::path dir = flags.out_dir;
  fs::create_directories(dir);
  std::vector<std::string> files;
  {
    std::ostringstream o;
    write_trajectory_csv(o, r.reference);
    write_atomically(dir / "oracle.csv", o.str());
    files.push_back("oracle.csv");
  }
  std::vector<int> orders;
  for (const SpecResult& s : r.specs) {
    const std::string rss = file_stem(config.case_name, s.spec) + "_rss.csv";
    write_atomically(dir / rss, rss_csv(r, s));
    files.push_back(rss);
    if (std::find(orders.begin(), orders.end(), s.spec.S) == orders.end()) {
      orders.push_back(s.spec.S);
      const std::string mean = config.case_name + "_order" + std::to_string(s.spec.S) + "_mean.csv";
      write_atomically(dir / mean, mean_csv(r, s));
      files.push_back(mean);
    }
  }
  files.push_back("manifest.json");
  write_atomically(dir / "manifest.json", manifest(r, files, vs).dump(2) + "\n");

  print_verdicts(out, vs);
  out << "artifacts written to " << dir.string() << '\n';
  return kSuccess;
}

int do_dump(const std::string& path, std::ostream& out) {
  const std::string text = tables_json();
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_atomically(path, text);
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"J2 main problem: analytical theory in reverse normalization against a numerical oracle",
               "mainprob"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MAINPROB_VERSION);

  RunFlags flags;
  CLI::App* run = app.add_subcommand("run", "Run a test case against the oracle and write CSV artifacts");
  run->add_option("--case", flags.case_name, "prisma, topex, gto or custom")->capture_default_str();
  run->add_option("--a", flags.a, "semimajor axis (km)");
  run->add_option("--e", flags.e, "eccentricity");
  run->add_option("--inc", flags.inc, "inclination (deg)");
  run->add_option("--raan", flags.raan, "right ascension of the node (deg)");
  run->add_option("--argp", flags.argp, "argument of perigee (deg)");
  run->add_option("--anomaly", flags.anomaly, "mean anomaly (deg)");
  run->add_option("--spec", flags.specs, "truncation S:P, repeatable (default 3:2)");
  run->add_option("--days", flags.days, "arc length (days)")->capture_default_str();
  run->add_option("--cadence", flags.cadence, "RSS sample spacing (s)")->capture_default_str();
  run->add_option("--residual-hours", flags.residual_hours,
                  "minimum mean-element residual window (h), at least three revolutions")
      ->capture_default_str();
  run->add_option("--residual-cadence", flags.residual_cadence,
                  "mean-element sample spacing (s)")
      ->capture_default_str();
  run->add_option("--mu", flags.field.mu, "gravitational parameter (km^3/s^2)")->capture_default_str();
  run->add_option("--re", flags.field.Re, "equatorial radius (km)")->capture_default_str();
  run->add_option("--j2", flags.field.J2, "second zonal harmonic")->capture_default_str();
  run->add_option("--oracle-tol", flags.oracle_tol, "oracle relative accuracy in [1e-14, 1e-10]")
      ->capture_default_str();
  run->add_option("--guard", flags.guard, "minimum |5 sin^2 I - 4|")->capture_default_str();
  run->add_option("--out", flags.out_dir, "output directory")->capture_default_str();
  run->add_option("--reference", flags.reference,
                  "oracle.csv of an earlier run with the same grid, used instead of integrating");

  std::string dump_path;
  CLI::App* dump = app.add_subcommand("dump-tables", "Write the theory tables as JSON");
  dump->add_option("--out", dump_path, "output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << MAINPROB_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (run->parsed()) return do_run(flags, out);
    if (dump->parsed()) return do_dump(dump_path, out);
  } catch (const ResonanceError& e) {
    err << "error: " << e.what() << '\n';
    return kResonance;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << " (drift " << e.drift() << ")\n";
    return kOracleAccuracy;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace mainprob::cli
