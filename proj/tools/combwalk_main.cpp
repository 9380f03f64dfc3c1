// combwalk: comb-driven rotational quantum walk simulator.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime or integration
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "combwalk/experiment.hpp"
#include "combwalk/io.hpp"
#include "combwalk/sweep.hpp"

namespace fs = std::filesystem;
using namespace combwalk;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OutputError("cannot write '" + path.string() + "'");
  return out;
}

fs::path output_dir(const std::string& flag, const ExperimentConfig& config) {
  if (!flag.empty()) return flag;
  if (!config.output.directory.empty()) return config.output.directory;
  return ".";
}

int cmd_simulate(const ExperimentConfig& config, const fs::path& dir) {
  const SimulationResult r = simulate(config);
  fs::create_directories(dir);
  open_output(dir / "config") << serialize_config(config);
  if (config.output.format == OutputFormat::json) {
    open_output(dir / "trajectory.json") << trajectory_to_json(r.trajectory).dump(1) << '\n';
  } else {
    auto out = open_output(dir / "trajectory.csv");
    write_trajectory_csv(out, r.trajectory);
  }
  {
    auto out = open_output(dir / "oracle.csv");
    write_distribution_csv(out, r.reference);
  }
  auto report = report_to_json(r.report);
  report["max_abs_norm_drift"] = r.trajectory.max_abs_norm_drift();
  report["steps_per_unit_time"] = r.trajectory.steps_per_unit_time;
  open_output(dir / "report.json") << report.dump(2) << '\n';
  std::cout << "total_variation " << format_double(r.report.total_variation) << "\nl_inf "
            << format_double(r.report.l_inf) << "\nmax_abs_norm_drift "
            << format_double(r.trajectory.max_abs_norm_drift()) << "\n";
  return 0;
}

int cmd_field_profile(const ExperimentConfig& config, const fs::path& dir) {
  const ResolvedExperiment base = resolve(config);
  const double scale = config.rotor.units == Units::hz ? 2.0 * config.rotor.b : 1.0;
  const double t0 = config.profile.t0 * scale;
  const double t1 = config.profile.t1 * scale;
  if (config.profile.samples < 2) throw ConfigError("profile.samples", "need at least 2 samples");
  if (!(t1 > t0)) throw ConfigError("profile.t1", "must exceed profile.t0");

  auto write_one = [&](const CombSpec& comb, const fs::path& path) {
    auto out = open_output(path);
    write_profile_csv(out, sample_profile(comb, t0, t1, config.profile.samples));
  };
  if (config.profile.j_max_values.empty()) {
    write_one(base.comb, dir / "profile.csv");
    return 0;
  }
  for (int j_max : config.profile.j_max_values) {
    ExperimentConfig c = config;
    c.rotor.j_max = j_max;
    if (c.run.initial_j > j_max) c.run.initial_j = 0;
    const ResolvedExperiment ex = [&] {
      try {
        return resolve(c);
      } catch (const ConfigError& e) {
        throw ConfigError("profile.j_max_values", e.what());
      }
    }();
    write_one(ex.comb, dir / ("profile_jmax" + std::to_string(j_max) + ".csv"));
  }
  return 0;
}

int cmd_oracle(const ExperimentConfig::Oracle& o, const std::optional<fs::path>& dir) {
  if (!(o.t >= 0.0)) throw ConfigError("oracle.t", "must be >= 0");
  if (!(o.gamma >= 0.0)) throw ConfigError("oracle.gamma", "must be >= 0");
  if (o.range < 0) throw ConfigError("oracle.range", "must be >= 0");
  const double x = o.gamma * o.t;
  LatticeDistribution d;
  std::string name;
  switch (o.kind) {
    case OracleKind::ctqw:
      d = ctqw_distribution(x, o.range);
      name = "ctqw";
      break;
    case OracleKind::classical:
      d = classical_distribution(x, o.range);
      name = "classical";
      break;
    case OracleKind::finite: {
      const int size = o.size > 0 ? o.size : 2 * o.range + 1;
      const int origin = size / 2;
      d = shifted(ladder_distribution(ctqw_finite(size, origin, o.t, o.gamma).populations()), -origin);
      name = "finite";
      break;
    }
  }
  if (dir) {
    auto out = open_output(*dir / ("oracle_" + name + ".csv"));
    write_distribution_csv(out, d);
  } else {
    write_distribution_csv(std::cout, d);
  }
  return 0;
}

LatticeDistribution read_distribution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OutputError("cannot read '" + path + "'");
  return read_distribution_csv(in);
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& out_path) {
  const auto report = report_to_json(compare(read_distribution_file(a), read_distribution_file(b)));
  if (out_path.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    open_output(out_path) << report.dump(2) << '\n';
  }
  return 0;
}

int cmd_sweep(const ExperimentConfig& config, const fs::path& dir, int workers) {
  const auto rows = run_sweep(config, workers >= 0 ? workers : config.sweep.workers);
  if (config.output.format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"gamma", r.cell.gamma},
                         {"d_over_b", r.cell.d_over_b},
                         {"steps_per_unit_time", r.cell.steps_per_unit_time},
                         {"comb_distorted", r.cell.comb_distorted},
                         {"status", r.ok ? "ok" : "failed"}};
      if (r.ok) {
        row["total_variation"] = r.total_variation;
        row["max_norm_drift"] = r.max_norm_drift;
      } else {
        row["error"] = r.error;
      }
      if (r.state_error) row["state_error"] = *r.state_error;
      if (r.error_ratio) row["error_ratio"] = *r.error_ratio;
      arr.push_back(std::move(row));
    }
    open_output(dir / "sweep.json")
        << nlohmann::json{{"format", "combwalk-sweep"}, {"version", kFormatVersion}, {"rows", arr}}.dump(2)
        << '\n';
  } else {
    auto out = open_output(dir / "sweep.csv");
    write_sweep_csv(out, rows);
  }
  write_sweep_csv(std::cout, rows, true);
  for (const auto& r : rows) {
    if (!r.ok) return kExitRuntime;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical-comb driven quantum walk on a rotational ladder"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format;
  int workers = -1;
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv},
                                                    {"json", OutputFormat::json}};

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "Experiment config (INI)");
    if (config_required) opt->required();
    sub->add_option("--out", out_dir, "Output directory");
  };

  auto* simulate_cmd = app.add_subcommand("simulate", "Integrate the driven ladder and compare with the walk oracle");
  add_common(simulate_cmd, true);
  simulate_cmd->add_option("--format", format, "Trajectory format")->check(CLI::IsMember({"csv", "json"}));

  auto* profile_cmd = app.add_subcommand("field-profile", "Sample the comb field in time");
  add_common(profile_cmd, true);
  std::optional<double> t0, t1;
  std::optional<int> samples;
  profile_cmd->add_option("--t0", t0, "Window start");
  profile_cmd->add_option("--t1", t1, "Window end");
  profile_cmd->add_option("--n", samples, "Number of samples");

  auto* oracle_cmd = app.add_subcommand("oracle", "Write an analytic walk distribution");
  add_common(oracle_cmd, false);
  std::optional<std::string> kind;
  std::optional<double> o_gamma, o_t;
  std::optional<int> o_range, o_size;
  oracle_cmd->add_option("--kind", kind, "ctqw | classical | finite")
      ->check(CLI::IsMember({"ctqw", "classical", "finite"}));
  oracle_cmd->add_option("--gamma", o_gamma, "Hopping rate");
  oracle_cmd->add_option("--t", o_t, "Elapsed time");
  oracle_cmd->add_option("--range", o_range, "Sites -range..range");
  oracle_cmd->add_option("--size", o_size, "Chain size for kind = finite");

  auto* compare_cmd = app.add_subcommand("compare", "Compare two distribution or trajectory CSV files");
  std::string file_a, file_b, report_out;
  compare_cmd->add_option("first", file_a, "Simulated distribution")->required();
  compare_cmd->add_option("second", file_b, "Reference distribution")->required();
  compare_cmd->add_option("--out", report_out, "Write the JSON report here instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep in parallel");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    ExperimentConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (!format.empty()) config.output.format = formats.at(format);

    if (*simulate_cmd) return cmd_simulate(config, output_dir(out_dir, config));
    if (*profile_cmd) {
      if (t0) config.profile.t0 = *t0;
      if (t1) config.profile.t1 = *t1;
      if (samples) config.profile.samples = *samples;
      return cmd_field_profile(config, output_dir(out_dir, config));
    }
    if (*oracle_cmd) {
      auto o = config.oracle;
      if (kind) o.kind = *kind == "ctqw" ? OracleKind::ctqw
                         : *kind == "classical" ? OracleKind::classical
                                                : OracleKind::finite;
      if (o_gamma) o.gamma = *o_gamma;
      if (o_t) o.t = *o_t;
      if (o_range) o.range = *o_range;
      if (o_size) o.size = *o_size;
      std::optional<fs::path> dir;
      if (!out_dir.empty()) dir = fs::path(out_dir);
      return cmd_oracle(o, dir);
    }
    if (*compare_cmd) return cmd_compare(file_a, file_b, report_out);
    if (*sweep_cmd) return cmd_sweep(config, output_dir(out_dir, config), workers);
  } catch (const IntegrationError& e) {
    std::cerr << "integration failure (step " << e.step() << "): " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
