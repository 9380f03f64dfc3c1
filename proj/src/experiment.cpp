#include "combwalk/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "combwalk/io.hpp"

namespace combwalk {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

int to_int(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <class T, class F>
std::vector<T> to_list(const std::string& field, const std::string& text, F convert) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) out.push_back(convert(field, item));
  return out;
}

template <class E>
E to_enum(const std::string& field, const std::string& text,
          const std::map<std::string, E>& names) {
  const auto it = names.find(trim(text));
  if (it == names.end()) {
    std::string allowed;
    for (const auto& [k, v] : names) allowed += (allowed.empty() ? "" : "|") + k;
    throw ConfigError(field, "expected one of " + allowed + ", got '" + text + "'");
  }
  return it->second;
}

template <class E>
std::string enum_name(E value, const std::map<std::string, E>& names) {
  for (const auto& [k, v] : names) {
    if (v == value) return k;
  }
  return {};
}

const std::map<std::string, Units> kUnits{{"normalized", Units::normalized}, {"hz", Units::hz}};
const std::map<std::string, FieldEvaluation> kFieldEval{
    {"direct", FieldEvaluation::direct}, {"rotators", FieldEvaluation::rotators}};
const std::map<std::string, OracleReference> kReference{
    {"infinite", OracleReference::infinite}, {"finite", OracleReference::finite}};
const std::map<std::string, OracleKind> kOracleKind{
    {"ctqw", OracleKind::ctqw}, {"classical", OracleKind::classical}, {"finite", OracleKind::finite}};
const std::map<std::string, OutputFormat> kFormat{{"csv", OutputFormat::csv},
                                                 {"json", OutputFormat::json}};

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string join_bools(const std::vector<bool>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::string(i ? ", " : "") + (v[i] ? "true" : "false");
  return s;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config", std::string("malformed document: ") + e.message() +
                                    " (line " + std::to_string(e.line()) + ")");
  }

  ExperimentConfig c;
  bool saw_b = false;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(section, "keys must live inside a [section]");
    }
    for (const auto& [key, node] : body) {
      const std::string field = section + "." + key;
      const std::string& v = node.data();
      if (section == "rotor") {
        if (key == "units") c.rotor.units = to_enum(field, v, kUnits);
        else if (key == "B") { c.rotor.b = to_double(field, v); saw_b = true; }
        else if (key == "d_over_b") c.rotor.d_over_b = to_double(field, v);
        else if (key == "mu") c.rotor.mu = to_double(field, v);
        else if (key == "M") c.rotor.m = to_int(field, v);
        else if (key == "j_max") c.rotor.j_max = to_int(field, v);
        else throw ConfigError(field, "unknown key");
      } else if (section == "comb") {
        if (key == "gamma") c.comb.gamma = to_double(field, v);
        else if (key == "distorted") c.comb.distorted = to_bool(field, v);
        else throw ConfigError(field, "unknown key");
      } else if (section == "run") {
        if (key == "t_start") c.run.t_start = to_double(field, v);
        else if (key == "t_end") c.run.t_end = to_double(field, v);
        else if (key == "initial_J") c.run.initial_j = to_int(field, v);
        else if (key == "steps_per_unit_time") c.run.steps_per_unit_time = to_int(field, v);
        else if (key == "snapshot_interval") c.run.snapshot_interval = to_double(field, v);
        else if (key == "snapshot_times") c.run.snapshot_times = to_list<double>(field, v, to_double);
        else if (key == "field_evaluation") c.run.field_evaluation = to_enum(field, v, kFieldEval);
        else if (key == "reference") c.run.reference = to_enum(field, v, kReference);
        else throw ConfigError(field, "unknown key");
      } else if (section == "output") {
        if (key == "directory") c.output.directory = trim(v);
        else if (key == "format") c.output.format = to_enum(field, v, kFormat);
        else throw ConfigError(field, "unknown key");
      } else if (section == "profile") {
        if (key == "t0") c.profile.t0 = to_double(field, v);
        else if (key == "t1") c.profile.t1 = to_double(field, v);
        else if (key == "samples") c.profile.samples = to_int(field, v);
        else if (key == "j_max_values") c.profile.j_max_values = to_list<int>(field, v, to_int);
        else throw ConfigError(field, "unknown key");
      } else if (section == "oracle") {
        if (key == "kind") c.oracle.kind = to_enum(field, v, kOracleKind);
        else if (key == "gamma") c.oracle.gamma = to_double(field, v);
        else if (key == "t") c.oracle.t = to_double(field, v);
        else if (key == "range") c.oracle.range = to_int(field, v);
        else if (key == "size") c.oracle.size = to_int(field, v);
        else throw ConfigError(field, "unknown key");
      } else if (section == "sweep") {
        if (key == "gamma") c.sweep.gamma = to_list<double>(field, v, to_double);
        else if (key == "d_over_b") c.sweep.d_over_b = to_list<double>(field, v, to_double);
        else if (key == "steps_per_unit_time") c.sweep.steps_per_unit_time = to_list<int>(field, v, to_int);
        else if (key == "comb_distorted") c.sweep.comb_distorted = to_list<bool>(field, v, to_bool);
        else if (key == "workers") c.sweep.workers = to_int(field, v);
        else throw ConfigError(field, "unknown key");
      } else {
        throw ConfigError(section, "unknown section");
      }
    }
  }
  if (c.rotor.units == Units::normalized && saw_b && c.rotor.b != 0.5) {
    throw ConfigError("rotor.B", "normalized units fix B = 0.5 (2B = 1); use units = hz for physical B");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[rotor]\n"
      << "units = " << enum_name(c.rotor.units, kUnits) << '\n'
      << "B = " << format_double(c.rotor.b) << '\n'
      << "d_over_b = " << format_double(c.rotor.d_over_b) << '\n'
      << "mu = " << format_double(c.rotor.mu) << '\n'
      << "M = " << c.rotor.m << '\n'
      << "j_max = " << c.rotor.j_max << "\n\n"
      << "[comb]\n"
      << "gamma = " << format_double(c.comb.gamma) << '\n'
      << "distorted = " << (c.comb.distorted ? "true" : "false") << "\n\n"
      << "[run]\n"
      << "t_start = " << format_double(c.run.t_start) << '\n'
      << "t_end = " << format_double(c.run.t_end) << '\n'
      << "initial_J = " << c.run.initial_j << '\n'
      << "steps_per_unit_time = " << c.run.steps_per_unit_time << '\n'
      << "snapshot_interval = " << format_double(c.run.snapshot_interval) << '\n'
      << "snapshot_times = " << join_doubles(c.run.snapshot_times) << '\n'
      << "field_evaluation = " << enum_name(c.run.field_evaluation, kFieldEval) << '\n'
      << "reference = " << enum_name(c.run.reference, kReference) << "\n\n"
      << "[output]\n"
      << "directory = " << c.output.directory << '\n'
      << "format = " << enum_name(c.output.format, kFormat) << "\n\n"
      << "[profile]\n"
      << "t0 = " << format_double(c.profile.t0) << '\n'
      << "t1 = " << format_double(c.profile.t1) << '\n'
      << "samples = " << c.profile.samples << '\n'
      << "j_max_values = " << join_ints(c.profile.j_max_values) << "\n\n"
      << "[oracle]\n"
      << "kind = " << enum_name(c.oracle.kind, kOracleKind) << '\n'
      << "gamma = " << format_double(c.oracle.gamma) << '\n'
      << "t = " << format_double(c.oracle.t) << '\n'
      << "range = " << c.oracle.range << '\n'
      << "size = " << c.oracle.size << "\n\n"
      << "[sweep]\n"
      << "gamma = " << join_doubles(c.sweep.gamma) << '\n'
      << "d_over_b = " << join_doubles(c.sweep.d_over_b) << '\n'
      << "steps_per_unit_time = " << join_ints(c.sweep.steps_per_unit_time) << '\n'
      << "comb_distorted = " << join_bools(c.sweep.comb_distorted) << '\n'
      << "workers = " << c.sweep.workers << '\n';
  return out.str();
}

ResolvedExperiment resolve(const ExperimentConfig& c) {
  // Physical inputs are rescaled so that 2B = 1.
  double time_scale = 1.0;
  double rate_scale = 1.0;
  if (c.rotor.units == Units::hz) {
    if (!(c.rotor.b > 0.0)) throw ConfigError("rotor.B", "must be positive");
    time_scale = 2.0 * c.rotor.b;
    rate_scale = 1.0 / time_scale;
  }

  if (c.rotor.j_max < 1) throw ConfigError("rotor.j_max", "must be >= 1");
  if (!(c.rotor.d_over_b >= 0.0) || c.rotor.d_over_b > RotorSpec::kMaxDistortionRatio) {
    throw ConfigError("rotor.d_over_b", "must lie in [0, 1e-3]");
  }
  if (!(c.rotor.mu > 0.0)) throw ConfigError("rotor.mu", "must be positive");
  if (c.rotor.m != 0) {
    throw ConfigError("rotor.M", "only M = 0 ladders can be driven by the full comb");
  }
  const RotorSpec rotor = RotorSpec::normalized(c.rotor.j_max, c.rotor.d_over_b, c.rotor.mu, c.rotor.m);

  const double gamma = c.comb.gamma * rate_scale;
  if (!(gamma >= 0.0)) throw ConfigError("comb.gamma", "must be >= 0");
  CombSpec comb = [&] {
    try {
      return build_comb(rotor, gamma, c.comb.distorted ? Distortion::centrifugal : Distortion::rigid);
    } catch (const std::domain_error& e) {
      throw ConfigError("comb", e.what());
    }
  }();

  RunConfig run;
  run.t_start = c.run.t_start * time_scale;
  run.t_end = c.run.t_end * time_scale;
  if (!(run.t_end > run.t_start)) throw ConfigError("run.t_end", "must exceed run.t_start");
  if (c.run.steps_per_unit_time < 0) {
    throw ConfigError("run.steps_per_unit_time", "must be >= 1, or 0 for the default");
  }
  run.steps_per_unit_time = c.run.steps_per_unit_time;
  if (c.run.initial_j < 0 || c.run.initial_j > c.rotor.j_max) {
    throw ConfigError("run.initial_J", "must lie in 0..j_max");
  }
  run.initial_j = c.run.initial_j;
  run.field_evaluation = c.run.field_evaluation;

  if (c.run.snapshot_interval < 0.0) {
    throw ConfigError("run.snapshot_interval", "must be >= 0");
  }
  std::set<double> times;
  for (double ts : c.run.snapshot_times) {
    const double t = ts * time_scale;
    if (!(t >= run.t_start && t <= run.t_end)) {
      throw ConfigError("run.snapshot_times", "time " + format_double(ts) + " outside the run window");
    }
    times.insert(t);
  }
  if (c.run.snapshot_interval > 0.0) {
    const double dt = c.run.snapshot_interval * time_scale;
    const double span = run.t_end - run.t_start;
    const auto count = static_cast<long>(std::floor(span / dt + 1e-9));
    if (count > 1000000) throw ConfigError("run.snapshot_interval", "too many snapshots");
    for (long k = 1; k <= count; ++k) {
      times.insert(std::min(run.t_end, run.t_start + static_cast<double>(k) * dt));
    }
  }
  times.insert(run.t_end);
  run.snapshot_times.assign(times.begin(), times.end());
  run.validate();

  const Distortion lines = c.rotor.d_over_b > 0.0 ? Distortion::centrifugal : Distortion::rigid;
  return {rotor, std::move(comb), std::move(run), lines};
}

LatticeDistribution reference_distribution(OracleReference kind, int ladder_size,
                                           int origin, double gamma_t) {
  if (kind == OracleReference::finite) {
    return ladder_distribution(ctqw_finite(ladder_size, origin, gamma_t, 1.0).populations());
  }
  // Infinite lattice, restricted to the ladder's index range.
  const int radius = std::max(origin, ladder_size - 1 - origin);
  const auto d = ctqw_distribution(gamma_t, radius);
  LatticeDistribution out{0, std::vector<double>(static_cast<std::size_t>(ladder_size))};
  for (int j = 0; j < ladder_size; ++j) {
    out.probabilities[static_cast<std::size_t>(j)] = d.at(j - origin);
  }
  return out;
}

SimulationResult simulate(const ExperimentConfig& config) {
  const ResolvedExperiment ex = resolve(config);
  const WalkState initial =
      WalkState::basis(ex.rotor.ladder_size(), ex.run.initial_j, ex.run.t_start);
  SimulationResult r;
  r.trajectory = propagate(initial, ex.comb, ex.rotor, ex.run, ex.lines);
  r.simulated = ladder_distribution(r.trajectory.populations.back());
  const double elapsed = r.trajectory.final_state().time - ex.run.t_start;
  r.reference = reference_distribution(config.run.reference, ex.rotor.ladder_size(),
                                       ex.run.initial_j, ex.comb.gamma * elapsed);
  r.report = compare(r.simulated, r.reference);
  return r;
}

}  // namespace combwalk
