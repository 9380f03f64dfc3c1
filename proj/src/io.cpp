#include "combwalk/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace combwalk {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "# combwalk trajectory v" << kFormatVersion << '\n';
  out << "snapshot_t,J,re_c,im_c,population\n";
  for (const auto& s : traj.snapshots) {
    const std::string t = format_double(s.time);
    for (std::size_t j = 0; j < s.amplitudes.size(); ++j) {
      const Complex c = s.amplitudes[j];
      out << t << ',' << j << ',' << format_double(c.real()) << ','
          << format_double(c.imag()) << ',' << format_double(std::norm(c)) << '\n';
    }
  }
}

nlohmann::json trajectory_to_json(const Trajectory& traj) {
  nlohmann::json snaps = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    const auto& s = traj.snapshots[i];
    std::vector<double> re, im;
    for (const auto& c : s.amplitudes) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    snaps.push_back({{"t", s.time},
                     {"norm_drift", traj.norm_drift[i]},
                     {"re_c", re},
                     {"im_c", im},
                     {"population", traj.populations[i]}});
  }
  return {{"format", "combwalk-trajectory"},
          {"version", kFormatVersion},
          {"steps", traj.steps},
          {"steps_per_unit_time", traj.steps_per_unit_time},
          {"snapshots", std::move(snaps)}};
}

void write_distribution_csv(std::ostream& out, const LatticeDistribution& d) {
  out << "# combwalk distribution v" << kFormatVersion << '\n';
  out << "n,probability\n";
  for (std::size_t i = 0; i < d.probabilities.size(); ++i) {
    out << d.site(i) << ',' << format_double(d.probabilities[i]) << '\n';
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

double parse_number(const std::string& s, int line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) +
                             ": not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

LatticeDistribution read_distribution_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    header = split_csv(line);
    break;
  }
  const bool trajectory = header.size() == 5 && header[0] == "snapshot_t" &&
                          header[4] == "population";
  const bool plain = header.size() == 2 && header[0] == "n" && header[1] == "probability";
  if (!trajectory && !plain) {
    throw std::runtime_error("csv: unrecognized header");
  }

  std::vector<std::pair<int, double>> rows;
  double current_t = 0.0;
  bool have_t = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": wrong column count");
    }
    if (trajectory) {
      const double t = parse_number(cells[0], line_no);
      if (!have_t || t != current_t) {
        rows.clear();  // keep only the last snapshot
        current_t = t;
        have_t = true;
      }
      rows.emplace_back(static_cast<int>(parse_number(cells[1], line_no)),
                        parse_number(cells[4], line_no));
    } else {
      rows.emplace_back(static_cast<int>(parse_number(cells[0], line_no)),
                        parse_number(cells[1], line_no));
    }
  }
  if (rows.empty()) throw std::runtime_error("csv: no data rows");

  int lo = rows.front().first;
  int hi = lo;
  for (const auto& [n, p] : rows) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  LatticeDistribution d{lo, std::vector<double>(static_cast<std::size_t>(hi - lo + 1), 0.0)};
  for (const auto& [n, p] : rows) d.probabilities[static_cast<std::size_t>(n - lo)] = p;
  return d;
}

void write_profile_csv(std::ostream& out, const FieldProfile& profile) {
  out << "# combwalk field-profile v" << kFormatVersion << '\n';
  out << "t,epsilon\n";
  for (std::size_t i = 0; i < profile.times.size(); ++i) {
    out << format_double(profile.times[i]) << ',' << format_double(profile.values[i]) << '\n';
  }
}

nlohmann::json report_to_json(const ComparisonReport& r) {
  return {{"format", "combwalk-report"},
          {"version", kFormatVersion},
          {"total_variation", r.total_variation},
          {"l_inf", r.l_inf},
          {"mean_offset", r.mean_offset},
          {"variance", {{"simulated", r.variance_p}, {"reference", r.variance_q}}},
          {"norm_deficit", r.norm_deficit}};
}

}  // namespace combwalk
