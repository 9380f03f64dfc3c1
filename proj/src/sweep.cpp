#include "combwalk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "combwalk/io.hpp"

namespace combwalk {

namespace {

ExperimentConfig config_for(const ExperimentConfig& base, const SweepCell& cell) {
  ExperimentConfig c = base;
  c.comb.gamma = cell.gamma;
  c.rotor.d_over_b = cell.d_over_b;
  c.run.steps_per_unit_time = cell.steps_per_unit_time;
  c.comb.distorted = cell.comb_distorted;
  return c;
}

using GroupKey = std::tuple<double, double, bool>;

GroupKey group_of(const SweepCell& c) { return {c.gamma, c.d_over_b, c.comb_distorted}; }

/// Runs jobs 0..count-1 on a small pool; each job writes only its own slot.
template <class Job>
void parallel_for(std::size_t count, int workers, Job job) {
  std::size_t n_threads = workers > 0 ? static_cast<std::size_t>(workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace

std::vector<SweepCell> sweep_cells(const ExperimentConfig& config) {
  const auto& s = config.sweep;
  if (s.gamma.empty() && s.d_over_b.empty() && s.steps_per_unit_time.empty() &&
      s.comb_distorted.empty()) {
    throw ConfigError("sweep", "at least one sweep axis is required");
  }
  const std::vector<double> gammas = s.gamma.empty() ? std::vector{config.comb.gamma} : s.gamma;
  const std::vector<double> ratios =
      s.d_over_b.empty() ? std::vector{config.rotor.d_over_b} : s.d_over_b;
  const std::vector<int> steps = s.steps_per_unit_time.empty()
                                     ? std::vector{config.run.steps_per_unit_time}
                                     : s.steps_per_unit_time;
  const std::vector<bool> combs =
      s.comb_distorted.empty() ? std::vector{config.comb.distorted} : s.comb_distorted;

  std::vector<SweepCell> cells;
  for (double g : gammas)
    for (double r : ratios)
      for (bool cd : combs)
        for (int st : steps) cells.push_back({g, r, st, cd});
  for (int st : s.steps_per_unit_time) {
    if (st < 1) throw ConfigError("sweep.steps_per_unit_time", "swept step counts must be >= 1");
  }
  // Validate up front so that a bad axis value fails before any run starts.
  for (const auto& cell : cells) resolve(config_for(config, cell));
  return cells;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int workers) {
  const auto cells = sweep_cells(config);
  const bool steps_swept = !config.sweep.steps_per_unit_time.empty();

  // Reference runs for the step-convergence columns, one per parameter group.
  std::vector<SweepCell> refs;
  if (steps_swept) {
    const int finest = *std::max_element(config.sweep.steps_per_unit_time.begin(),
                                         config.sweep.steps_per_unit_time.end());
    std::map<GroupKey, bool> seen;
    for (const auto& c : cells) {
      if (seen.emplace(group_of(c), true).second) {
        SweepCell r = c;
        r.steps_per_unit_time = 4 * std::max(finest, 1);
        refs.push_back(r);
      }
    }
  }

  const std::size_t n_cells = cells.size();
  std::vector<SweepRow> rows(n_cells);
  std::vector<WalkState> finals(n_cells + refs.size());
  std::vector<char> have_final(n_cells + refs.size(), 0);

  parallel_for(n_cells + refs.size(), workers, [&](std::size_t i) {
    const SweepCell cell = i < n_cells ? cells[i] : refs[i - n_cells];
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.cell = cell;
    try {
      auto result = simulate(config_for(config, cell));
      row.ok = true;
      row.total_variation = result.report.total_variation;
      row.max_norm_drift = result.trajectory.max_abs_norm_drift();
      finals[i] = result.trajectory.final_state();
      have_final[i] = 1;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (i < n_cells) rows[i] = std::move(row);
  });

  if (steps_swept) {
    std::map<GroupKey, std::size_t> ref_index;
    for (std::size_t r = 0; r < refs.size(); ++r) ref_index[group_of(refs[r])] = n_cells + r;
    for (std::size_t i = 0; i < n_cells; ++i) {
      const std::size_t ri = ref_index[group_of(cells[i])];
      if (!have_final[i] || !have_final[ri]) continue;
      double err = 0.0;
      for (std::size_t j = 0; j < finals[i].amplitudes.size(); ++j) {
        err = std::max(err, std::abs(finals[i].amplitudes[j] - finals[ri].amplitudes[j]));
      }
      rows[i].state_error = err;
    }
    for (std::size_t i = 0; i < n_cells; ++i) {
      for (std::size_t k = 0; k < n_cells; ++k) {
        if (group_of(cells[k]) == group_of(cells[i]) &&
            2 * cells[k].steps_per_unit_time == cells[i].steps_per_unit_time &&
            rows[k].state_error && rows[i].state_error && *rows[i].state_error > 0.0) {
          rows[i].error_ratio = *rows[k].state_error / *rows[i].state_error;
        }
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_timing) {
  out << "# combwalk sweep v" << kFormatVersion << '\n';
  out << "gamma,d_over_b,steps_per_unit_time,comb_distorted,status,total_variation,"
         "max_norm_drift,state_error,error_ratio," << (with_timing ? "wall_seconds," : "") << "error\n";
  for (const auto& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out << format_double(r.cell.gamma) << ',' << format_double(r.cell.d_over_b) << ','
        << r.cell.steps_per_unit_time << ',' << (r.cell.comb_distorted ? "true" : "false")
        << ',' << (r.ok ? "ok" : "failed") << ','
        << (r.ok ? format_double(r.total_variation) : "") << ','
        << (r.ok ? format_double(r.max_norm_drift) : "") << ','
        << (r.state_error ? format_double(*r.state_error) : "") << ','
        << (r.error_ratio ? format_double(*r.error_ratio) : "") << ','
        << (with_timing ? format_double(r.wall_seconds) + ',' : std::string()) << err << '\n';
  }
}

}  // namespace combwalk
