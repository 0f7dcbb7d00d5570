#include "gridfire/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gridfire/rng.hpp"

namespace gridfire {

namespace {

std::vector<WeatherScenario> constant_weather(int hours, double ws, double wd) {
  WeatherScenario scenario;
  scenario.id = "BENCH";
  for (int h = 0; h < hours; ++h) {
    WeatherRecord rec;
    rec.scenario = scenario.id;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "2001-10-16 %02d:00", h % 24);
    rec.datetime_text = buf;
    rec.epoch_minutes = static_cast<std::int64_t>(h) * 60;
    rec.tmp = 20.0;
    rec.rh = 30.0;
    rec.ws = ws;
    rec.wd = wd;
    scenario.records.push_back(std::move(rec));
  }
  return {std::move(scenario)};
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double timed_run(const SyntheticInstance& instance, const SimConfig& config, int repeats) {
  Simulator sim(*instance.grid, instance.scenarios, *instance.spec, *instance.model, config);
  std::vector<double> walls;
  walls.reserve(repeats);
  for (int r = 0; r < repeats; ++r) walls.push_back(sim.run().timing.total_ms);
  return median(std::move(walls));
}

}  // namespace

SyntheticInstance make_synthetic_instance(const SyntheticOptions& options) {
  if (options.side < 1) throw std::runtime_error("bench: instance side must be >= 1");

  std::vector<FuelRecord> fuels = {
      {1, 1, "Bench fuel A", "C-1", true},
      {2, 2, "Bench fuel B", "C-2", true},
      {3, 3, "Bench fuel C", "C-3", true},
      {9, 9, "Bench non-fuel", "NF", false},
  };
  FuelDictionary dictionary(std::move(fuels));

  Layer layer;
  layer.header.nrows = options.side;
  layer.header.ncols = options.side;
  layer.header.cellsize = options.cellsize;
  layer.header.nodata_value = -9999;
  layer.values.assign(static_cast<std::size_t>(options.side) * options.side, 2.0);
  layer.nodata.assign(layer.values.size(), 0);

  const int center = (options.side / 2) * options.side + options.side / 2;
  if (options.heterogeneous) {
    SplitMix64 rng(options.seed);
    for (auto& v : layer.values) {
      double u = rng.next_double();
      if (u < options.nonfuel_fraction) v = 9.0;
      else v = 1.0 + static_cast<double>(rng() % 3);
    }
    layer.values[center] = 2.0;  // keep the ignition cell flammable
  }

  SyntheticInstance instance;
  instance.homogeneous = !options.heterogeneous;
  instance.grid = std::make_unique<LandscapeGrid>(load_landscape({std::move(layer), {}, {}, {}, {}}, std::move(dictionary)));
  instance.scenarios = constant_weather(options.weather_hours, options.wind_speed, options.wind_direction);
  instance.spec = std::make_unique<IgnitionSpec>(
      IgnitionSpec::from_entries({IgnitionEntry{center, 1}}, *instance.grid));

  std::vector<FuelModelEntry> entries;
  for (const char* type : {"C-1", "C-2", "C-3"}) {
    FuelModelEntry e;
    e.fuel_type = type;
    e.ros0 = options.ros0;
    e.wind_coeff = 0.02;
    e.bros_frac = 1.0;
    e.lb0 = 1.0;
    e.lb_wind_coeff = 0.005;
    e.hfi0 = 0.0;
    entries.push_back(std::move(e));
  }
  instance.model = std::make_unique<TableSpreadModel>(std::move(entries));
  return instance;
}

StageTiming profile_stages(const SyntheticInstance& instance, const SimConfig& config) {
  return run_simulation(*instance.grid, instance.scenarios, *instance.spec, *instance.model, config).timing;
}

ScalingReport strong_scaling(const SyntheticOptions& options, const SimConfig& config,
                             const std::vector<int>& thread_counts, int repeats) {
  if (std::find(thread_counts.begin(), thread_counts.end(), 1) == thread_counts.end())
    throw std::runtime_error("bench: strong scaling needs a 1-thread baseline");
  if (repeats < 1) throw std::runtime_error("bench: repeats must be >= 1");

  SyntheticInstance instance = make_synthetic_instance(options);
  ScalingReport report;
  report.repeats = repeats;
  report.heterogeneous = options.heterogeneous;

  double t1 = 0.0;
  for (int k : thread_counts) {
    if (k < 1) throw std::runtime_error("bench: thread count must be >= 1");
    SimConfig cfg = config;
    cfg.threads = k;
    double wall = timed_run(instance, cfg, repeats);
    if (k == 1) t1 = wall;
    ScalingRow row;
    row.cells = instance.grid->cell_count();
    row.threads = k;
    row.wall_ms = wall;
    row.speedup = wall > 0 ? t1 / wall : 0.0;
    if (k == 1) row.speedup = 1.0;
    row.strong_eff = row.speedup / static_cast<double>(k);
    report.rows.push_back(row);
  }
  return report;
}

ScalingReport weak_scaling(const SyntheticOptions& base_options, const SimConfig& config,
                           const std::vector<int>& thread_counts, int repeats) {
  if (std::find(thread_counts.begin(), thread_counts.end(), 1) == thread_counts.end())
    throw std::runtime_error("bench: weak scaling needs a 1-thread baseline");
  if (repeats < 1) throw std::runtime_error("bench: repeats must be >= 1");

  ScalingReport report;
  report.repeats = repeats;
  report.heterogeneous = base_options.heterogeneous;
  report.validity_warning = base_options.heterogeneous;

  double t1 = 0.0;
  for (int k : thread_counts) {
    if (k < 1) throw std::runtime_error("bench: thread count must be >= 1");
    SyntheticOptions opts = base_options;
    // cells ~ k * n; burned area tracks the grid by letting the fire run
    // sqrt(k) times longer (radius ~ hours, area ~ hours^2).
    opts.side = static_cast<int>(std::lround(base_options.side * std::sqrt(static_cast<double>(k))));
    SimConfig cfg = config;
    cfg.threads = k;
    if (cfg.max_hours) cfg.max_hours = *cfg.max_hours * std::sqrt(static_cast<double>(k));
    opts.weather_hours = static_cast<int>(std::ceil(base_options.weather_hours * std::sqrt(static_cast<double>(k))));

    SyntheticInstance instance = make_synthetic_instance(opts);
    double wall = timed_run(instance, cfg, repeats);
    if (k == 1) t1 = wall;

    ScalingRow row;
    row.cells = instance.grid->cell_count();
    row.threads = k;
    row.wall_ms = wall;
    row.speedup = wall > 0 ? t1 / wall : 0.0;
    if (k == 1) row.speedup = 1.0;
    row.strong_eff = 0.0;
    row.weak_eff = k == 1 ? 1.0 : (wall > 0 ? t1 / wall : 0.0);
    report.rows.push_back(row);
  }
  return report;
}

std::string scaling_csv(const ScalingReport& report) {
  std::string out = "n,threads,wall_ms,speedup,strong_eff,weak_eff\n";
  char buf[160];
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%d,%.3f,%.3f,%.3f,%.3f\n", row.cells, row.threads, row.wall_ms,
                  row.speedup, row.strong_eff, row.weak_eff);
    out += buf;
  }
  if (report.validity_warning)
    out += "# warning: heterogeneous weak scaling compares different fire dynamics; "
           "efficiencies are not meaningful\n";
  return out;
}

std::string timing_csv(const StageTiming& timing) {
  const double total = timing.total_ms;
  auto share = [total](double ms) { return total > 0 ? ms / total : 0.0; };
  char buf[96];
  std::string out = "stage,ms,share\n";
  std::snprintf(buf, sizeof(buf), "ignite,%.3f,%.4f\n", timing.ignite_ms, share(timing.ignite_ms));
  out += buf;
  std::snprintf(buf, sizeof(buf), "send,%.3f,%.4f\n", timing.send_ms, share(timing.send_ms));
  out += buf;
  std::snprintf(buf, sizeof(buf), "receive,%.3f,%.4f\n", timing.receive_ms, share(timing.receive_ms));
  out += buf;
  std::snprintf(buf, sizeof(buf), "copy,%.3f,%.4f\n", timing.copy_ms, share(timing.copy_ms));
  out += buf;
  std::snprintf(buf, sizeof(buf), "total,%.3f,1.0000\n", total);
  out += buf;
  return out;
}

}  // namespace gridfire
