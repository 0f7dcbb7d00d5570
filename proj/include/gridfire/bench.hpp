#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gridfire/engine.hpp"

namespace gridfire {

// Self-contained instance for scaling studies: landscape, weather stream,
// deterministic centre ignition and a spread model.
struct SyntheticInstance {
  std::unique_ptr<LandscapeGrid> grid;
  std::vector<WeatherScenario> scenarios;
  std::unique_ptr<IgnitionSpec> spec;
  std::unique_ptr<TableSpreadModel> model;
  bool homogeneous = true;
};

struct SyntheticOptions {
  int side = 100;               // grid is side x side cells
  double cellsize = 100.0;      // metres
  double ros0 = 100.0;          // m/min head rate of the single fuel
  int weather_hours = 12;
  double wind_speed = 0.0;      // km/h
  double wind_direction = 270;  // meteorological degrees
  bool heterogeneous = false;   // random fuel mosaic with non-fuel patches
  double nonfuel_fraction = 0.1;
  std::uint64_t seed = 1;
};

// Homogeneous single-fuel grid, or a seeded random mosaic of three fuel
// types plus non-fuel patches when heterogeneous is set.
SyntheticInstance make_synthetic_instance(const SyntheticOptions& options);

// Cumulative per-stage wall time over one full run.
StageTiming profile_stages(const SyntheticInstance& instance, const SimConfig& config);

struct ScalingRow {
  std::size_t cells = 0;
  int threads = 0;
  double wall_ms = 0.0;
  double speedup = 0.0;      // T(1) / T(k) on the same instance
  double strong_eff = 0.0;   // speedup / k
  double weak_eff = 0.0;     // T(1, n) / T(k, k*n); 0 when not a weak run
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  int repeats = 0;
  bool heterogeneous = false;
  // Heterogeneous weak scaling compares different fire dynamics; the report
  // is still produced but flagged as not meaningful.
  bool validity_warning = false;
};

// Same instance, varying thread counts; wall time is the median of
// `repeats` runs. thread_counts must include 1.
ScalingReport strong_scaling(const SyntheticOptions& options, const SimConfig& config,
                             const std::vector<int>& thread_counts, int repeats = 5);

// Instance grown proportionally to the thread count (cells ~ k*n, simulated
// hours ~ sqrt(k) so the burned region scales with the grid).
ScalingReport weak_scaling(const SyntheticOptions& base_options, const SimConfig& config,
                           const std::vector<int>& thread_counts, int repeats = 5);

std::string scaling_csv(const ScalingReport& report);
std::string timing_csv(const StageTiming& timing);

}  // namespace gridfire
