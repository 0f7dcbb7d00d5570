#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gridfire/ignition.hpp"
#include "gridfire/landscape.hpp"
#include "gridfire/metrics.hpp"
#include "gridfire/spread.hpp"
#include "gridfire/weather.hpp"

namespace gridfire {

struct SimConfig {
  double fire_period_minutes = 1.0;  // must divide 60 evenly
  std::optional<double> max_hours;   // simulated-hours cap; unset = run to weather end
  double max_burn_hours_per_day = std::numeric_limits<double>::infinity();
  // Optional discrete distribution for the daily budget, sampled once per
  // run; empty = use the constant above.
  std::vector<std::pair<double, double>> burn_budget_choices;  // (hours, weight)
  double ros_threshold = 0.0;  // delta, m/min; ignition requires ROS > delta
  std::optional<double> hfi_threshold;  // kW/m
  double ros_cv = 0.0;
  std::uint64_t seed = 0;
  int threads = 1;
  int scenario_draws = 1;
  double ws_scale = 1.0;  // converts the weather stream's WS unit to km/h

  void validate() const;
  int periods_per_hour() const;
};

// Ignition carried from a burning cell to an adjacent one. Cell indices are
// 0-based; logs serialize them as 1-based ids.
struct FireMessage {
  std::int32_t sender = 0;
  std::int32_t receiver = 0;
  std::int32_t period = 0;
};

enum class EndReason : std::uint8_t { NoFuel, WeatherExhausted, MaxHours, NoSpread };

const char* to_string(EndReason r);

// Wall time spent in each stage of a run. "copy" is the inter-stage merge:
// message-buffer consolidation, burn-out marking and scar snapshots.
struct StageTiming {
  double ignite_ms = 0.0;
  double send_ms = 0.0;
  double receive_ms = 0.0;
  double copy_ms = 0.0;
  double total_ms = 0.0;

  double send_share() const { return total_ms > 0 ? send_ms / total_ms : 0.0; }
};

struct SimResult {
  std::vector<ScarGrid> hourly_scars;
  ScarGrid final_scar;
  std::vector<CellStatus> final_statuses;
  std::vector<std::pair<std::int32_t, std::int32_t>> ignition_log;  // (cell index, period)
  std::vector<FireMessage> message_log;
  EndReason ending_reason = EndReason::NoFuel;
  std::size_t scenario_index = 0;
  int periods_executed = 0;
  bool budget_paused = false;   // the daily burn budget froze the fire at least once
  bool max_hours_hit = false;   // TMax bound (reported even when weather ended first)
  StageTiming timing;
};

// Discrete-time fire growth over a landscape. Each fire period runs three
// stages: send (burning cells advance per-axis progress and emit messages;
// data-parallel over disjoint cell ranges with worker-local buffers),
// receive (messages ignite Available cells that pass the ROS/HFI gates),
// and burn-out (burning cells with no viable axis left become Burned).
// Results are bit-identical for a given seed regardless of thread count.
class Simulator {
public:
  Simulator(const LandscapeGrid& grid, const std::vector<WeatherScenario>& scenarios,
            const IgnitionSpec& spec, const SpreadModel& model, SimConfig config);
  ~Simulator();

  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  SimResult run(std::uint64_t run_index = 0);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SimResult run_simulation(const LandscapeGrid& grid, const std::vector<WeatherScenario>& scenarios,
                         const IgnitionSpec& spec, const SpreadModel& model, const SimConfig& config,
                         std::uint64_t run_index = 0);

}  // namespace gridfire
