#include "gridfire/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gridfire/rng.hpp"

namespace gridfire {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Persistent worker team for the send stage. Workers idle on a condition
// variable between stages; worker 0 is the calling thread.
class WorkerPool {
public:
  explicit WorkerPool(int threads) : team_size_(std::max(1, threads)) {
    for (int i = 1; i < team_size_; ++i)
      workers_.emplace_back([this, i] { worker_loop(i); });
  }

  ~WorkerPool() {
    {
      std::lock_guard<std::mutex> lk(mutex_);
      stop_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : workers_) t.join();
  }

  int team_size() const { return team_size_; }

  void run(const std::function<void(int)>& fn) {
    if (workers_.empty()) {
      fn(0);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(mutex_);
      task_ = &fn;
      pending_ = static_cast<int>(workers_.size());
      ++generation_;
    }
    start_cv_.notify_all();
    fn(0);
    std::unique_lock<std::mutex> lk(mutex_);
    done_cv_.wait(lk, [this] { return pending_ == 0; });
    task_ = nullptr;
  }

private:
  void worker_loop(int index) {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(int)>* task = nullptr;
      {
        std::unique_lock<std::mutex> lk(mutex_);
        start_cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        task = task_;
      }
      (*task)(index);
      {
        std::lock_guard<std::mutex> lk(mutex_);
        --pending_;
      }
      done_cv_.notify_one();
    }
  }

  int team_size_;
  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(int)>* task_ = nullptr;
  int pending_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

// Worker-local message buffer, cache-line aligned so neighbouring workers
// do not share a line (the classic false-sharing fix for vector<DS>).
struct alignas(64) MessageBuffer {
  std::vector<FireMessage> messages;
};

constexpr double kUnevaluatedRos = std::numeric_limits<double>::infinity();

// Below this many burning cells the send stage runs inline; splitting tiny
// fronts across workers costs more than it saves.
constexpr std::size_t kParallelThreshold = 128;

struct CellDyn {
  std::array<double, 8> progress{};
  std::array<double, 8> eff_ros{};
  std::int32_t ignition_period = 0;
  std::uint8_t msg_sent = 0;
};

}  // namespace

void SimConfig::validate() const {
  if (fire_period_minutes <= 0) throw std::runtime_error("config: fire period must be positive");
  double periods = 60.0 / fire_period_minutes;
  if (std::abs(periods - std::round(periods)) > 1e-9)
    throw std::runtime_error("config: fire period must divide 60 minutes evenly");
  if (max_hours && *max_hours <= 0) throw std::runtime_error("config: max hours must be positive");
  if (max_burn_hours_per_day <= 0) throw std::runtime_error("config: daily burn budget must be positive");
  if (ros_threshold < 0) throw std::runtime_error("config: ROS threshold must be >= 0");
  if (ros_cv < 0) throw std::runtime_error("config: ROS coefficient of variation must be >= 0");
  if (threads < 1) throw std::runtime_error("config: thread count must be >= 1");
  if (scenario_draws < 1) throw std::runtime_error("config: scenario draws must be >= 1");
  if (ws_scale <= 0) throw std::runtime_error("config: wind-speed scale must be positive");
  for (const auto& [hours, weight] : burn_budget_choices) {
    if (hours <= 0) throw std::runtime_error("config: burn budget choices must be positive hours");
    if (weight < 0) throw std::runtime_error("config: burn budget weights must be >= 0");
  }
}

int SimConfig::periods_per_hour() const {
  return static_cast<int>(std::llround(60.0 / fire_period_minutes));
}

const char* to_string(EndReason r) {
  switch (r) {
    case EndReason::NoFuel: return "NoFuel";
    case EndReason::WeatherExhausted: return "WeatherExhausted";
    case EndReason::MaxHours: return "MaxHours";
    case EndReason::NoSpread: return "NoSpread";
  }
  return "?";
}

struct Simulator::Impl {
  const LandscapeGrid& grid;
  const std::vector<WeatherScenario>& scenarios;
  const IgnitionSpec& spec;
  const SpreadModel& model;
  SimConfig config;

  std::vector<CellStatus> statuses;
  std::vector<CellDyn> dyn;
  std::vector<std::int32_t> burning;       // sorted ascending
  std::vector<std::int32_t> newly_burning;
  std::vector<MessageBuffer> buffers;
  std::vector<FireMessage> merged;
  std::vector<FireMessage> message_log;
  std::vector<std::pair<std::int32_t, std::int32_t>> ignition_log;
  std::unique_ptr<WorkerPool> pool;
  std::array<double, 8> axis_dist{};

  std::uint64_t run_seed = 0;

  Impl(const LandscapeGrid& g, const std::vector<WeatherScenario>& sc, const IgnitionSpec& sp,
       const SpreadModel& m, SimConfig cfg)
      : grid(g), scenarios(sc), spec(sp), model(m), config(std::move(cfg)) {
    config.validate();
    if (scenarios.empty()) throw std::runtime_error("engine: no weather scenarios");
    statuses.resize(grid.cell_count());
    dyn.resize(grid.cell_count());
    if (config.threads > 1) {
      pool = std::make_unique<WorkerPool>(config.threads);
      buffers.resize(config.threads);
    } else {
      buffers.resize(1);
    }
    for (int a = 0; a < kNumAxes; ++a) axis_dist[a] = grid.axis_distance(a);
  }

  void reset() {
    for (std::size_t i = 0; i < grid.cell_count(); ++i) statuses[i] = grid.initial_status(static_cast<int>(i));
    std::fill(dyn.begin(), dyn.end(), CellDyn{});
    burning.clear();
    newly_burning.clear();
    merged.clear();
    message_log.clear();
    ignition_log.clear();
  }

  SpreadOutputs evaluate_cell(int index, const WeatherRecord* weather) const {
    SpreadInputs in;
    in.fuel = grid.fuel(index);
    in.weather = weather;
    in.slope_pct = grid.slope_pct(index);
    in.slope_azimuth = grid.slope_azimuth(index);
    in.ws_scale = config.ws_scale;
    return model.evaluate(in);
  }

  bool ignition_gate(const SpreadOutputs& out) const {
    if (!(out.hros > config.ros_threshold)) return false;
    if (config.hfi_threshold && out.hfi && *out.hfi < *config.hfi_threshold) return false;
    return true;
  }

  void start_burning(int index, int period) {
    statuses[index] = CellStatus::Burning;
    CellDyn& d = dyn[index];
    d.progress.fill(0.0);
    d.eff_ros.fill(kUnevaluatedRos);
    d.msg_sent = 0;
    d.ignition_period = period;
    newly_burning.push_back(index);
    ignition_log.emplace_back(index, period);
  }

  // One burning cell's share of the send stage: advance progress along every
  // live axis, emit a message when the fire reaches a neighbour's centre.
  void send_cell(int index, const WeatherRecord* weather, int period, std::vector<FireMessage>& out) {
    CellDyn& d = dyn[index];
    bool evaluated = false;
    bool spreads = false;
    std::array<double, 8> rates{};

    for (int axis = 0; axis < kNumAxes; ++axis) {
      if (d.msg_sent & (1u << axis)) continue;
      const int j = grid.neighbor(index, axis);
      if (j < 0 || statuses[j] != CellStatus::Available) continue;

      if (!evaluated) {
        SpreadOutputs so = evaluate_cell(index, weather);
        spreads = so.hros > 0;
        if (spreads) rates = axis_rates(fit_ellipse(so));
        evaluated = true;
      }
      double rate = 0.0;
      if (spreads) {
        rate = rates[axis];
        if (config.ros_cv > 0)
          rate *= keyed_ros_factor(run_seed, LandscapeGrid::to_id(index), axis, config.ros_cv);
      }
      d.eff_ros[axis] = rate;
      if (rate <= 0) continue;

      const double dist = axis_dist[axis];
      double p = d.progress[axis] + rate * config.fire_period_minutes;
      if (p >= dist) {
        d.progress[axis] = dist;
        d.msg_sent |= (1u << axis);
        out.push_back(FireMessage{index, j, period});
      } else {
        d.progress[axis] = p;
      }
    }
  }

  void send_stage(const WeatherRecord* weather, int period) {
    const std::size_t count = burning.size();
    if (pool && count >= kParallelThreshold) {
      const int team = pool->team_size();
      const std::size_t chunk = (count + team - 1) / team;
      pool->run([&](int w) {
        const std::size_t begin = std::min(count, static_cast<std::size_t>(w) * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        auto& out = buffers[w].messages;
        for (std::size_t k = begin; k < end; ++k) send_cell(burning[k], weather, period, out);
      });
    } else {
      auto& out = buffers[0].messages;
      for (std::size_t k = 0; k < count; ++k) send_cell(burning[k], weather, period, out);
    }
  }

  // Consolidates worker buffers into a canonical (sender, receiver) order so
  // logs and receive processing are independent of the work partition.
  void merge_messages() {
    merged.clear();
    for (auto& buf : buffers) {
      merged.insert(merged.end(), buf.messages.begin(), buf.messages.end());
      buf.messages.clear();
    }
    std::sort(merged.begin(), merged.end(), [](const FireMessage& a, const FireMessage& b) {
      return a.sender != b.sender ? a.sender < b.sender : a.receiver < b.receiver;
    });
  }

  void receive_stage(const WeatherRecord* weather, int period) {
    for (const FireMessage& msg : merged) {
      if (statuses[msg.receiver] != CellStatus::Available) continue;  // duplicate in this period
      SpreadOutputs so = evaluate_cell(msg.receiver, weather);
      if (ignition_gate(so)) start_burning(msg.receiver, period);
    }
  }

  void burnout_stage() {
    auto ready_to_burn_out = [&](int index) {
      const CellDyn& d = dyn[index];
      bool any_viable = false;
      for (int axis = 0; axis < kNumAxes; ++axis) {
        if (d.msg_sent & (1u << axis)) continue;
        const int j = grid.neighbor(index, axis);
        if (j < 0 || statuses[j] != CellStatus::Available) continue;
        // Live axis; unevaluated axes (+inf sentinel) count as viable.
        if (!(d.eff_ros[axis] < config.ros_threshold)) {
          any_viable = true;
          break;
        }
      }
      return !any_viable;
    };

    // Fold this period's ignitions into the sorted burning list first.
    if (!newly_burning.empty()) {
      std::sort(newly_burning.begin(), newly_burning.end());
      const std::size_t mid = burning.size();
      burning.insert(burning.end(), newly_burning.begin(), newly_burning.end());
      std::inplace_merge(burning.begin(), burning.begin() + static_cast<std::ptrdiff_t>(mid), burning.end());
      newly_burning.clear();
    }

    std::size_t kept = 0;
    for (std::size_t k = 0; k < burning.size(); ++k) {
      const int index = burning[k];
      if (ready_to_burn_out(index)) {
        statuses[index] = CellStatus::Burned;
      } else {
        burning[kept++] = index;
      }
    }
    burning.resize(kept);
  }

  ScarGrid snapshot() const {
    ScarGrid scar = ScarGrid::zeros(grid.nrows(), grid.ncols());
    for (std::size_t i = 0; i < statuses.size(); ++i)
      if (statuses[i] == CellStatus::Burning || statuses[i] == CellStatus::Burned) scar.values[i] = 1;
    return scar;
  }

  double daily_budget_hours(SplitMix64& rng) const {
    if (config.burn_budget_choices.empty()) return config.max_burn_hours_per_day;
    double total = 0.0;
    for (const auto& [hours, weight] : config.burn_budget_choices) total += weight;
    if (total <= 0) return config.max_burn_hours_per_day;
    double u = rng.next_double() * total;
    double acc = 0.0;
    for (const auto& [hours, weight] : config.burn_budget_choices) {
      acc += weight;
      if (u < acc) return hours;
    }
    return config.burn_budget_choices.back().first;
  }

  SimResult run(std::uint64_t run_index) {
    reset();
    run_seed = hash_mix(config.seed, run_index);
    SplitMix64 rng(hash_mix(run_seed, 0xf17eULL));

    SimResult result;
    const auto run_start = Clock::now();

    // Step 1: pick the weather scenario and the ignition for this run.
    auto t_ignite = Clock::now();
    result.scenario_index = sample_scenario(scenarios, rng);
    const WeatherScenario& scenario = scenarios[result.scenario_index];
    IgnitionEntry pending = spec.sample(grid, rng);
    bool has_pending = true;
    const double budget_hours = daily_budget_hours(rng);
    result.timing.ignite_ms += ms_since(t_ignite);

    const double dt = config.fire_period_minutes;
    const int pph = config.periods_per_hour();
    const std::int64_t tmax =
        config.max_hours ? std::llround(*config.max_hours * 60.0 / dt) : std::numeric_limits<std::int64_t>::max();

    int executed = 0;
    int hours_emitted = 0;
    bool ended = false;

    for (std::int64_t period = 1; !ended; ++period) {
      if (period > tmax) {
        result.ending_reason = EndReason::MaxHours;
        result.max_hours_hit = true;
        break;
      }
      const double elapsed = static_cast<double>(period - 1) * dt;
      const WeatherRecord* weather = record_at(scenario, elapsed);
      if (!weather) {
        result.ending_reason = EndReason::WeatherExhausted;
        break;
      }

      if (has_pending && period >= pending.period) {
        t_ignite = Clock::now();
        has_pending = false;
        SpreadOutputs so = evaluate_cell(pending.cell_index, weather);
        const bool ok = ignition_gate(so);
        if (ok) {
          start_burning(pending.cell_index, static_cast<int>(period));
          burning.insert(burning.end(), newly_burning.begin(), newly_burning.end());
          newly_burning.clear();
        }
        result.timing.ignite_ms += ms_since(t_ignite);
        if (!ok) {
          result.ending_reason = EndReason::NoSpread;
          executed = static_cast<int>(period);
          break;
        }
      }

      const bool active = std::fmod(elapsed, 1440.0) / 60.0 < budget_hours;
      if (!active) result.budget_paused = true;

      if (active && !burning.empty()) {
        auto t0 = Clock::now();
        send_stage(weather, static_cast<int>(period));
        result.timing.send_ms += ms_since(t0);

        t0 = Clock::now();
        merge_messages();
        message_log.insert(message_log.end(), merged.begin(), merged.end());
        result.timing.copy_ms += ms_since(t0);

        t0 = Clock::now();
        receive_stage(weather, static_cast<int>(period));
        result.timing.receive_ms += ms_since(t0);

        t0 = Clock::now();
        burnout_stage();
        result.timing.copy_ms += ms_since(t0);
      }

      executed = static_cast<int>(period);

      if (period % pph == 0) {
        auto t0 = Clock::now();
        result.hourly_scars.push_back(snapshot());
        ++hours_emitted;
        result.timing.copy_ms += ms_since(t0);
      }

      if (burning.empty() && !has_pending) {
        result.ending_reason = EndReason::NoFuel;
        ended = true;
      }
    }

    // Partial final hour, e.g. a fire that died mid-hour.
    if (executed * dt > hours_emitted * 60.0) result.hourly_scars.push_back(snapshot());

    result.final_scar = snapshot();
    result.final_statuses = statuses;
    result.ignition_log = std::move(ignition_log);
    result.message_log = std::move(message_log);
    result.periods_executed = executed;
    result.timing.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - run_start).count();
    return result;
  }
};

Simulator::Simulator(const LandscapeGrid& grid, const std::vector<WeatherScenario>& scenarios,
                     const IgnitionSpec& spec, const SpreadModel& model, SimConfig config)
    : impl_(std::make_unique<Impl>(grid, scenarios, spec, model, std::move(config))) {}

Simulator::~Simulator() = default;

SimResult Simulator::run(std::uint64_t run_index) { return impl_->run(run_index); }

SimResult run_simulation(const LandscapeGrid& grid, const std::vector<WeatherScenario>& scenarios,
                         const IgnitionSpec& spec, const SpreadModel& model, const SimConfig& config,
                         std::uint64_t run_index) {
  Simulator sim(grid, scenarios, spec, model, config);
  return sim.run(run_index);
}

}  // namespace gridfire
