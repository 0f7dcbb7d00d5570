// gridfire: cell-based wildfire growth simulator.
//
// Subcommands:
//   simulate  run fire growth over a raster landscape and write scars/logs
//   compare   score two scar folders against each other (MSE/SSIM/Frobenius)
//   bench     stage-timing profiles and strong/weak scaling reports

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridfire/ascii_grid.hpp"
#include "gridfire/bench.hpp"
#include "gridfire/csv.hpp"
#include "gridfire/engine.hpp"
#include "gridfire/ignition.hpp"
#include "gridfire/metrics.hpp"
#include "gridfire/outputs.hpp"

namespace fs = std::filesystem;
using namespace gridfire;

namespace {

struct SimulateOptions {
  std::string input_folder;
  std::string weather_path;
  std::string ignition_path;
  std::string fuel_model_path;
  std::string out_folder = "out";
  std::string palette_path;
  std::string from_echo;
  double fire_period_min = 1.0;
  double max_hours = 0.0;  // 0 = run to the end of the weather stream
  double max_burn_hours_per_day = 0.0;  // 0 = no daily budget
  double ros_threshold = 0.0;
  double hfi_threshold = 0.0;  // 0 = no HFI gate
  double ros_cv = 0.0;
  std::uint64_t seed = 0;
  int threads = 1;
  int scenario_draws = 1;
  std::string ws_unit = "kmh";
  int image_scale = 4;
  bool forest_image = false;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string echo_text(const SimulateOptions& o) {
  std::string out;
  out += "input_folder=" + o.input_folder + "\n";
  out += "weather=" + o.weather_path + "\n";
  out += "ignitions=" + o.ignition_path + "\n";
  out += "fuel_model=" + o.fuel_model_path + "\n";
  out += "palette=" + o.palette_path + "\n";
  out += "fire_period_min=" + format_number(o.fire_period_min) + "\n";
  out += "max_hours=" + format_number(o.max_hours) + "\n";
  out += "max_burn_hours_per_day=" + format_number(o.max_burn_hours_per_day) + "\n";
  out += "ros_threshold=" + format_number(o.ros_threshold) + "\n";
  out += "hfi_threshold=" + format_number(o.hfi_threshold) + "\n";
  out += "ros_cv=" + format_number(o.ros_cv) + "\n";
  out += "seed=" + std::to_string(o.seed) + "\n";
  out += "threads=" + std::to_string(o.threads) + "\n";
  out += "scenario_draws=" + std::to_string(o.scenario_draws) + "\n";
  out += "ws_unit=" + o.ws_unit + "\n";
  out += "image_scale=" + std::to_string(o.image_scale) + "\n";
  out += "forest_image=" + std::string(o.forest_image ? "1" : "0") + "\n";
  return out;
}

void apply_echo(SimulateOptions& o, const std::string& path) {
  std::map<std::string, std::string> kv;
  for (const auto& line : csv_lines(read_text_file(path))) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config echo: bad line '" + line + "'");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto get = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error(std::string("config echo: missing key '") + key + "'");
    return it->second;
  };
  o.input_folder = get("input_folder");
  o.weather_path = get("weather");
  o.ignition_path = get("ignitions");
  o.fuel_model_path = get("fuel_model");
  o.palette_path = get("palette");
  o.fire_period_min = std::stod(get("fire_period_min"));
  o.max_hours = std::stod(get("max_hours"));
  o.max_burn_hours_per_day = std::stod(get("max_burn_hours_per_day"));
  o.ros_threshold = std::stod(get("ros_threshold"));
  o.hfi_threshold = std::stod(get("hfi_threshold"));
  o.ros_cv = std::stod(get("ros_cv"));
  o.seed = std::stoull(get("seed"));
  o.threads = std::stoi(get("threads"));
  o.scenario_draws = std::stoi(get("scenario_draws"));
  o.ws_unit = get("ws_unit");
  o.image_scale = std::stoi(get("image_scale"));
  o.forest_image = get("forest_image") == "1";
}

std::optional<std::string> find_layer_file(const fs::path& folder, const std::string& stem) {
  for (const char* ext : {".asc", ".csv"}) {
    fs::path p = folder / (stem + ext);
    if (fs::exists(p)) return p.string();
  }
  return std::nullopt;
}

LandscapeGrid load_input_folder(const SimulateOptions& o) {
  fs::path folder(o.input_folder);
  if (!fs::is_directory(folder)) throw std::runtime_error("input folder not found: " + o.input_folder);
  fs::path fuels_path = folder / "fuels.asc";
  if (!fs::exists(fuels_path))
    throw std::runtime_error("missing fuels raster: " + fuels_path.string() +
                             " (the fuels layer must be an .asc grid)");

  LandscapeLayers layers;
  layers.fuels = parse_ascii_grid(read_text_file(fuels_path.string()));
  auto load_optional = [&](const std::string& stem) -> std::optional<Layer> {
    auto path = find_layer_file(folder, stem);
    if (!path) return std::nullopt;
    return read_layer_file(*path, &layers.fuels);
  };
  layers.elevation = load_optional("elevation");
  layers.slope_pct = load_optional("slope");
  layers.slope_azimuth = load_optional("azimuth");
  layers.curing = load_optional("curing");
  if (layers.slope_pct && !layers.slope_azimuth)
    std::cerr << "warning: slope layer present without azimuth; slope azimuth defaults to 0\n";

  FuelDictionary dictionary = builtin_fuel_dictionary();
  fs::path dict_path = folder / "fuel_dictionary.csv";
  if (fs::exists(dict_path)) dictionary = parse_fuel_dictionary(read_text_file(dict_path.string()));

  LandscapeGrid grid = load_landscape(layers, std::move(dictionary));

  auto harvest_path = find_layer_file(folder, "harvest");
  if (harvest_path) apply_harvest_plan(grid, read_layer_file(*harvest_path, &layers.fuels));
  return grid;
}

SimConfig build_config(const SimulateOptions& o) {
  SimConfig config;
  config.fire_period_minutes = o.fire_period_min;
  if (o.max_hours > 0) config.max_hours = o.max_hours;
  if (o.max_burn_hours_per_day > 0) config.max_burn_hours_per_day = o.max_burn_hours_per_day;
  config.ros_threshold = o.ros_threshold;
  if (o.hfi_threshold > 0) config.hfi_threshold = o.hfi_threshold;
  config.ros_cv = o.ros_cv;
  config.seed = o.seed;
  config.threads = o.threads;
  config.scenario_draws = o.scenario_draws;
  if (o.ws_unit == "kmh") config.ws_scale = 1.0;
  else if (o.ws_unit == "ms") config.ws_scale = 3.6;
  else throw std::runtime_error("ws-unit must be kmh or ms, got '" + o.ws_unit + "'");
  config.validate();
  return config;
}

int run_simulate(SimulateOptions& o) {
  if (!o.from_echo.empty()) {
    std::string out_override = o.out_folder;
    apply_echo(o, o.from_echo);
    o.out_folder = out_override;
  }
  if (o.weather_path.empty()) throw std::runtime_error("missing required --weather");
  if (o.fuel_model_path.empty()) throw std::runtime_error("missing required --fuel-model");
  if (!fs::exists(o.weather_path)) throw std::runtime_error("weather file not found: " + o.weather_path);
  if (!fs::exists(o.fuel_model_path)) throw std::runtime_error("fuel model file not found: " + o.fuel_model_path);

  LandscapeGrid grid = load_input_folder(o);
  auto scenarios = parse_weather(read_text_file(o.weather_path));
  TableSpreadModel model = parse_fuel_models(read_text_file(o.fuel_model_path));

  IgnitionSpec spec = IgnitionSpec::uniform();
  if (!o.ignition_path.empty()) {
    if (!fs::exists(o.ignition_path)) throw std::runtime_error("ignition file not found: " + o.ignition_path);
    if (o.ignition_path.size() > 4 && o.ignition_path.substr(o.ignition_path.size() - 4) == ".asc")
      spec = load_ignition_probability_map(parse_ascii_grid(read_text_file(o.ignition_path)), grid);
    else
      spec = load_ignitions(read_text_file(o.ignition_path), grid);
  }

  StatusPalette palette;
  if (!o.palette_path.empty()) palette = parse_status_palette(read_text_file(o.palette_path));

  SimConfig config = build_config(o);
  fs::create_directories(o.out_folder);
  fs::path out(o.out_folder);
  write_text_file((out / "config_echo.txt").string(), echo_text(o));

  Simulator sim(grid, scenarios, spec, model, config);
  const GridHeader header = grid.header();

  std::vector<SimResult> results;
  std::string stats = stats_csv_header();
  for (int k = 0; k < config.scenario_draws; ++k) {
    SimResult result = sim.run(static_cast<std::uint64_t>(k));
    stats += stats_csv_row(k, compute_statistics(result));
    if (k == 0) {
      for (std::size_t h = 0; h < result.hourly_scars.size(); ++h)
        write_burn_grid(result.hourly_scars[h], header,
                        (out / ("scar_h" + std::to_string(h + 1) + ".asc")).string());
      write_burn_grid(result.final_scar, header, (out / "final_scar.asc").string());
      write_text_file((out / "ignition_log.csv").string(), ignition_log_csv(result.ignition_log));
      write_text_file((out / "message_log.csv").string(), message_log_csv(result.message_log));
      write_text_file((out / "scar.ppm").string(),
                      render_status_image(result.final_statuses, grid.nrows(), grid.ncols(), palette,
                                          o.image_scale));
      std::printf("run 0: %zu cells burned, %d periods, ending reason %s\n",
                  result.final_scar.burned_count(), result.periods_executed,
                  to_string(result.ending_reason));
      if (result.budget_paused) std::printf("run 0: daily burn budget paused the fire\n");
      if (result.max_hours_hit) std::printf("run 0: simulated-hours cap reached\n");
    }
    results.push_back(std::move(result));
  }
  write_text_file((out / "stats.csv").string(), stats);

  if (o.forest_image)
    write_text_file((out / "forest.ppm").string(), render_fuel_image(grid, "", o.image_scale));

  if (config.scenario_draws > 1) {
    auto [map, agg] = aggregate_runs(results);
    write_text_file((out / "burn_probability.asc").string(), probability_map_text(map, header));
    char buf[96];
    std::snprintf(buf, sizeof(buf), "metric,mean,std\nburned_cells,%.4f,%.4f\n", agg.mean, agg.stddev);
    write_text_file((out / "aggregates.csv").string(), buf);
  }
  return 0;
}

std::map<int, fs::path> scar_files(const fs::path& folder) {
  if (!fs::is_directory(folder)) throw std::runtime_error("scar folder not found: " + folder.string());
  std::map<int, fs::path> files;
  for (const auto& entry : fs::directory_iterator(folder)) {
    const std::string name = entry.path().filename().string();
    int hour = 0;
    if (std::sscanf(name.c_str(), "scar_h%d.asc", &hour) == 1) files[hour] = entry.path();
  }
  if (files.empty()) throw std::runtime_error("no scar_h<H>.asc files in " + folder.string());
  return files;
}

ScarGrid load_scar(const fs::path& path) {
  Layer layer = parse_ascii_grid(read_text_file(path.string()));
  ScarGrid scar;
  scar.nrows = layer.header.nrows;
  scar.ncols = layer.header.ncols;
  scar.values.resize(layer.size());
  for (std::size_t i = 0; i < layer.size(); ++i) {
    double v = layer.nodata[i] ? 0.0 : layer.values[i];
    if (v != 0.0 && v != 1.0)
      throw std::runtime_error("scar " + path.string() + ": values must be 0 or 1");
    scar.values[i] = static_cast<std::uint8_t>(v);
  }
  return scar;
}

int run_compare(const std::string& folder_a, const std::string& folder_b, const std::string& out_folder,
                bool paper_literal) {
  auto files_a = scar_files(folder_a);
  auto files_b = scar_files(folder_b);

  std::string missing;
  for (const auto& [hour, path] : files_a)
    if (!files_b.count(hour)) missing += " " + folder_b + "/scar_h" + std::to_string(hour) + ".asc";
  for (const auto& [hour, path] : files_b)
    if (!files_a.count(hour)) missing += " " + folder_a + "/scar_h" + std::to_string(hour) + ".asc";
  if (!missing.empty()) throw std::runtime_error("scar folders do not match; missing:" + missing);

  std::vector<ScarGrid> xs, ys;
  for (const auto& [hour, path] : files_a) {
    xs.push_back(load_scar(path));
    ys.push_back(load_scar(files_b.at(hour)));
  }

  SsimOptions opts;
  opts.mean_only_denominator = paper_literal;
  ComparisonReport report = evolution_report(xs, ys, opts);

  fs::create_directories(out_folder);
  fs::path out(out_folder);
  write_text_file((out / "evolution.csv").string(), evolution_csv(report));
  write_text_file((out / "summary.csv").string(), summary_csv(aggregate_reports({report})));
  std::printf("final: 1-MSE %.2f%%, SSIM %.2f%%, delta_norm %.4f\n", 100.0 * (1.0 - report.final_mse),
              100.0 * report.final_ssim, report.delta_norm);
  return 0;
}

int run_bench(const std::string& mode, int side, double ros, int hours, const std::vector<int>& threads,
              int repeats, bool heterogeneous, double wind_speed, std::uint64_t seed,
              const std::string& out_folder) {
  if (threads.empty()) throw std::runtime_error("bench: at least one thread count required");
  for (int k : threads)
    if (k < 1) throw std::runtime_error("bench: thread counts must be >= 1");

  SyntheticOptions opts;
  opts.side = side;
  opts.ros0 = ros;
  opts.weather_hours = hours + 1;
  opts.wind_speed = wind_speed;
  opts.heterogeneous = heterogeneous;
  opts.seed = seed;

  SimConfig config;
  config.seed = seed;
  config.max_hours = static_cast<double>(hours);

  fs::create_directories(out_folder);
  fs::path out(out_folder);

  if (mode == "stages") {
    config.threads = threads.front();
    SyntheticInstance instance = make_synthetic_instance(opts);
    StageTiming timing = profile_stages(instance, config);
    write_text_file((out / "timing.csv").string(), timing_csv(timing));
    std::printf("send share: %.3f (send %.1f ms of %.1f ms total)\n", timing.send_share(), timing.send_ms,
                timing.total_ms);
    return 0;
  }

  ScalingReport report;
  if (mode == "strong") {
    report = strong_scaling(opts, config, threads, repeats);
  } else if (mode == "weak") {
    report = weak_scaling(opts, config, threads, repeats);
  } else {
    throw std::runtime_error("bench: mode must be stages, strong or weak");
  }
  write_text_file((out / "scaling.csv").string(), scaling_csv(report));
  if (report.validity_warning)
    std::cerr << "warning: heterogeneous weak scaling compares different fire dynamics; "
                 "efficiencies are not meaningful\n";
  for (const auto& row : report.rows)
    std::printf("n=%zu threads=%d wall=%.1fms speedup=%.2f\n", row.cells, row.threads, row.wall_ms,
                row.speedup);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gridfire: cell-based wildfire growth simulator"};
  app.require_subcommand(1);

  SimulateOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("simulate", "run a fire growth simulation");
  sim_cmd->add_option("--input-folder", sim_opts.input_folder, "folder with fuels.asc and optional layers");
  sim_cmd->add_option("--weather", sim_opts.weather_path, "hourly weather stream CSV");
  sim_cmd->add_option("--ignitions", sim_opts.ignition_path, "ignition CSV or probability raster (.asc)");
  sim_cmd->add_option("--fuel-model", sim_opts.fuel_model_path, "spread model table CSV");
  sim_cmd->add_option("--out", sim_opts.out_folder, "output folder");
  sim_cmd->add_option("--palette", sim_opts.palette_path, "status palette CSV (code,r,g,b)");
  sim_cmd->add_option("--fire-period-min", sim_opts.fire_period_min, "fire period length in minutes");
  sim_cmd->add_option("--max-hours", sim_opts.max_hours, "simulated-hours cap (0 = weather length)");
  sim_cmd->add_option("--max-burn-hours-per-day", sim_opts.max_burn_hours_per_day,
                      "daily burning budget in hours (0 = unlimited)");
  sim_cmd->add_option("--ros-threshold", sim_opts.ros_threshold, "minimum ROS (m/min) for ignition");
  sim_cmd->add_option("--hfi-threshold", sim_opts.hfi_threshold, "minimum head fire intensity (kW/m)");
  sim_cmd->add_option("--ros-cv", sim_opts.ros_cv, "ROS perturbation coefficient of variation");
  sim_cmd->add_option("--seed", sim_opts.seed, "random seed");
  sim_cmd->add_option("--threads", sim_opts.threads, "worker threads for the send stage");
  sim_cmd->add_option("--scenario-draws", sim_opts.scenario_draws, "Monte-Carlo replications");
  sim_cmd->add_option("--ws-unit", sim_opts.ws_unit, "weather WS unit: kmh or ms");
  sim_cmd->add_option("--image-scale", sim_opts.image_scale, "pixels per cell in images");
  sim_cmd->add_flag("--forest-image", sim_opts.forest_image, "also render the fuel layer");
  sim_cmd->add_option("--from-echo", sim_opts.from_echo, "load all parameters from a config echo file");

  std::string cmp_a, cmp_b, cmp_out = "compare_out";
  bool cmp_paper_literal = false;
  auto* cmp_cmd = app.add_subcommand("compare", "compare two scar folders");
  cmp_cmd->add_option("--a", cmp_a, "first scar folder")->required();
  cmp_cmd->add_option("--b", cmp_b, "second scar folder")->required();
  cmp_cmd->add_option("--out", cmp_out, "output folder");
  cmp_cmd->add_flag("--ssim-paper-literal", cmp_paper_literal,
                    "use the mean-only SSIM denominator variant");

  std::string bench_mode = "stages", bench_out = "bench_out", bench_threads = "1";
  int bench_side = 500, bench_hours = 4, bench_repeats = 5;
  double bench_ros = 100.0, bench_wind = 0.0;
  std::uint64_t bench_seed = 1;
  bool bench_hetero = false;
  auto* bench_cmd = app.add_subcommand("bench", "profile stages and scaling");
  bench_cmd->add_option("--mode", bench_mode, "stages, strong or weak");
  bench_cmd->add_option("--side", bench_side, "instance side length in cells");
  bench_cmd->add_option("--ros", bench_ros, "base head rate of spread m/min");
  bench_cmd->add_option("--hours", bench_hours, "simulated hours");
  bench_cmd->add_option("--threads", bench_threads, "comma-separated thread counts");
  bench_cmd->add_option("--repeats", bench_repeats, "runs per measurement (median)");
  bench_cmd->add_option("--wind", bench_wind, "wind speed km/h");
  bench_cmd->add_option("--seed", bench_seed, "instance seed");
  bench_cmd->add_flag("--heterogeneous", bench_hetero, "random fuel mosaic instance");
  bench_cmd->add_option("--out", bench_out, "output folder");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim_cmd->parsed()) return run_simulate(sim_opts);
    if (cmp_cmd->parsed()) return run_compare(cmp_a, cmp_b, cmp_out, cmp_paper_literal);
    if (bench_cmd->parsed()) {
      std::vector<int> threads;
      for (const auto& part : split_csv_line(bench_threads))
        if (!part.empty()) threads.push_back(static_cast<int>(to_integer(part, "bench threads")));
      return run_bench(bench_mode, bench_side, bench_ros, bench_hours, threads, bench_repeats, bench_hetero,
                       bench_wind, bench_seed, bench_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
