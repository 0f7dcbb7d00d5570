#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gridfire/ascii_grid.hpp"
#include "gridfire/engine.hpp"
#include "gridfire/metrics.hpp"

namespace gridfire {

// Final-state tallies for one run. Cells still Burning when the run ends
// count as burned (they are part of the final scar).
struct RunStatistics {
  std::size_t burned_count = 0;
  std::size_t available_count = 0;
  std::size_t nonfuel_count = 0;
  std::size_t harvested_count = 0;
  double burned_pct = 0.0;
  double available_pct = 0.0;
  std::size_t messages_total = 0;
  EndReason ending_reason = EndReason::NoFuel;
};

RunStatistics compute_statistics(const SimResult& result);

struct BurnProbabilityMap {
  int nrows = 0;
  int ncols = 0;
  std::vector<double> probs;  // burned frequency per cell, in [0,1]
  int draws = 0;
};

struct BurnedCountAggregate {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Per-cell burn frequency plus burned-count statistics over a batch of runs.
std::pair<BurnProbabilityMap, BurnedCountAggregate> aggregate_runs(const std::vector<SimResult>& results);

// 0/1 ASCII grid with the source landscape's header.
std::string burn_grid_text(const ScarGrid& scar, const GridHeader& header);
void write_burn_grid(const ScarGrid& scar, const GridHeader& header, const std::string& path);

std::string probability_map_text(const BurnProbabilityMap& map, const GridHeader& header);

// Log serializations: `period,sender,receiver` and `cell,period`, 1-based ids.
std::string message_log_csv(const std::vector<FireMessage>& messages);
std::string ignition_log_csv(const std::vector<std::pair<std::int32_t, std::int32_t>>& ignitions);

std::string stats_csv_header();
std::string stats_csv_row(int run, const RunStatistics& stats);

using Rgb = std::array<std::uint8_t, 3>;

// Colors for the five cell states, loadable from a `code,r,g,b` CSV where
// code is one of available, burning, burned, harvested, nonfuel.
struct StatusPalette {
  Rgb available{34, 139, 34};
  Rgb burning{255, 140, 0};
  Rgb burned{64, 64, 64};
  Rgb harvested{210, 180, 140};
  Rgb nonfuel{170, 170, 170};

  const Rgb& color(CellStatus s) const;
};

StatusPalette parse_status_palette(const std::string& text);

// Binary PPM (P6) rasters, one scale x scale pixel block per cell.
std::string render_status_image(const std::vector<CellStatus>& statuses, int nrows, int ncols,
                                const StatusPalette& palette, int scale = 1);
std::string render_scar_image(const ScarGrid& scar, const StatusPalette& palette, int scale = 1);

// Fuel-layer rendering: colors per grid_value from a `code,r,g,b` CSV;
// codes missing from the palette get deterministic hashed colors.
std::string render_fuel_image(const LandscapeGrid& grid, const std::string& palette_csv, int scale = 1);

}  // namespace gridfire
