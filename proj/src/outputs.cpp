#include "gridfire/outputs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "gridfire/csv.hpp"
#include "gridfire/rng.hpp"

namespace gridfire {

RunStatistics compute_statistics(const SimResult& result) {
  RunStatistics stats;
  for (CellStatus s : result.final_statuses) {
    switch (s) {
      case CellStatus::Burned:
      case CellStatus::Burning: ++stats.burned_count; break;
      case CellStatus::Available: ++stats.available_count; break;
      case CellStatus::NonFuel: ++stats.nonfuel_count; break;
      case CellStatus::Harvested: ++stats.harvested_count; break;
    }
  }
  const double total = static_cast<double>(result.final_statuses.size());
  if (total > 0) {
    stats.burned_pct = 100.0 * static_cast<double>(stats.burned_count) / total;
    stats.available_pct = 100.0 * static_cast<double>(stats.available_count) / total;
  }
  stats.messages_total = result.message_log.size();
  stats.ending_reason = result.ending_reason;
  return stats;
}

std::pair<BurnProbabilityMap, BurnedCountAggregate> aggregate_runs(const std::vector<SimResult>& results) {
  if (results.empty()) throw std::runtime_error("aggregate: no runs");
  const ScarGrid& first = results.front().final_scar;

  BurnProbabilityMap map;
  map.nrows = first.nrows;
  map.ncols = first.ncols;
  map.draws = static_cast<int>(results.size());
  map.probs.assign(first.size(), 0.0);

  std::vector<double> burned_counts;
  burned_counts.reserve(results.size());
  for (const auto& r : results) {
    if (r.final_scar.nrows != first.nrows || r.final_scar.ncols != first.ncols)
      throw std::runtime_error("aggregate: runs have mismatched grid dimensions");
    for (std::size_t i = 0; i < map.probs.size(); ++i) map.probs[i] += r.final_scar.values[i];
    burned_counts.push_back(static_cast<double>(r.final_scar.burned_count()));
  }
  for (auto& p : map.probs) p /= static_cast<double>(map.draws);

  BurnedCountAggregate agg;
  for (double c : burned_counts) agg.mean += c;
  agg.mean /= static_cast<double>(burned_counts.size());
  for (double c : burned_counts) agg.stddev += (c - agg.mean) * (c - agg.mean);
  agg.stddev = std::sqrt(agg.stddev / static_cast<double>(burned_counts.size()));
  return {std::move(map), agg};
}

std::string burn_grid_text(const ScarGrid& scar, const GridHeader& header) {
  if (scar.nrows != header.nrows || scar.ncols != header.ncols)
    throw std::runtime_error("burn grid: scar dimensions do not match the landscape header");
  Layer layer;
  layer.header = header;
  layer.values.assign(scar.values.begin(), scar.values.end());
  layer.nodata.assign(scar.size(), 0);
  return write_ascii_grid(layer);
}

void write_burn_grid(const ScarGrid& scar, const GridHeader& header, const std::string& path) {
  write_text_file(path, burn_grid_text(scar, header));
}

std::string probability_map_text(const BurnProbabilityMap& map, const GridHeader& header) {
  if (map.nrows != header.nrows || map.ncols != header.ncols)
    throw std::runtime_error("probability map: dimensions do not match the landscape header");
  Layer layer;
  layer.header = header;
  layer.values = map.probs;
  layer.nodata.assign(map.probs.size(), 0);
  return write_ascii_grid(layer);
}

std::string message_log_csv(const std::vector<FireMessage>& messages) {
  std::string out = "period,sender,receiver\n";
  for (const auto& m : messages) {
    out += std::to_string(m.period);
    out += ',' + std::to_string(LandscapeGrid::to_id(m.sender));
    out += ',' + std::to_string(LandscapeGrid::to_id(m.receiver));
    out += '\n';
  }
  return out;
}

std::string ignition_log_csv(const std::vector<std::pair<std::int32_t, std::int32_t>>& ignitions) {
  std::string out = "cell,period\n";
  for (const auto& [cell, period] : ignitions) {
    out += std::to_string(LandscapeGrid::to_id(cell));
    out += ',' + std::to_string(period);
    out += '\n';
  }
  return out;
}

std::string stats_csv_header() { return "run,burned,available,nonfuel,harvested,burned_pct,messages,ending_reason\n"; }

std::string stats_csv_row(int run, const RunStatistics& stats) {
  char pct[32];
  std::snprintf(pct, sizeof(pct), "%.4f", stats.burned_pct);
  std::string out = std::to_string(run);
  out += ',' + std::to_string(stats.burned_count);
  out += ',' + std::to_string(stats.available_count);
  out += ',' + std::to_string(stats.nonfuel_count);
  out += ',' + std::to_string(stats.harvested_count);
  out += ',';
  out += pct;
  out += ',' + std::to_string(stats.messages_total);
  out += ',';
  out += to_string(stats.ending_reason);
  out += '\n';
  return out;
}

const Rgb& StatusPalette::color(CellStatus s) const {
  switch (s) {
    case CellStatus::Available: return available;
    case CellStatus::Burning: return burning;
    case CellStatus::Burned: return burned;
    case CellStatus::Harvested: return harvested;
    case CellStatus::NonFuel: return nonfuel;
  }
  throw std::runtime_error("palette: unknown cell status");
}

StatusPalette parse_status_palette(const std::string& text) {
  StatusPalette palette;
  auto lines = csv_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = split_csv_line(lines[i]);
    if (i == 0 && !fields.empty() && fields[0] == "code") continue;  // optional header
    if (fields.size() < 4) throw std::runtime_error("palette: line " + std::to_string(i + 1) + " needs code,r,g,b");
    Rgb rgb{static_cast<std::uint8_t>(to_integer(fields[1], "palette r")),
            static_cast<std::uint8_t>(to_integer(fields[2], "palette g")),
            static_cast<std::uint8_t>(to_integer(fields[3], "palette b"))};
    std::string code = fields[0];
    std::transform(code.begin(), code.end(), code.begin(), [](unsigned char c) { return std::tolower(c); });
    if (code == "available") palette.available = rgb;
    else if (code == "burning") palette.burning = rgb;
    else if (code == "burned") palette.burned = rgb;
    else if (code == "harvested") palette.harvested = rgb;
    else if (code == "nonfuel") palette.nonfuel = rgb;
    else throw std::runtime_error("palette: unknown status code '" + fields[0] + "'");
  }
  return palette;
}

namespace {

std::string render_ppm(int nrows, int ncols, int scale, const std::function<Rgb(int, int)>& color_at) {
  if (scale < 1) throw std::runtime_error("image: pixel scale must be >= 1");
  const int width = ncols * scale;
  const int height = nrows * scale;
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(width) * height * 3);
  for (int py = 0; py < height; ++py) {
    const int r = py / scale;
    for (int px = 0; px < width; ++px) {
      const Rgb rgb = color_at(r, px / scale);
      out += static_cast<char>(rgb[0]);
      out += static_cast<char>(rgb[1]);
      out += static_cast<char>(rgb[2]);
    }
  }
  return out;
}

}  // namespace

std::string render_status_image(const std::vector<CellStatus>& statuses, int nrows, int ncols,
                                const StatusPalette& palette, int scale) {
  if (statuses.size() != static_cast<std::size_t>(nrows) * ncols)
    throw std::runtime_error("image: status vector does not match dimensions");
  return render_ppm(nrows, ncols, scale, [&](int r, int c) {
    return palette.color(statuses[static_cast<std::size_t>(r) * ncols + c]);
  });
}

std::string render_scar_image(const ScarGrid& scar, const StatusPalette& palette, int scale) {
  return render_ppm(scar.nrows, scar.ncols, scale, [&](int r, int c) {
    return scar.at(r, c) ? palette.burned : palette.available;
  });
}

std::string render_fuel_image(const LandscapeGrid& grid, const std::string& palette_csv, int scale) {
  std::unordered_map<int, Rgb> colors;
  if (!palette_csv.empty()) {
    auto lines = csv_lines(palette_csv);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto fields = split_csv_line(lines[i]);
      if (i == 0 && !fields.empty() && fields[0] == "code") continue;
      if (fields.size() < 4) throw std::runtime_error("fuel palette: line " + std::to_string(i + 1) + " needs code,r,g,b");
      colors[static_cast<int>(to_integer(fields[0], "fuel palette code"))] = {
          static_cast<std::uint8_t>(to_integer(fields[1], "palette r")),
          static_cast<std::uint8_t>(to_integer(fields[2], "palette g")),
          static_cast<std::uint8_t>(to_integer(fields[3], "palette b"))};
    }
  }
  auto hashed_color = [](int code) {
    std::uint64_t h = hash_mix(0x9a1e77, static_cast<std::uint64_t>(code));
    return Rgb{static_cast<std::uint8_t>(64 + (h & 0x7f)), static_cast<std::uint8_t>(64 + ((h >> 8) & 0x7f)),
               static_cast<std::uint8_t>(64 + ((h >> 16) & 0x7f))};
  };
  const Rgb gray{170, 170, 170};
  return render_ppm(grid.nrows(), grid.ncols(), scale, [&](int r, int c) {
    const FuelRecord* fuel = grid.fuel(grid.index_of(r, c));
    if (!fuel || !fuel->flammable) return gray;
    auto it = colors.find(fuel->grid_value);
    return it != colors.end() ? it->second : hashed_color(fuel->grid_value);
  });
}

}  // namespace gridfire
