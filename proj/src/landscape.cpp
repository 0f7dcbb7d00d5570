#include "gridfire/landscape.hpp"

#include <numbers>
#include <stdexcept>

namespace gridfire {

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Available: return "Available";
    case CellStatus::Burning: return "Burning";
    case CellStatus::Burned: return "Burned";
    case CellStatus::Harvested: return "Harvested";
    case CellStatus::NonFuel: return "NonFuel";
  }
  return "?";
}

LandscapeGrid::LandscapeGrid(int nrows, int ncols, double cellsize, double xllcorner, double yllcorner,
                             FuelDictionary dictionary)
    : nrows_(nrows),
      ncols_(ncols),
      cellsize_(cellsize),
      xllcorner_(xllcorner),
      yllcorner_(yllcorner),
      dictionary_(std::move(dictionary)) {
  if (nrows <= 0 || ncols <= 0) throw std::runtime_error("landscape: dimensions must be positive");
  if (cellsize <= 0) throw std::runtime_error("landscape: cellsize must be positive");
  const std::size_t n = static_cast<std::size_t>(nrows) * ncols;
  fuel_index_.assign(n, -1);
  statuses_.assign(n, CellStatus::NonFuel);
  elevation_.assign(n, 0.0f);
  slope_pct_.assign(n, 0.0f);
  slope_azimuth_.assign(n, 0.0f);
  curing_.assign(n, 0.0f);
}

GridHeader LandscapeGrid::header() const {
  GridHeader h;
  h.ncols = ncols_;
  h.nrows = nrows_;
  h.xllcorner = xllcorner_;
  h.yllcorner = yllcorner_;
  h.cellsize = cellsize_;
  h.nodata_value = -9999.0;
  return h;
}

std::vector<int> LandscapeGrid::adjacency(int index) const {
  std::vector<int> out;
  out.reserve(kNumAxes);
  for (int a = 0; a < kNumAxes; ++a) {
    int j = neighbor(index, a);
    if (j >= 0) out.push_back(j);
  }
  return out;
}

namespace {

void check_shape(const Layer& fuels, const Layer& other, const char* name) {
  if (other.header.nrows != fuels.header.nrows || other.header.ncols != fuels.header.ncols) {
    throw std::runtime_error(std::string("landscape: ") + name + " layer is " +
                             std::to_string(other.header.nrows) + "x" + std::to_string(other.header.ncols) +
                             " but fuels layer is " + std::to_string(fuels.header.nrows) + "x" +
                             std::to_string(fuels.header.ncols));
  }
}

}  // namespace

LandscapeGrid load_landscape(const LandscapeLayers& layers, FuelDictionary dictionary) {
  const Layer& fuels = layers.fuels;
  if (layers.elevation) check_shape(fuels, *layers.elevation, "elevation");
  if (layers.slope_pct) check_shape(fuels, *layers.slope_pct, "slope");
  if (layers.slope_azimuth) check_shape(fuels, *layers.slope_azimuth, "slope azimuth");
  if (layers.curing) check_shape(fuels, *layers.curing, "curing");
  if (layers.slope_azimuth && !layers.slope_pct)
    throw std::runtime_error("landscape: slope azimuth layer given without a slope layer");

  LandscapeGrid grid(fuels.header.nrows, fuels.header.ncols, fuels.header.cellsize, fuels.header.xllcorner,
                     fuels.header.yllcorner, std::move(dictionary));
  const FuelDictionary& dict = grid.dictionary();

  const std::size_t n = fuels.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int index = static_cast<int>(i);
    if (fuels.nodata[i]) {
      grid.set_cell(index, -1, CellStatus::NonFuel);
    } else {
      const int code = static_cast<int>(fuels.values[i]);
      auto fi = dict.index_of_grid_value(code);
      if (!fi) {
        throw std::runtime_error("landscape: fuel code " + std::to_string(code) +
                                 " at cell " + std::to_string(LandscapeGrid::to_id(index)) +
                                 " is not in the fuel dictionary");
      }
      const bool flam = dict.at(*fi).flammable;
      grid.set_cell(index, static_cast<int>(*fi), flam ? CellStatus::Available : CellStatus::NonFuel);
    }

    auto layer_value = [&](const std::optional<Layer>& layer, double fallback) {
      if (!layer || layer->nodata[i]) return fallback;
      return layer->values[i];
    };
    double slope = layer_value(layers.slope_pct, 0.0);
    if (slope < 0) throw std::runtime_error("landscape: negative slope at cell " +
                                            std::to_string(LandscapeGrid::to_id(index)));
    double azimuth = layer_value(layers.slope_azimuth, 0.0);
    azimuth = std::fmod(azimuth, 2.0 * std::numbers::pi);
    if (azimuth < 0) azimuth += 2.0 * std::numbers::pi;
    grid.set_terrain(index, layer_value(layers.elevation, 0.0), slope, azimuth,
                     layer_value(layers.curing, 0.0));
  }
  return grid;
}

void apply_harvest_plan(LandscapeGrid& grid, const Layer& plan) {
  if (plan.header.nrows != grid.nrows() || plan.header.ncols != grid.ncols())
    throw std::runtime_error("harvest plan: dimensions do not match the landscape");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (plan.nodata[i] || plan.values[i] == 0) continue;
    if (plan.values[i] != 1)
      throw std::runtime_error("harvest plan: values must be 0 or 1, got " + std::to_string(plan.values[i]));
    const int index = static_cast<int>(i);
    if (grid.initial_status(index) == CellStatus::Available) grid.mark_harvested(index);
  }
}

}  // namespace gridfire
