#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridfire/ascii_grid.hpp"
#include "gridfire/fuel.hpp"

namespace gridfire {

enum class CellStatus : std::uint8_t { Available = 0, Burning = 1, Burned = 2, Harvested = 3, NonFuel = 4 };

const char* to_string(CellStatus s);

// Spread axes from a cell to its (at most) 8 neighbours, grid frame,
// 0 deg = East increasing counter-clockwise. Row 0 is the northernmost
// raster row, so North is row - 1.
inline constexpr int kNumAxes = 8;
inline constexpr double kAxisAngleDeg[kNumAxes] = {0, 45, 90, 135, 180, 225, 270, 315};
inline constexpr int kAxisDr[kNumAxes] = {0, -1, -1, -1, 0, 1, 1, 1};
inline constexpr int kAxisDc[kNumAxes] = {1, 1, 0, -1, -1, -1, 0, 1};

constexpr bool axis_is_diagonal(int axis) { return (axis & 1) != 0; }

// Raster landscape: row-major cells with fuel, terrain and initial status.
// Public cell ids are 1-based row-major (id = index + 1); the internal API
// works with 0-based indices.
class LandscapeGrid {
public:
  LandscapeGrid(int nrows, int ncols, double cellsize, double xllcorner, double yllcorner,
                FuelDictionary dictionary);

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  double cellsize() const { return cellsize_; }
  double xllcorner() const { return xllcorner_; }
  double yllcorner() const { return yllcorner_; }
  std::size_t cell_count() const { return statuses_.size(); }
  const FuelDictionary& dictionary() const { return dictionary_; }

  GridHeader header() const;

  int index_of(int row, int col) const { return row * ncols_ + col; }
  int row_of(int index) const { return index / ncols_; }
  int col_of(int index) const { return index % ncols_; }
  static int to_id(int index) { return index + 1; }
  static int from_id(int id) { return id - 1; }
  bool in_bounds(int row, int col) const { return row >= 0 && row < nrows_ && col >= 0 && col < ncols_; }

  // Neighbour index along an axis, or -1 outside the grid.
  int neighbor(int index, int axis) const {
    int r = row_of(index) + kAxisDr[axis];
    int c = col_of(index) + kAxisDc[axis];
    return in_bounds(r, c) ? index_of(r, c) : -1;
  }

  std::vector<int> adjacency(int index) const;

  // Centre-to-centre distance along an axis, metres.
  double axis_distance(int axis) const { return axis_is_diagonal(axis) ? cellsize_ * std::numbers::sqrt2 : cellsize_; }

  // Per-cell attributes.
  CellStatus initial_status(int index) const { return statuses_[index]; }
  bool flammable(int index) const { return fuel_index_[index] >= 0 && dictionary_.at(fuel_index_[index]).flammable; }
  const FuelRecord* fuel(int index) const {
    return fuel_index_[index] >= 0 ? &dictionary_.at(fuel_index_[index]) : nullptr;
  }
  double elevation(int index) const { return elevation_[index]; }
  double slope_pct(int index) const { return slope_pct_[index]; }
  double slope_azimuth(int index) const { return slope_azimuth_[index]; }
  double curing(int index) const { return curing_[index]; }
  double center_x(int index) const { return xllcorner_ + (col_of(index) + 0.5) * cellsize_; }
  double center_y(int index) const { return yllcorner_ + (nrows_ - row_of(index) - 0.5) * cellsize_; }

  // Mutators used by the loader.
  void set_cell(int index, int fuel_index, CellStatus status) {
    fuel_index_[index] = fuel_index;
    statuses_[index] = status;
  }
  void set_terrain(int index, double elevation, double slope_pct, double slope_azimuth, double curing) {
    elevation_[index] = static_cast<float>(elevation);
    slope_pct_[index] = static_cast<float>(slope_pct);
    slope_azimuth_[index] = static_cast<float>(slope_azimuth);
    curing_[index] = static_cast<float>(curing);
  }
  void mark_harvested(int index) { statuses_[index] = CellStatus::Harvested; }

private:
  int nrows_;
  int ncols_;
  double cellsize_;
  double xllcorner_;
  double yllcorner_;
  FuelDictionary dictionary_;
  std::vector<std::int32_t> fuel_index_;  // -1 for NODATA cells
  std::vector<CellStatus> statuses_;
  std::vector<float> elevation_;
  std::vector<float> slope_pct_;
  std::vector<float> slope_azimuth_;
  std::vector<float> curing_;
};

// Optional layers default to flat terrain: elevation 0 m, slope 0 %,
// azimuth 0 rad, curing 0 %. All layers must match the fuel layer's shape.
struct LandscapeLayers {
  Layer fuels;
  std::optional<Layer> elevation;
  std::optional<Layer> slope_pct;
  std::optional<Layer> slope_azimuth;
  std::optional<Layer> curing;
};

LandscapeGrid load_landscape(const LandscapeLayers& layers, FuelDictionary dictionary);

// 0/1 raster, 1 marks cells harvested before the simulation starts.
void apply_harvest_plan(LandscapeGrid& grid, const Layer& plan);

}  // namespace gridfire
