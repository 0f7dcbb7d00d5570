#pragma once

#include <string>
#include <vector>

#include "gridfire/landscape.hpp"
#include "gridfire/rng.hpp"

namespace gridfire {

struct IgnitionEntry {
  int cell_index = 0;  // 0-based
  int period = 1;      // fire period at which this ignition is attempted
};

// Where a run's fire starts: an explicit list of candidate cells, a per-cell
// probability map, or a uniform draw over the Available cells.
class IgnitionSpec {
public:
  enum class Kind { Entries, ProbabilityMap, Uniform };

  static IgnitionSpec uniform();
  static IgnitionSpec from_entries(std::vector<IgnitionEntry> entries, const LandscapeGrid& grid);
  static IgnitionSpec from_probability_map(std::vector<double> weights, const LandscapeGrid& grid);

  Kind kind() const { return kind_; }
  const std::vector<IgnitionEntry>& entries() const { return entries_; }

  // Draws one ignition. Entry lists pick uniformly among entries; maps and
  // the uniform spec draw a cell with period 1.
  IgnitionEntry sample(const LandscapeGrid& grid, SplitMix64& rng) const;

private:
  IgnitionSpec() = default;
  Kind kind_ = Kind::Uniform;
  std::vector<IgnitionEntry> entries_;
  std::vector<double> cumulative_;  // over all cells, normalized
};

// CSV with header `cell,period` or `row,col,period` (ids and rows/cols are
// 1-based). Throws on references to non-ignitable cells or periods < 1.
IgnitionSpec load_ignitions(const std::string& text, const LandscapeGrid& grid);

// Probability raster: one weight per cell, weights >= 0 with a positive sum.
IgnitionSpec load_ignition_probability_map(const Layer& layer, const LandscapeGrid& grid);

}  // namespace gridfire
