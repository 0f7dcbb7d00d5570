#include "gridfire/ignition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gridfire/csv.hpp"

namespace gridfire {

namespace {

void check_ignitable(const LandscapeGrid& grid, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= grid.cell_count())
    throw std::runtime_error("ignitions: cell " + std::to_string(LandscapeGrid::to_id(index)) +
                             " is outside the landscape");
  CellStatus s = grid.initial_status(index);
  if (s != CellStatus::Available)
    throw std::runtime_error("ignitions: cell " + std::to_string(LandscapeGrid::to_id(index)) +
                             " is " + to_string(s) + " and cannot ignite");
}

}  // namespace

IgnitionSpec IgnitionSpec::uniform() {
  IgnitionSpec spec;
  spec.kind_ = Kind::Uniform;
  return spec;
}

IgnitionSpec IgnitionSpec::from_entries(std::vector<IgnitionEntry> entries, const LandscapeGrid& grid) {
  if (entries.empty()) throw std::runtime_error("ignitions: no entries");
  for (const auto& e : entries) {
    check_ignitable(grid, e.cell_index);
    if (e.period < 1)
      throw std::runtime_error("ignitions: period must be >= 1, got " + std::to_string(e.period));
  }
  IgnitionSpec spec;
  spec.kind_ = Kind::Entries;
  spec.entries_ = std::move(entries);
  return spec;
}

IgnitionSpec IgnitionSpec::from_probability_map(std::vector<double> weights, const LandscapeGrid& grid) {
  if (weights.size() != grid.cell_count())
    throw std::runtime_error("ignitions: probability map size does not match the landscape");
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double w = weights[i];
    if (w < 0) throw std::runtime_error("ignitions: negative weight at cell " +
                                        std::to_string(LandscapeGrid::to_id(static_cast<int>(i))));
    if (w > 0) check_ignitable(grid, static_cast<int>(i));
    total += w;
  }
  if (total <= 0) throw std::runtime_error("ignitions: probability map has zero total weight");

  IgnitionSpec spec;
  spec.kind_ = Kind::ProbabilityMap;
  spec.cumulative_.resize(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i] / total;
    spec.cumulative_[i] = acc;
  }
  spec.cumulative_.back() = 1.0;
  return spec;
}

IgnitionEntry IgnitionSpec::sample(const LandscapeGrid& grid, SplitMix64& rng) const {
  switch (kind_) {
    case Kind::Entries: {
      if (entries_.size() == 1) return entries_[0];
      return entries_[rng() % entries_.size()];
    }
    case Kind::ProbabilityMap: {
      double u = rng.next_double();
      auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
      if (it == cumulative_.end()) --it;
      return {static_cast<int>(it - cumulative_.begin()), 1};
    }
    case Kind::Uniform: {
      std::vector<int> candidates;
      candidates.reserve(grid.cell_count());
      for (std::size_t i = 0; i < grid.cell_count(); ++i)
        if (grid.initial_status(static_cast<int>(i)) == CellStatus::Available)
          candidates.push_back(static_cast<int>(i));
      if (candidates.empty()) throw std::runtime_error("ignitions: no Available cell to ignite");
      return {candidates[rng() % candidates.size()], 1};
    }
  }
  throw std::logic_error("ignitions: bad spec kind");
}

IgnitionSpec load_ignitions(const std::string& text, const LandscapeGrid& grid) {
  auto lines = csv_lines(text);
  if (lines.empty()) throw std::runtime_error("ignitions: empty file");
  auto header = split_csv_line(lines[0]);
  for (auto& h : header)
    std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });

  bool by_id = header.size() >= 2 && header[0] == "cell" && header[1] == "period";
  bool by_rowcol = header.size() >= 3 && header[0] == "row" && header[1] == "col" && header[2] == "period";
  if (!by_id && !by_rowcol)
    throw std::runtime_error("ignitions: header must be 'cell,period' or 'row,col,period'");

  std::vector<IgnitionEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_line(lines[i]);
    IgnitionEntry e;
    if (by_id) {
      if (fields.size() < 2) throw std::runtime_error("ignitions: line " + std::to_string(i + 1) + " needs cell,period");
      e.cell_index = LandscapeGrid::from_id(static_cast<int>(to_integer(fields[0], "ignition cell")));
      e.period = static_cast<int>(to_integer(fields[1], "ignition period"));
    } else {
      if (fields.size() < 3) throw std::runtime_error("ignitions: line " + std::to_string(i + 1) + " needs row,col,period");
      int row = static_cast<int>(to_integer(fields[0], "ignition row")) - 1;
      int col = static_cast<int>(to_integer(fields[1], "ignition col")) - 1;
      if (!grid.in_bounds(row, col))
        throw std::runtime_error("ignitions: (row,col) = (" + fields[0] + "," + fields[1] + ") is outside the landscape");
      e.cell_index = grid.index_of(row, col);
      e.period = static_cast<int>(to_integer(fields[2], "ignition period"));
    }
    entries.push_back(e);
  }
  return IgnitionSpec::from_entries(std::move(entries), grid);
}

IgnitionSpec load_ignition_probability_map(const Layer& layer, const LandscapeGrid& grid) {
  if (layer.header.nrows != grid.nrows() || layer.header.ncols != grid.ncols())
    throw std::runtime_error("ignitions: probability raster dimensions do not match the landscape");
  std::vector<double> weights(layer.values.size(), 0.0);
  for (std::size_t i = 0; i < layer.values.size(); ++i)
    weights[i] = layer.nodata[i] ? 0.0 : layer.values[i];
  return IgnitionSpec::from_probability_map(std::move(weights), grid);
}

}  // namespace gridfire
