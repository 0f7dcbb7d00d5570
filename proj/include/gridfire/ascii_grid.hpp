#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gridfire {

// Header block of an ESRI ASCII grid (6 lines, then nrows x ncols values).
struct GridHeader {
  int ncols = 0;
  int nrows = 0;
  double xllcorner = 0.0;
  double yllcorner = 0.0;
  double cellsize = 0.0;
  double nodata_value = -9999.0;
};

// One raster layer: header plus row-major values, rows top to bottom.
struct Layer {
  GridHeader header;
  std::vector<double> values;           // nrows * ncols
  std::vector<std::uint8_t> nodata;     // 1 where the source had NODATA_value

  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * header.ncols + col]; }
  bool is_nodata(int row, int col) const { return nodata[static_cast<std::size_t>(row) * header.ncols + col] != 0; }
  std::size_t size() const { return values.size(); }
};

// Parses ESRI ASCII grid text. Throws std::runtime_error naming the missing
// header token, or reporting expected/actual value counts on size mismatch.
Layer parse_ascii_grid(const std::string& text);

// Headerless whitespace/comma separated values; dimensions are dictated by
// the caller (taken from the fuels layer when loading a landscape).
Layer parse_csv_layer(const std::string& text, int nrows, int ncols, double nodata_value = -9999.0);

// Serializes a layer back to ASCII grid text. Values use shortest
// round-trip formatting, so parse(write(parse(f))) == parse(f).
std::string write_ascii_grid(const Layer& layer);

Layer read_layer_file(const std::string& path, const Layer* dims_from = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace gridfire
