#include "gridfire/ascii_grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gridfire {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_number(const std::string& token, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("ascii grid: bad numeric value '" + token + "' for " + what);
  }
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, end);
}

}  // namespace

Layer parse_ascii_grid(const std::string& text) {
  std::istringstream in(text);
  GridHeader h;
  bool seen[6] = {false, false, false, false, false, false};
  static const char* names[6] = {"ncols", "nrows", "xllcorner", "yllcorner", "cellsize", "nodata_value"};

  for (int i = 0; i < 6; ++i) {
    std::string key, value;
    if (!(in >> key >> value)) {
      // Report the first header token we never saw.
      for (int k = 0; k < 6; ++k)
        if (!seen[k]) throw std::runtime_error(std::string("ascii grid: missing header token '") + names[k] + "'");
    }
    std::string lk = lower(key);
    int idx = -1;
    for (int k = 0; k < 6; ++k)
      if (lk == names[k]) idx = k;
    if (idx < 0) throw std::runtime_error("ascii grid: unexpected header token '" + key + "'");
    if (seen[idx]) throw std::runtime_error("ascii grid: duplicate header token '" + key + "'");
    seen[idx] = true;
    double v = parse_number(value, names[idx]);
    switch (idx) {
      case 0: h.ncols = static_cast<int>(v); break;
      case 1: h.nrows = static_cast<int>(v); break;
      case 2: h.xllcorner = v; break;
      case 3: h.yllcorner = v; break;
      case 4: h.cellsize = v; break;
      case 5: h.nodata_value = v; break;
    }
  }
  for (int k = 0; k < 6; ++k)
    if (!seen[k]) throw std::runtime_error(std::string("ascii grid: missing header token '") + names[k] + "'");
  if (h.ncols <= 0 || h.nrows <= 0) throw std::runtime_error("ascii grid: ncols/nrows must be positive");
  if (h.cellsize <= 0) throw std::runtime_error("ascii grid: cellsize must be positive");

  Layer layer;
  layer.header = h;
  const std::size_t expected = static_cast<std::size_t>(h.nrows) * h.ncols;
  layer.values.reserve(expected);
  std::string token;
  while (in >> token) layer.values.push_back(parse_number(token, "grid body"));
  if (layer.values.size() != expected) {
    throw std::runtime_error("ascii grid: expected " + std::to_string(expected) + " values, got " +
                             std::to_string(layer.values.size()));
  }
  layer.nodata.resize(expected, 0);
  for (std::size_t i = 0; i < expected; ++i)
    if (layer.values[i] == h.nodata_value) layer.nodata[i] = 1;
  return layer;
}

Layer parse_csv_layer(const std::string& text, int nrows, int ncols, double nodata_value) {
  Layer layer;
  layer.header.nrows = nrows;
  layer.header.ncols = ncols;
  layer.header.cellsize = 1.0;
  layer.header.nodata_value = nodata_value;
  const std::size_t expected = static_cast<std::size_t>(nrows) * ncols;
  layer.values.reserve(expected);

  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) layer.values.push_back(parse_number(token, "csv layer"));
  if (layer.values.size() != expected) {
    throw std::runtime_error("csv layer: expected " + std::to_string(expected) + " values, got " +
                             std::to_string(layer.values.size()));
  }
  layer.nodata.resize(expected, 0);
  for (std::size_t i = 0; i < expected; ++i)
    if (layer.values[i] == nodata_value) layer.nodata[i] = 1;
  return layer;
}

std::string write_ascii_grid(const Layer& layer) {
  std::string out;
  out += "ncols " + std::to_string(layer.header.ncols) + "\n";
  out += "nrows " + std::to_string(layer.header.nrows) + "\n";
  out += "xllcorner " + format_double(layer.header.xllcorner) + "\n";
  out += "yllcorner " + format_double(layer.header.yllcorner) + "\n";
  out += "cellsize " + format_double(layer.header.cellsize) + "\n";
  out += "NODATA_value " + format_double(layer.header.nodata_value) + "\n";
  for (int r = 0; r < layer.header.nrows; ++r) {
    for (int c = 0; c < layer.header.ncols; ++c) {
      if (c) out += ' ';
      out += format_double(layer.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

Layer read_layer_file(const std::string& path, const Layer* dims_from) {
  const std::string text = read_text_file(path);
  if (path.size() >= 4 && lower(path.substr(path.size() - 4)) == ".csv") {
    if (!dims_from) throw std::runtime_error("csv layer needs dimensions from the fuels layer: " + path);
    return parse_csv_layer(text, dims_from->header.nrows, dims_from->header.ncols,
                           dims_from->header.nodata_value);
  }
  return parse_ascii_grid(text);
}

}  // namespace gridfire
