#include "gridfire/fuel.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gridfire/csv.hpp"

namespace gridfire {

bool fuel_type_is_nonfuel(const std::string& fuel_type) {
  std::string t;
  for (char c : fuel_type)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '-' && c != '_')
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return t == "nf" || t == "nonfuel" || t == "wa" || t == "water";
}

FuelDictionary::FuelDictionary(std::vector<FuelRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const FuelRecord& r = records_[i];
    if (r.fuel_type.empty())
      throw std::runtime_error("fuel dictionary: empty fuel_type for grid_value " + std::to_string(r.grid_value));
    if (!by_grid_value_.emplace(r.grid_value, i).second)
      throw std::runtime_error("fuel dictionary: duplicate grid_value " + std::to_string(r.grid_value));
  }
}

const FuelRecord* FuelDictionary::find_by_grid_value(int grid_value) const {
  auto it = by_grid_value_.find(grid_value);
  return it == by_grid_value_.end() ? nullptr : &records_[it->second];
}

std::optional<std::size_t> FuelDictionary::index_of_grid_value(int grid_value) const {
  auto it = by_grid_value_.find(grid_value);
  if (it == by_grid_value_.end()) return std::nullopt;
  return it->second;
}

FuelDictionary parse_fuel_dictionary(const std::string& text) {
  auto lines = csv_lines(text);
  if (lines.empty()) throw std::runtime_error("fuel dictionary: empty file");
  auto header = split_csv_line(lines[0]);
  const std::vector<std::string> expected = {"grid_value", "export_value", "descriptive_name", "fuel_type"};
  if (header.size() < expected.size())
    throw std::runtime_error("fuel dictionary: header must be grid_value,export_value,descriptive_name,fuel_type");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    std::string h = header[i];
    std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
    if (h != expected[i])
      throw std::runtime_error("fuel dictionary: expected header column '" + expected[i] + "', got '" + header[i] + "'");
  }

  std::vector<FuelRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_line(lines[i]);
    if (fields.size() < 4)
      throw std::runtime_error("fuel dictionary: line " + std::to_string(i + 1) + " has fewer than 4 fields");
    FuelRecord r;
    r.grid_value = static_cast<int>(to_integer(fields[0], "fuel dictionary grid_value"));
    r.export_value = static_cast<int>(to_integer(fields[1], "fuel dictionary export_value"));
    r.descriptive_name = fields[2];
    r.fuel_type = fields[3];
    r.flammable = !fuel_type_is_nonfuel(r.fuel_type);
    records.push_back(std::move(r));
  }
  return FuelDictionary(std::move(records));
}

FuelDictionary builtin_fuel_dictionary() {
  std::vector<FuelRecord> records = {
      {1, 1, "Spruce-Lichen Woodland", "C-1", true},
      {2, 2, "Boreal Spruce", "C-2", true},
      {3, 3, "Mature Jack or Lodgepole Pine", "C-3", true},
      {101, 101, "Non-fuel", "NF", false},
      {102, 102, "Water", "WA", false},
  };
  return FuelDictionary(std::move(records));
}

}  // namespace gridfire
