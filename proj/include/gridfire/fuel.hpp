#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gridfire {

// One row of the fuel-type dictionary. grid_value is the code used in the
// fuels raster; fuel_type is the FBP-style code ("C-2", "NF", ...).
struct FuelRecord {
  int grid_value = 0;
  int export_value = 0;
  std::string descriptive_name;
  std::string fuel_type;
  bool flammable = true;
};

// Codes whose fuel_type designates a non-flammable cell.
bool fuel_type_is_nonfuel(const std::string& fuel_type);

class FuelDictionary {
public:
  FuelDictionary() = default;
  explicit FuelDictionary(std::vector<FuelRecord> records);

  const FuelRecord* find_by_grid_value(int grid_value) const;
  const FuelRecord& at(std::size_t index) const { return records_[index]; }
  std::optional<std::size_t> index_of_grid_value(int grid_value) const;
  std::size_t size() const { return records_.size(); }
  const std::vector<FuelRecord>& records() const { return records_; }

private:
  std::vector<FuelRecord> records_;
  std::unordered_map<int, std::size_t> by_grid_value_;
};

// CSV with header: grid_value,export_value,descriptive_name,fuel_type
FuelDictionary parse_fuel_dictionary(const std::string& text);

// Small built-in dictionary (C-1..C-3 conifer types plus a non-fuel code)
// used when an instance ships without one.
FuelDictionary builtin_fuel_dictionary();

}  // namespace gridfire
