#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridfire/rng.hpp"

namespace gridfire {

// One hourly observation. wd follows the meteorological convention: degrees
// the wind blows FROM, clockwise from North.
struct WeatherRecord {
  std::string scenario;
  std::string datetime_text;   // "YYYY-MM-DD HH:MM"
  std::int64_t epoch_minutes = 0;
  double apcp = 0.0;  // mm
  double tmp = 0.0;   // degrees C
  double rh = 0.0;    // percent
  double ws = 0.0;    // wind speed (km/h by default, see --ws-unit)
  double wd = 0.0;    // degrees, meteorological
  std::optional<double> ffmc, dmc, dc, isi, bui, fwi;
};

struct WeatherScenario {
  std::string id;
  std::vector<WeatherRecord> records;
  double probability = 1.0;

  double duration_minutes() const { return 60.0 * static_cast<double>(records.size()); }
};

// CSV with header Scenario,datetime,APCP,TMP,RH,WS,WD[,FFMC,DMC,DC,ISI,BUI,FWI].
// Rows are grouped by scenario id and sorted chronologically; scenarios get
// uniform probabilities. Gaps other than exactly one hour are errors.
std::vector<WeatherScenario> parse_weather(const std::string& text);

// The record active at a simulation instant: records[floor(elapsed / 60)].
// Returns nullptr once the stream is exhausted (a fire-ending event).
const WeatherRecord* record_at(const WeatherScenario& scenario, double elapsed_minutes);

// Direction the fire is pushed toward, in the grid frame (radians,
// 0 = East, counter-clockwise): meteorological "from" + 180, then
// compass -> math angle conversion.
double wind_heading_grid_radians(double wd_deg);

// Seeded draw over scenario probabilities.
std::size_t sample_scenario(const std::vector<WeatherScenario>& scenarios, SplitMix64& rng);

}  // namespace gridfire
