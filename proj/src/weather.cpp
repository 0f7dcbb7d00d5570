#include "gridfire/weather.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "gridfire/csv.hpp"

namespace gridfire {

namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u + static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::int64_t parse_datetime_minutes(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0;
  char sep = 0;
  if (std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d", &y, &mo, &d, &sep, &h, &mi) != 6 ||
      (sep != ' ' && sep != 'T') || mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 || mi > 59)
    throw std::runtime_error("weather: bad datetime '" + text + "' (expected YYYY-MM-DD HH:MM)");
  return days_from_civil(y, mo, d) * 1440 + h * 60 + mi;
}

std::optional<double> optional_field(const std::vector<std::string>& fields, std::size_t i) {
  if (i >= fields.size() || fields[i].empty()) return std::nullopt;
  return to_number(fields[i], "weather FWI column");
}

}  // namespace

std::vector<WeatherScenario> parse_weather(const std::string& text) {
  auto lines = csv_lines(text);
  if (lines.empty()) throw std::runtime_error("weather: empty file");

  auto header = split_csv_line(lines[0]);
  for (auto& h : header)
    std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::vector<std::string> required = {"scenario", "datetime", "apcp", "tmp", "rh", "ws", "wd"};
  if (header.size() < required.size())
    throw std::runtime_error("weather: header must start with Scenario,datetime,APCP,TMP,RH,WS,WD");
  for (std::size_t i = 0; i < required.size(); ++i)
    if (header[i] != required[i])
      throw std::runtime_error("weather: expected header column '" + required[i] + "', got '" + header[i] + "'");

  std::vector<WeatherScenario> scenarios;
  auto scenario_for = [&](const std::string& id) -> WeatherScenario& {
    for (auto& s : scenarios)
      if (s.id == id) return s;
    scenarios.push_back(WeatherScenario{id, {}, 1.0});
    return scenarios.back();
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_line(lines[i]);
    if (fields.size() < 7)
      throw std::runtime_error("weather: line " + std::to_string(i + 1) + " has fewer than 7 fields");
    WeatherRecord rec;
    rec.scenario = fields[0];
    rec.datetime_text = fields[1];
    rec.epoch_minutes = parse_datetime_minutes(fields[1]);
    rec.apcp = to_number(fields[2], "weather APCP");
    rec.tmp = to_number(fields[3], "weather TMP");
    rec.rh = to_number(fields[4], "weather RH");
    rec.ws = to_number(fields[5], "weather WS");
    rec.wd = to_number(fields[6], "weather WD");
    rec.ffmc = optional_field(fields, 7);
    rec.dmc = optional_field(fields, 8);
    rec.dc = optional_field(fields, 9);
    rec.isi = optional_field(fields, 10);
    rec.bui = optional_field(fields, 11);
    rec.fwi = optional_field(fields, 12);

    if (rec.rh < 0 || rec.rh > 100)
      throw std::runtime_error("weather: RH out of [0,100] at " + rec.datetime_text);
    if (rec.ws < 0) throw std::runtime_error("weather: negative wind speed at " + rec.datetime_text);
    if (rec.wd < 0 || rec.wd >= 360)
      throw std::runtime_error("weather: WD out of [0,360) at " + rec.datetime_text);
    scenario_for(rec.scenario).records.push_back(std::move(rec));
  }

  if (scenarios.empty()) throw std::runtime_error("weather: no data rows");
  for (auto& s : scenarios) {
    std::stable_sort(s.records.begin(), s.records.end(),
                     [](const WeatherRecord& a, const WeatherRecord& b) { return a.epoch_minutes < b.epoch_minutes; });
    for (std::size_t i = 1; i < s.records.size(); ++i) {
      std::int64_t gap = s.records[i].epoch_minutes - s.records[i - 1].epoch_minutes;
      if (gap != 60)
        throw std::runtime_error("weather: scenario " + s.id + " is not hourly between " +
                                 s.records[i - 1].datetime_text + " and " + s.records[i].datetime_text);
    }
    s.probability = 1.0 / static_cast<double>(scenarios.size());
  }
  return scenarios;
}

const WeatherRecord* record_at(const WeatherScenario& scenario, double elapsed_minutes) {
  if (elapsed_minutes < 0) throw std::runtime_error("weather: negative elapsed time");
  std::size_t idx = static_cast<std::size_t>(std::floor(elapsed_minutes / 60.0));
  if (idx >= scenario.records.size()) return nullptr;
  return &scenario.records[idx];
}

double wind_heading_grid_radians(double wd_deg) {
  double toward_compass = std::fmod(wd_deg + 180.0, 360.0);
  double grid_deg = std::fmod(90.0 - toward_compass + 720.0, 360.0);
  return grid_deg * std::numbers::pi / 180.0;
}

std::size_t sample_scenario(const std::vector<WeatherScenario>& scenarios, SplitMix64& rng) {
  if (scenarios.empty()) throw std::runtime_error("weather: no scenarios to sample");
  if (scenarios.size() == 1) return 0;
  double total = 0.0;
  for (const auto& s : scenarios) total += s.probability;
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    acc += scenarios[i].probability;
    if (u < acc) return i;
  }
  return scenarios.size() - 1;
}

}  // namespace gridfire
