#include "gridfire/spread.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gridfire/csv.hpp"
#include "gridfire/landscape.hpp"

namespace gridfire {

TableSpreadModel::TableSpreadModel(std::vector<FuelModelEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.fuel_type.empty()) throw std::runtime_error("fuel model: empty fuel_type");
    if (e.ros0 < 0) throw std::runtime_error("fuel model " + e.fuel_type + ": ros0 must be >= 0");
    if (e.bros_frac <= 0 || e.bros_frac > 1)
      throw std::runtime_error("fuel model " + e.fuel_type + ": bros_frac must be in (0,1]");
    if (e.lb0 < 1) throw std::runtime_error("fuel model " + e.fuel_type + ": lb0 must be >= 1");
  }
}

const FuelModelEntry& TableSpreadModel::entry_for(const std::string& fuel_type) const {
  for (const auto& e : entries_)
    if (e.fuel_type == fuel_type) return e;
  throw std::runtime_error("fuel model: no entry for fuel type '" + fuel_type + "'");
}

SpreadOutputs TableSpreadModel::evaluate(const SpreadInputs& inputs) const {
  if (!inputs.fuel) throw std::runtime_error("spread: missing fuel record");
  if (!inputs.fuel->flammable)
    throw std::runtime_error("spread: fuel type '" + inputs.fuel->fuel_type + "' is not flammable");
  if (!inputs.weather) throw std::runtime_error("spread: missing weather record");

  const FuelModelEntry& e = entry_for(inputs.fuel->fuel_type);
  const double ws = inputs.weather->ws * inputs.ws_scale;
  const double heading = wind_heading_grid_radians(inputs.weather->wd);

  double slope_factor = 1.0 + e.slope_coeff * inputs.slope_pct * std::cos(heading - inputs.slope_azimuth);
  slope_factor = std::max(0.0, slope_factor);

  SpreadOutputs out;
  out.hros = e.ros0 * (1.0 + e.wind_coeff * ws) * slope_factor;
  out.bros = e.bros_frac * out.hros;
  out.lb = e.lb0 + e.lb_wind_coeff * ws;
  out.heading = heading;
  if (e.hfi0 > 0) out.hfi = e.hfi0 * out.hros;
  return out;
}

TableSpreadModel parse_fuel_models(const std::string& text) {
  auto lines = csv_lines(text);
  if (lines.empty()) throw std::runtime_error("fuel model: empty file");
  auto header = split_csv_line(lines[0]);
  const std::vector<std::string> expected = {"fuel_type", "ros0",          "wind_coeff",  "bros_frac",
                                             "lb0",       "lb_wind_coeff", "slope_coeff", "hfi0"};
  if (header.size() < expected.size())
    throw std::runtime_error("fuel model: header must be fuel_type,ros0,wind_coeff,bros_frac,lb0,lb_wind_coeff,slope_coeff,hfi0");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    std::string h = header[i];
    std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
    if (h != expected[i])
      throw std::runtime_error("fuel model: expected header column '" + expected[i] + "', got '" + header[i] + "'");
  }

  std::vector<FuelModelEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_line(lines[i]);
    if (fields.size() < 8)
      throw std::runtime_error("fuel model: line " + std::to_string(i + 1) + " has fewer than 8 fields");
    FuelModelEntry e;
    e.fuel_type = fields[0];
    e.ros0 = to_number(fields[1], "fuel model ros0");
    e.wind_coeff = to_number(fields[2], "fuel model wind_coeff");
    e.bros_frac = to_number(fields[3], "fuel model bros_frac");
    e.lb0 = to_number(fields[4], "fuel model lb0");
    e.lb_wind_coeff = to_number(fields[5], "fuel model lb_wind_coeff");
    e.slope_coeff = to_number(fields[6], "fuel model slope_coeff");
    e.hfi0 = to_number(fields[7], "fuel model hfi0");
    entries.push_back(std::move(e));
  }
  return TableSpreadModel(std::move(entries));
}

EllipseParams fit_ellipse(const SpreadOutputs& out) {
  if (out.hros <= 0) throw std::runtime_error("ellipse: head rate must be positive");
  if (out.lb < 1) throw std::runtime_error("ellipse: length-to-breadth ratio " + std::to_string(out.lb) +
                                           " < 1 would put the minor axis above the major");
  EllipseParams ell;
  ell.a = (out.hros + out.bros) / 2.0;
  const double fros = (out.hros + out.bros) / (2.0 * out.lb);
  ell.b = fros;
  ell.eccentricity = std::sqrt(std::max(0.0, 1.0 - (ell.b * ell.b) / (ell.a * ell.a)));
  ell.heading = out.heading;
  return ell;
}

double ros_at_angle(const EllipseParams& ell, double axis_angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double phi = std::fmod(axis_angle - ell.heading, two_pi);
  if (phi < 0) phi += two_pi;

  const double e = ell.eccentricity;
  const double latus = ell.a * (1.0 - e * e);
  constexpr double quarter = std::numbers::pi / 2.0;
  if (phi < quarter || phi > 3.0 * quarter) return latus / (1.0 - e * std::cos(phi));
  return latus;
}

std::array<double, 8> axis_rates(const EllipseParams& ell) {
  std::array<double, 8> rates{};
  for (int axis = 0; axis < kNumAxes; ++axis)
    rates[axis] = ros_at_angle(ell, kAxisAngleDeg[axis] * std::numbers::pi / 180.0);
  return rates;
}

}  // namespace gridfire
