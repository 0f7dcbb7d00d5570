#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridfire/fuel.hpp"
#include "gridfire/weather.hpp"

namespace gridfire {

struct SpreadInputs {
  const FuelRecord* fuel = nullptr;
  const WeatherRecord* weather = nullptr;
  double slope_pct = 0.0;
  double slope_azimuth = 0.0;  // radians, grid frame
  double ws_scale = 1.0;       // multiplier converting the stream's WS to km/h
};

// Head/back rates and shape of the fire ellipse a burning cell produces.
struct SpreadOutputs {
  double hros = 0.0;     // m/min, head
  double bros = 0.0;     // m/min, back
  double lb = 1.0;       // length-to-breadth ratio, a/b
  double heading = 0.0;  // radians, grid frame, direction of head spread
  std::optional<double> hfi;  // kW/m, when the model provides intensity
};

// Ellipse expanded per unit time: semi-axes, eccentricity and orientation.
struct EllipseParams {
  double a = 0.0;
  double b = 0.0;
  double eccentricity = 0.0;
  double heading = 0.0;
};

// Pluggable spread-rate model: stateless and deterministic, so a real fire
// behaviour system can be dropped in behind the same contract.
class SpreadModel {
public:
  virtual ~SpreadModel() = default;
  virtual SpreadOutputs evaluate(const SpreadInputs& inputs) const = 0;
};

// One row of the built-in parametric model table.
struct FuelModelEntry {
  std::string fuel_type;
  double ros0 = 0.0;          // m/min base head rate
  double wind_coeff = 0.0;    // per km/h
  double bros_frac = 1.0;     // back rate as a fraction of head rate, (0,1]
  double lb0 = 1.0;           // base length-to-breadth ratio
  double lb_wind_coeff = 0.0; // LB increment per km/h
  double slope_coeff = 0.0;   // per percent slope, along the heading
  double hfi0 = 0.0;          // kW/m per m/min of head rate; 0 = no intensity
};

// Simple parametric stand-in for an empirical fire behaviour system:
//   hros = ros0 * (1 + wind_coeff*ws) * max(0, 1 + slope_coeff*slope*cos(heading - azimuth))
//   bros = bros_frac * hros,  lb = lb0 + lb_wind_coeff*ws,  heading = wind heading
class TableSpreadModel : public SpreadModel {
public:
  explicit TableSpreadModel(std::vector<FuelModelEntry> entries);

  SpreadOutputs evaluate(const SpreadInputs& inputs) const override;
  const FuelModelEntry& entry_for(const std::string& fuel_type) const;
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<FuelModelEntry> entries_;
};

// CSV with header fuel_type,ros0,wind_coeff,bros_frac,lb0,lb_wind_coeff,slope_coeff,hfi0
TableSpreadModel parse_fuel_models(const std::string& text);

// Ellipse for one unit of time: a = (hros+bros)/2, b = fros = (hros+bros)/(2*lb),
// e = sqrt(1 - b^2/a^2). Requires hros > 0 and lb >= 1.
EllipseParams fit_ellipse(const SpreadOutputs& out);

// Directional rate of spread at an absolute grid angle (radians). With
// phi the angle from the heading: the front half (phi < 90 or > 270 deg)
// follows the focal chord a(1-e^2)/(1 - e*cos phi); the back half is the
// constant a(1-e^2).
double ros_at_angle(const EllipseParams& ell, double axis_angle);

// ros_at_angle evaluated at the 8 grid axes (0, 45, ..., 315 degrees).
std::array<double, 8> axis_rates(const EllipseParams& ell);

}  // namespace gridfire
