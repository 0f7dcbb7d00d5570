#include "gridfire/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridfire {

namespace {

void check_dims(const ScarGrid& x, const ScarGrid& y) {
  if (x.nrows != y.nrows || x.ncols != y.ncols)
    throw std::runtime_error("scar metrics: dimension mismatch, " + std::to_string(x.nrows) + "x" +
                             std::to_string(x.ncols) + " vs " + std::to_string(y.nrows) + "x" +
                             std::to_string(y.ncols));
  if (x.size() == 0) throw std::runtime_error("scar metrics: empty grids");
}

MetricAggregate aggregate(const std::vector<double>& values) {
  MetricAggregate agg;
  agg.min = values.front();
  agg.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    agg.min = std::min(agg.min, v);
    agg.max = std::max(agg.max, v);
  }
  agg.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - agg.mean) * (v - agg.mean);
  agg.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return agg;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::size_t ScarGrid::burned_count() const {
  std::size_t n = 0;
  for (auto v : values) n += v;
  return n;
}

double mse(const ScarGrid& x, const ScarGrid& y) {
  check_dims(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = static_cast<double>(x.values[i]) - static_cast<double>(y.values[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(x.size());
}

double frobenius(const ScarGrid& x, const ScarGrid& y) {
  check_dims(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = static_cast<double>(x.values[i]) - static_cast<double>(y.values[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

double ssim(const ScarGrid& x, const ScarGrid& y, const SsimOptions& opts) {
  check_dims(x, y);
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x.values[i];
    my += y.values[i];
  }
  mx /= n;
  my /= n;

  double vx = 0.0, vy = 0.0, cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = static_cast<double>(x.values[i]) - mx;
    double dy = static_cast<double>(y.values[i]) - my;
    vx += dx * dx;
    vy += dy * dy;
    cov += dx * dy;
  }
  vx /= n;
  vy /= n;
  cov /= n;

  const double c1 = (opts.k1 * opts.dynamic_range) * (opts.k1 * opts.dynamic_range);
  const double c2 = (opts.k2 * opts.dynamic_range) * (opts.k2 * opts.dynamic_range);
  const double numerator = (2.0 * mx * my + c1) * (2.0 * cov + c2);
  const double second_factor = opts.mean_only_denominator ? (mx * mx + my * my + c2) : (vx + vy + c2);
  return numerator / ((mx * mx + my * my + c1) * second_factor);
}

ComparisonReport evolution_report(const std::vector<ScarGrid>& xs, const std::vector<ScarGrid>& ys,
                                  const SsimOptions& opts) {
  if (xs.size() != ys.size())
    throw std::runtime_error("evolution report: sequence lengths differ, " + std::to_string(xs.size()) +
                             " vs " + std::to_string(ys.size()));
  if (xs.empty()) throw std::runtime_error("evolution report: empty sequences");

  ComparisonReport report;
  for (std::size_t h = 0; h < xs.size(); ++h)
    report.per_period.push_back({static_cast<int>(h + 1), mse(xs[h], ys[h]), ssim(xs[h], ys[h], opts)});
  report.final_mse = report.per_period.back().mse;
  report.final_ssim = report.per_period.back().ssim;
  report.delta_norm = frobenius(xs.back(), ys.back());
  return report;
}

BatchSummary aggregate_reports(const std::vector<ComparisonReport>& reports) {
  if (reports.empty()) throw std::runtime_error("batch summary: no reports");
  std::vector<double> mses, ssims, norms;
  for (const auto& r : reports) {
    mses.push_back(r.final_mse);
    ssims.push_back(r.final_ssim);
    norms.push_back(r.delta_norm);
  }
  return BatchSummary{aggregate(mses), aggregate(ssims), aggregate(norms)};
}

std::string evolution_csv(const ComparisonReport& report) {
  std::string out = "hour,one_minus_mse_pct,ssim_pct\n";
  for (const auto& row : report.per_period) {
    out += std::to_string(row.hour);
    out += ',' + format_fixed(100.0 * (1.0 - row.mse), 2);
    out += ',' + format_fixed(100.0 * row.ssim, 2);
    out += '\n';
  }
  return out;
}

std::string summary_csv(const BatchSummary& summary) {
  auto row = [](const char* name, const MetricAggregate& a) {
    return std::string(name) + ',' + format_fixed(a.mean, 6) + ',' + format_fixed(a.stddev, 6) + ',' +
           format_fixed(a.max, 6) + ',' + format_fixed(a.min, 6) + '\n';
  };
  std::string out = "metric,mean,std,max,min\n";
  out += row("mse", summary.mse);
  out += row("ssim", summary.ssim);
  out += row("delta_norm", summary.delta_norm);
  return out;
}

}  // namespace gridfire
