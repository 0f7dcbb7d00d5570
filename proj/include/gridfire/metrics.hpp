#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gridfire {

// 0/1 burn matrix: 1 marks cells the fire has reached.
struct ScarGrid {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::uint8_t> values;

  static ScarGrid zeros(int nrows, int ncols) {
    return ScarGrid{nrows, ncols, std::vector<std::uint8_t>(static_cast<std::size_t>(nrows) * ncols, 0)};
  }
  std::uint8_t at(int r, int c) const { return values[static_cast<std::size_t>(r) * ncols + c]; }
  std::size_t size() const { return values.size(); }
  std::size_t burned_count() const;
};

// Mean squared error; for binary grids this is the fraction of differing cells.
double mse(const ScarGrid& x, const ScarGrid& y);

// Frobenius norm of the difference, sqrt(#differing cells) for binary grids.
double frobenius(const ScarGrid& x, const ScarGrid& y);

struct SsimOptions {
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;  // L; binary grids span [0,1]
  // Reproduces a published variant whose denominator repeats the mean term
  // instead of using variances. Off by default; kept for comparisons.
  bool mean_only_denominator = false;
  // Accepted for config compatibility; the displayed formula never uses it.
  double c3 = 0.0;
};

// Global structural similarity over the whole grid (single window):
// (2 mx my + C1)(2 cov + C2) / ((mx^2 + my^2 + C1)(vx + vy + C2)),
// population moments, C1 = (k1 L)^2, C2 = (k2 L)^2.
double ssim(const ScarGrid& x, const ScarGrid& y, const SsimOptions& opts = {});

struct HourMetrics {
  int hour = 0;
  double mse = 0.0;
  double ssim = 0.0;
};

struct ComparisonReport {
  std::vector<HourMetrics> per_period;
  double final_mse = 0.0;
  double final_ssim = 0.0;
  double delta_norm = 0.0;  // Frobenius distance of the final pair
};

// Hour-by-hour comparison of two equal-length scar sequences.
ComparisonReport evolution_report(const std::vector<ScarGrid>& xs, const std::vector<ScarGrid>& ys,
                                  const SsimOptions& opts = {});

struct MetricAggregate {
  double mean = 0.0;
  double stddev = 0.0;  // population
  double max = 0.0;
  double min = 0.0;
};

struct BatchSummary {
  MetricAggregate mse;
  MetricAggregate ssim;
  MetricAggregate delta_norm;
};

// Final-scar aggregates across a batch of comparisons.
BatchSummary aggregate_reports(const std::vector<ComparisonReport>& reports);

// CSV renderings: `hour,one_minus_mse_pct,ssim_pct` and `metric,mean,std,max,min`.
std::string evolution_csv(const ComparisonReport& report);
std::string summary_csv(const BatchSummary& summary);

}  // namespace gridfire
