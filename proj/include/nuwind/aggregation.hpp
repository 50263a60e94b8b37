#pragma once

#include "nuwind/wind.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace nuwind::agg {

/// Number of climatology samples per year: 12 months x 24 hours.
inline constexpr int kSamplesPerYear = 288;

/// 288 output fractions in month-major order (Jan hour 0..23, then Feb, ...).
struct GenerationSeries {
    Eigen::VectorXd values;
    double installed_capacity_mw = 0.0;

    /// sample index for (month 1-12, hour 0-23)
    static int index_of(int month, int hour) { return (month - 1) * 24 + hour; }
    double capacity_factor() const { return values.mean(); }
};

struct PortfolioComponent {
    wind::SiteProfile site;
    wind::TurbinePowerCurve curve;
    double installed_mw = 0.0;
};

struct PortfolioCase {
    std::string label;
    std::vector<PortfolioComponent> components;
};

/// Shear-correct every climatology speed to hub height, then map it through
/// the power curve.
GenerationSeries series_from_site(const wind::SiteProfile& site,
                                  const wind::TurbinePowerCurve& curve);

/// Capacity-weighted mean of the component series.
GenerationSeries aggregate_portfolio(const PortfolioCase& pc);

/// Sample-to-sample changes; the first entry wraps around to the last sample.
Eigen::VectorXd delta_series(const GenerationSeries& s);

/// Stable descending sort of the samples.
Eigen::VectorXd duration_curve(const Eigen::VectorXd& samples);

struct VariationRange {
    double max_pp = 0.0; ///< largest increase, percentage points of capacity
    double min_pp = 0.0; ///< largest decrease (negative)
};

VariationRange variation_range(const GenerationSeries& s);

} // namespace nuwind::agg
