#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>

namespace nuwind::wind {

/// Default vertical shear (power-law) exponent for the built-in sites.
inline constexpr double kDefaultShearExponent = 0.1429;

/// Two-parameter Weibull wind-speed distribution.
struct WeibullParams {
    double shape; ///< K (dimensionless)
    double scale; ///< C (m/s)
};

/// Piecewise power curve: zero below cut-in, quadratic ramp to rated,
/// flat at rated power up to cut-out, zero at and beyond cut-out.
struct TurbinePowerCurve {
    double cut_in;      ///< V_i (m/s)
    double rated_speed; ///< V_r (m/s)
    double cut_out;     ///< V_o (m/s)
    double rated_power; ///< MW per turbine
    double hub_height;  ///< m above ground
};

/// Month-by-hour climatology of mean wind speeds at one site.
/// values(m, h) is the mean speed for month m (0-based, Jan = 0) at hour h.
struct WindSpeedTable {
    std::string site_name;
    double reference_height = 0.0; ///< m above ground of the measurements
    Eigen::Matrix<double, 12, 24> values;

    /// month 1-12, hour 0-23
    double at(int month, int hour) const { return values(month - 1, hour); }
};

struct SiteProfile {
    WindSpeedTable wind_table;
    double shear_exponent = kDefaultShearExponent;
    std::optional<WeibullParams> weibull;
};

/// Coefficients of the quadratic ramp, fraction = a + b*v + c*v^2.
struct PowerCurveCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(double v) const { return a + v * (b + v * c); }
};

void validate(const WeibullParams& w);
void validate(const TurbinePowerCurve& curve);
void validate(const WindSpeedTable& table);

/// Power-law correction of a wind speed from reference height to hub height.
double shear_correct(double v, double h_ref, double h_hub, double alpha);

/// Quadratic ramp coefficients; by construction the ramp is 0 at cut-in and
/// 1 at rated speed.
PowerCurveCoeffs power_curve_coeffs(const TurbinePowerCurve& curve);

/// Output as a fraction of rated power, clamped to [0, 1].
double power_fraction(double v, const TurbinePowerCurve& curve);

/// Total farm output in MW for n identical turbines at wind speed v.
double farm_power(double v, const TurbinePowerCurve& curve, int n_turbines);

/// P(lo < V < hi) under the Weibull distribution, closed form.
/// hi may be +infinity.
double weibull_prob_range(double lo, double hi, const WeibullParams& w);

/// Parse a wind-table CSV: header "site,hour,Jan,...,Dec" or
/// "hour,Jan,...,Dec" (an extra trailing "Mean"/"Year" column is ignored),
/// then 24 rows for hours 0-23, optionally followed by a "Mean" row.
WindSpeedTable ingest_wind_table(std::istream& in, double reference_height);
WindSpeedTable load_wind_table(const std::string& path, double reference_height);

} // namespace nuwind::wind
