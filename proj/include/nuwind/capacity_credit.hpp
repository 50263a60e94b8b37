#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace nuwind::credit {

/// Peak-load window: a set of months (1-12) and local hours (0-23).
struct PeakWindow {
    std::set<int> months;
    std::set<int> hours;

    void validate() const;
    bool contains(int month, int hour) const {
        return months.count(month) != 0 && hours.count(hour) != 0;
    }
};

/// Egyptian grid peaks: May-August, 5-8 PM.
PeakWindow egypt_peak_window();

/// The benchmark window of the originating market: June-August, 3-7 PM.
PeakWindow pjm_native_window();

struct HourlySample {
    int month = 0; ///< 1-12
    int day = 0;   ///< 1-31
    int hour = 0;  ///< 0-23
    double output_fraction = 0.0;
};

/// One calendar year of generation: an hourly archive, or a month-by-hour
/// climatology standing in for one (the same value reused for every day of
/// the month).
struct YearData {
    int year = 0;
    std::variant<std::vector<HourlySample>, Eigen::Matrix<double, 12, 24>> data;
};

struct GenerationHistory {
    std::vector<YearData> years; ///< ascending year order
};

/// Mean output fraction over every sample inside the window.
double window_capacity_factor(const YearData& year, const PeakWindow& window);

struct RollingCredit {
    int year = 0;
    double credit = 0.0;
    bool provisional = false; ///< fewer than three years were available
};

/// Three-year rolling average of window capacity factors, one entry per
/// evaluation year; early years average whatever exists and are flagged.
std::vector<RollingCredit> pjm_rolling_credit(const GenerationHistory& history,
                                              const PeakWindow& window);

/// Firm capacity a planner may count toward conventional-plant sizing.
double replacement_capacity(double installed_mw, double credit);

/// Parse "timestamp,output_fraction" rows (ISO-8601 local timestamps) into
/// per-year hourly archives.
GenerationHistory load_hourly_history(std::istream& in);

/// Month-by-hour credit table over the window cells plus an average row,
/// averaged across all years of the history.
std::string credit_report_csv(const GenerationHistory& history, const PeakWindow& window);

} // namespace nuwind::credit
