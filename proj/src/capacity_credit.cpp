#include "nuwind/capacity_credit.hpp"

#include "nuwind/csv.hpp"
#include "nuwind/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>

namespace nuwind::credit {

namespace {

constexpr int kDaysInMonth[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

const char* const kMonthNames[12] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                     "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

} // namespace

void PeakWindow::validate() const {
    if (months.empty() || hours.empty())
        throw InvalidInputError("peak window needs at least one month and one hour");
    for (int m : months)
        if (m < 1 || m > 12)
            throw InvalidInputError("peak window month out of range: " + std::to_string(m));
    for (int h : hours)
        if (h < 0 || h > 23)
            throw InvalidInputError("peak window hour out of range: " + std::to_string(h));
}

PeakWindow egypt_peak_window() { return {{5, 6, 7, 8}, {17, 18, 19, 20}}; }

PeakWindow pjm_native_window() { return {{6, 7, 8}, {15, 16, 17, 18, 19}}; }

double window_capacity_factor(const YearData& year, const PeakWindow& window) {
    window.validate();
    double sum = 0.0;
    long count = 0;
    if (const auto* hourly = std::get_if<std::vector<HourlySample>>(&year.data)) {
        for (const auto& s : *hourly) {
            if (window.contains(s.month, s.hour)) {
                sum += s.output_fraction;
                ++count;
            }
        }
    } else {
        // Climatology stands in for hourly data: each cell repeats for every
        // day of its month.
        const auto& table = std::get<Eigen::Matrix<double, 12, 24>>(year.data);
        for (int m : window.months) {
            for (int h : window.hours) {
                sum += kDaysInMonth[m - 1] * table(m - 1, h);
                count += kDaysInMonth[m - 1];
            }
        }
    }
    if (count == 0)
        throw InvalidInputError("no samples fall inside the peak window for year " +
                                std::to_string(year.year));
    return sum / static_cast<double>(count);
}

std::vector<RollingCredit> pjm_rolling_credit(const GenerationHistory& history,
                                              const PeakWindow& window) {
    if (history.years.empty())
        throw InvalidInputError("generation history is empty");
    std::vector<double> cf;
    cf.reserve(history.years.size());
    for (const auto& y : history.years)
        cf.push_back(window_capacity_factor(y, window));

    std::vector<RollingCredit> out;
    for (size_t i = 0; i < cf.size(); ++i) {
        const size_t first = i >= 2 ? i - 2 : 0;
        double sum = 0.0;
        for (size_t j = first; j <= i; ++j)
            sum += cf[j];
        const size_t n = i - first + 1;
        out.push_back({history.years[i].year, sum / static_cast<double>(n), n < 3});
    }
    return out;
}

double replacement_capacity(double installed_mw, double credit) {
    if (credit < 0.0 || credit > 1.0)
        throw InvalidInputError("capacity credit must lie in [0, 1]");
    if (installed_mw < 0.0)
        throw InvalidInputError("installed capacity must be non-negative");
    return installed_mw * credit;
}

GenerationHistory load_hourly_history(std::istream& in) {
    std::map<int, std::vector<HourlySample>> per_year;
    std::string line;
    int line_no = 0;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = csv::trim(line);
        if (trimmed.empty())
            continue;
        auto cells = csv::split(trimmed);
        if (!header_checked) {
            header_checked = true;
            if (!cells.empty() && csv::trim(cells[0]) == "timestamp")
                continue; // header row
        }
        if (cells.size() != 2)
            throw ParseError("hourly history line " + std::to_string(line_no) +
                             ": expected \"timestamp,output_fraction\"");
        const std::string ts = csv::trim(cells[0]);
        int year = 0, month = 0, day = 0, hour = 0;
        char sep = 0;
        if (std::sscanf(ts.c_str(), "%d-%d-%d%c%d", &year, &month, &day, &sep, &hour) != 5 ||
            (sep != 'T' && sep != ' ') || month < 1 || month > 12 || day < 1 || day > 31 ||
            hour < 0 || hour > 23)
            throw ParseError("hourly history line " + std::to_string(line_no) +
                             ": bad timestamp \"" + ts + "\"");
        double frac = 0.0;
        size_t used = 0;
        const std::string value = csv::trim(cells[1]);
        try {
            frac = std::stod(value, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != value.size() || used == 0 || frac < 0.0 || frac > 1.0)
            throw ParseError("hourly history line " + std::to_string(line_no) +
                             ": output fraction \"" + value + "\" not in [0, 1]");
        per_year[year].push_back({month, day, hour, frac});
    }
    if (per_year.empty())
        throw ParseError("hourly history contains no samples");
    GenerationHistory h;
    for (auto& [year, samples] : per_year)
        h.years.push_back({year, std::move(samples)});
    return h;
}

std::string credit_report_csv(const GenerationHistory& history, const PeakWindow& window) {
    window.validate();
    if (history.years.empty())
        throw InvalidInputError("generation history is empty");

    csv::Writer w;
    w.cell("month");
    w.cell("hour");
    w.cell("capacity_credit");
    w.end_row();

    // Per-cell credit: each (month, hour) mean output averaged over years.
    double cell_total = 0.0;
    int cell_count = 0;
    for (int m : window.months) {
        for (int h : window.hours) {
            double year_sum = 0.0;
            int year_count = 0;
            for (const auto& y : history.years) {
                double sum = 0.0;
                long count = 0;
                if (const auto* hourly = std::get_if<std::vector<HourlySample>>(&y.data)) {
                    for (const auto& s : *hourly) {
                        if (s.month == m && s.hour == h) {
                            sum += s.output_fraction;
                            ++count;
                        }
                    }
                } else {
                    sum = std::get<Eigen::Matrix<double, 12, 24>>(y.data)(m - 1, h);
                    count = 1;
                }
                if (count > 0) {
                    year_sum += sum / static_cast<double>(count);
                    ++year_count;
                }
            }
            if (year_count == 0)
                continue;
            const double credit = year_sum / year_count;
            w.cell(std::string(kMonthNames[m - 1]));
            w.cell(static_cast<long long>(h));
            w.cell(credit);
            w.end_row();
            cell_total += credit;
            ++cell_count;
        }
    }
    if (cell_count == 0)
        throw InvalidInputError("no samples fall inside the peak window");
    w.cell("average");
    w.cell("");
    w.cell(cell_total / cell_count);
    w.end_row();
    return w.str();
}

} // namespace nuwind::credit
