#include "nuwind/wind.hpp"

#include "nuwind/csv.hpp"
#include "nuwind/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace nuwind::wind {

namespace {

const char* const kMonthNames[12] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                     "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

bool iequals(std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return std::tolower(static_cast<unsigned char>(x)) ==
               std::tolower(static_cast<unsigned char>(y));
    });
}

// "Jan" matches "Jan", "January", "jan"
bool month_matches(std::string_view token, int month_index) {
    std::string_view full = token.substr(0, std::min<size_t>(token.size(), 3));
    return iequals(full, kMonthNames[month_index]);
}

} // namespace

void validate(const WeibullParams& w) {
    if (!(w.shape > 0.0) || !(w.scale > 0.0))
        throw InvalidInputError("Weibull parameters must be positive (K=" +
                                std::to_string(w.shape) + ", C=" + std::to_string(w.scale) + ")");
}

void validate(const TurbinePowerCurve& curve) {
    if (!(0.0 < curve.cut_in && curve.cut_in < curve.rated_speed &&
          curve.rated_speed < curve.cut_out))
        throw InvalidInputError("power curve requires 0 < cut_in < rated < cut_out");
    if (!(curve.rated_power > 0.0))
        throw InvalidInputError("rated power must be positive");
}

void validate(const WindSpeedTable& table) {
    if (!(table.reference_height > 0.0))
        throw InvalidInputError("wind table reference height must be positive");
    if (!(table.values.array() >= 0.0).all())
        throw InvalidInputError("wind table contains negative speeds");
}

double shear_correct(double v, double h_ref, double h_hub, double alpha) {
    if (!(h_ref > 0.0) || !(h_hub > 0.0))
        throw InvalidInputError("shear correction heights must be positive");
    if (v < 0.0)
        throw InvalidInputError("wind speed must be non-negative");
    return v * std::pow(h_hub / h_ref, alpha);
}

PowerCurveCoeffs power_curve_coeffs(const TurbinePowerCurve& curve) {
    validate(curve);
    const double vi = curve.cut_in;
    const double vr = curve.rated_speed;
    if (vi == vr)
        throw InvalidInputError("singular power curve: cut_in equals rated speed");
    const double d = (vi - vr) * (vi - vr);
    const double m = std::pow((vi + vr) / (2.0 * vr), 3);
    PowerCurveCoeffs k;
    k.a = (vi * (vi + vr) - 4.0 * vi * vr * m) / d;
    k.b = (4.0 * (vi + vr) * m - (3.0 * vi + vr)) / d;
    k.c = (2.0 - 4.0 * m) / d;
    return k;
}

double power_fraction(double v, const TurbinePowerCurve& curve) {
    if (v < 0.0)
        throw InvalidInputError("wind speed must be non-negative");
    if (v < curve.cut_in || v >= curve.cut_out)
        return 0.0;
    if (v >= curve.rated_speed)
        return 1.0;
    const PowerCurveCoeffs k = power_curve_coeffs(curve);
    return std::clamp(k(v), 0.0, 1.0);
}

double farm_power(double v, const TurbinePowerCurve& curve, int n_turbines) {
    if (n_turbines < 1)
        throw InvalidInputError("farm needs at least one turbine");
    return n_turbines * curve.rated_power * power_fraction(v, curve);
}

double weibull_prob_range(double lo, double hi, const WeibullParams& w) {
    validate(w);
    if (lo < 0.0)
        throw InvalidInputError("wind speed bound must be non-negative");
    if (lo > hi)
        throw InvalidInputError("weibull_prob_range requires lo <= hi");
    auto survival = [&](double v) {
        if (std::isinf(v))
            return 0.0;
        return std::exp(-std::pow(v / w.scale, w.shape));
    };
    return survival(lo) - survival(hi);
}

WindSpeedTable ingest_wind_table(std::istream& in, double reference_height) {
    if (!(reference_height > 0.0))
        throw InvalidInputError("reference height must be positive");

    std::string line;
    if (!std::getline(in, line))
        throw ParseError("wind table: empty input");
    auto header = csv::split(line);
    for (auto& t : header)
        t = csv::trim(t);

    size_t col = 0;
    bool has_site_col = false;
    if (col < header.size() && iequals(header[col], "site")) {
        has_site_col = true;
        ++col;
    }
    if (col >= header.size() || !iequals(header[col], "hour"))
        throw ParseError("wind table header: expected \"hour\" column, got \"" +
                         (col < header.size() ? header[col] : std::string()) + "\"");
    ++col;
    for (int m = 0; m < 12; ++m, ++col) {
        if (col >= header.size() || !month_matches(header[col], m))
            throw ParseError(std::string("wind table header: expected month \"") +
                             kMonthNames[m] + "\" at column " + std::to_string(col + 1));
    }
    bool has_mean_col = false;
    if (col < header.size()) {
        if (iequals(header[col], "mean") || iequals(header[col], "year")) {
            has_mean_col = true;
            ++col;
        }
        if (col < header.size())
            throw ParseError("wind table header: unexpected trailing column \"" + header[col] + "\"");
    }

    WindSpeedTable table;
    table.reference_height = reference_height;
    table.values.setConstant(std::numeric_limits<double>::quiet_NaN());

    const size_t expected_cells =
        (has_site_col ? 1 : 0) + 1 + 12 + (has_mean_col ? 1 : 0);
    int rows_read = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty())
            continue;
        auto cells = csv::split(line);
        for (auto& c : cells)
            c = csv::trim(c);

        size_t i = 0;
        std::string site;
        if (has_site_col)
            site = cells.size() > i ? cells[i++] : std::string();

        // optional trailing summary row
        if (i < cells.size() && iequals(cells[i], "mean"))
            continue;

        if (rows_read >= 24)
            throw ParseError("wind table: more than 24 hour rows (line " +
                             std::to_string(line_no) + ")");
        if (cells.size() != expected_cells)
            throw ParseError("wind table line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_cells) + " cells, got " +
                             std::to_string(cells.size()));

        int hour = 0;
        try {
            hour = std::stoi(cells[i]);
        } catch (const std::exception&) {
            throw ParseError("wind table line " + std::to_string(line_no) +
                             ": non-numeric hour \"" + cells[i] + "\"");
        }
        if (hour != rows_read)
            throw ParseError("wind table line " + std::to_string(line_no) + ": expected hour " +
                             std::to_string(rows_read) + ", got " + std::to_string(hour));
        ++i;

        for (int m = 0; m < 12; ++m, ++i) {
            const std::string& cell = cells[i];
            double v = 0.0;
            size_t used = 0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != cell.size() || used == 0)
                throw ParseError("wind table line " + std::to_string(line_no) + ", month " +
                                 kMonthNames[m] + ": cell \"" + cell + "\" is not a number");
            if (v < 0.0)
                throw ParseError("wind table line " + std::to_string(line_no) + ", month " +
                                 kMonthNames[m] + ": negative wind speed");
            table.values(m, hour) = v;
        }
        if (!site.empty() && table.site_name.empty())
            table.site_name = site;
        ++rows_read;
    }
    if (rows_read != 24)
        throw ParseError("wind table: expected 24 hour rows, got " + std::to_string(rows_read));
    return table;
}

WindSpeedTable load_wind_table(const std::string& path, double reference_height) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open wind table file: " + path);
    WindSpeedTable t = ingest_wind_table(in, reference_height);
    if (t.site_name.empty())
        t.site_name = path;
    return t;
}

} // namespace nuwind::wind
