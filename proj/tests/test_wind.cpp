#include "nuwind/errors.hpp"
#include "nuwind/wind.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace nuwind;
using doctest::Approx;

namespace {

wind::TurbinePowerCurve curve(double vi, double vr, double vo, double pr = 2.0) {
    return {vi, vr, vo, pr, 80.0};
}

// header + 24 hour rows, constant speed everywhere
std::string uniform_table_csv(double speed, int hour_rows = 24) {
    std::ostringstream os;
    os << "hour,Jan,Feb,Mar,Apr,May,Jun,Jul,Aug,Sep,Oct,Nov,Dec\n";
    for (int h = 0; h < hour_rows; ++h) {
        os << h;
        for (int m = 0; m < 12; ++m)
            os << ',' << speed;
        os << '\n';
    }
    return os.str();
}

} // namespace

TEST_SUITE_BEGIN("wind");

TEST_CASE("shear correction follows the power law") {
    CHECK(wind::shear_correct(6.0, 24.5, 80.0, 0.1429) == Approx(7.106).epsilon(1e-3));
    CHECK(wind::shear_correct(5.0, 50.0, 50.0, 0.1429) == 5.0);
    CHECK(wind::shear_correct(0.0, 10.0, 80.0, 0.1429) == 0.0);

    // multiplicative in v
    for (int i = 0; i < 20; ++i) {
        const double v = oracles::uniform(0.0, 30.0);
        const double s = oracles::uniform(0.1, 5.0);
        const double base = wind::shear_correct(v, 24.5, 80.0, 0.1429);
        CHECK(wind::shear_correct(s * v, 24.5, 80.0, 0.1429) == Approx(s * base).epsilon(1e-12));
    }

    CHECK_THROWS_AS(wind::shear_correct(5.0, 0.0, 80.0, 0.14), InvalidInputError);
    CHECK_THROWS_AS(wind::shear_correct(5.0, 24.5, -1.0, 0.14), InvalidInputError);
    CHECK_THROWS_AS(wind::shear_correct(-1.0, 24.5, 80.0, 0.14), InvalidInputError);
}

TEST_CASE("quadratic ramp coefficients") {
    const wind::PowerCurveCoeffs k = wind::power_curve_coeffs(curve(4.0, 10.0, 23.0));
    CHECK(k.a == Approx(0.031111).epsilon(1e-4));
    CHECK(k.b == Approx(-0.077556).epsilon(1e-4));
    CHECK(k.c == Approx(0.017444).epsilon(1e-4));

    wind::TurbinePowerCurve degenerate = curve(4.0, 10.0, 23.0);
    degenerate.rated_speed = 4.0;
    CHECK_THROWS_AS(wind::power_curve_coeffs(degenerate), InvalidInputError);
}

TEST_CASE("ramp is pinned to 0 at cut-in and 1 at rated for every valid curve") {
    for (int i = 0; i < 200; ++i) {
        const double vi = oracles::uniform(0.5, 12.0);
        const double vr = vi + oracles::uniform(0.5, 15.0);
        const double vo = vr + oracles::uniform(0.5, 15.0);
        const wind::PowerCurveCoeffs k = wind::power_curve_coeffs(curve(vi, vr, vo));
        CHECK(std::abs(k(vi)) < 1e-9);
        CHECK(std::abs(k(vr) - 1.0) < 1e-9);
    }
}

TEST_CASE("power fraction branches") {
    const wind::TurbinePowerCurve c = curve(4.0, 10.0, 23.0);
    CHECK(wind::power_fraction(7.0, c) == Approx(0.343).epsilon(1e-3));
    CHECK(wind::power_fraction(3.0, c) == 0.0);
    CHECK(wind::power_fraction(15.0, c) == 1.0);

    // boundaries: rated at v = V_r, zero at and beyond cut-out
    CHECK(wind::power_fraction(10.0, c) == 1.0);
    CHECK(wind::power_fraction(4.0, c) == Approx(0.0).epsilon(1e-12));
    CHECK(wind::power_fraction(23.0, c) == 0.0);
    CHECK(wind::power_fraction(40.0, c) == 0.0);
    CHECK(wind::power_fraction(0.0, c) == 0.0);

    // clamped to [0, 1] on the ramp
    for (int i = 0; i < 100; ++i) {
        const double v = oracles::uniform(0.0, 30.0);
        const double f = wind::power_fraction(v, c);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("farm power is linear in turbine count") {
    const wind::TurbinePowerCurve c = curve(4.0, 10.0, 23.0);
    CHECK(wind::farm_power(12.0, c, 100) == Approx(200.0));
    CHECK(wind::farm_power(3.0, c, 50) == 0.0);
    CHECK(wind::farm_power(7.0, c, 250) == Approx(171.5).epsilon(0.5 / 171.5));
    for (int n : {1, 7, 333})
        CHECK(wind::farm_power(8.0, c, n) == Approx(n * wind::farm_power(8.0, c, 1)));
    CHECK_THROWS_AS(wind::farm_power(8.0, c, 0), InvalidInputError);
}

TEST_CASE("weibull range probability matches quadrature of the density") {
    const wind::WeibullParams w{11.05, 5.64};
    const double inf = std::numeric_limits<double>::infinity();

    CHECK(wind::weibull_prob_range(0.0, inf, w) == 1.0);
    CHECK(wind::weibull_prob_range(0.0, 3.0, w) == Approx(9.35e-4).epsilon(1e-5 / 9.35e-4));
    CHECK(wind::weibull_prob_range(12.0, inf, w) < 1e-100);

    auto pdf = [&](double v) { return oracles::weibull_pdf(v, w.shape, w.scale); };
    CHECK(wind::weibull_prob_range(0.0, 3.0, w) ==
          Approx(oracles::simpson(pdf, 1e-12, 3.0)).epsilon(1e-6));
    CHECK(wind::weibull_prob_range(4.0, 7.0, w) ==
          Approx(oracles::simpson(pdf, 4.0, 7.0)).epsilon(1e-9));

    // complement identity over assorted split points
    for (double x : {0.0, 0.5, 3.0, 5.64, 9.0, 20.0})
        CHECK(wind::weibull_prob_range(0.0, x, w) + wind::weibull_prob_range(x, inf, w) ==
              Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(wind::weibull_prob_range(5.0, 3.0, w), InvalidInputError);
    CHECK_THROWS_AS(wind::weibull_prob_range(0.0, 1.0, wind::WeibullParams{-1.0, 2.0}),
                    InvalidInputError);
}

TEST_CASE("wind table ingestion") {
    SUBCASE("uniform table round-trips") {
        std::istringstream in(uniform_table_csv(6.5));
        const wind::WindSpeedTable t = wind::ingest_wind_table(in, 24.5);
        CHECK(t.reference_height == 24.5);
        CHECK(t.at(1, 0) == 6.5);
        CHECK(t.at(12, 23) == 6.5);
    }

    SUBCASE("site column and trailing mean row/column are accepted") {
        std::ostringstream os;
        os << "site,hour,Jan,Feb,Mar,Apr,May,Jun,Jul,Aug,Sep,Oct,Nov,Dec,Mean\n";
        for (int h = 0; h < 24; ++h) {
            os << "alpha," << h;
            for (int m = 0; m < 13; ++m)
                os << ',' << 5.0 + h * 0.1;
            os << '\n';
        }
        os << "alpha,Mean,5,5,5,5,5,5,5,5,5,5,5,5,5\n";
        std::istringstream in(os.str());
        const wind::WindSpeedTable t = wind::ingest_wind_table(in, 24.5);
        CHECK(t.site_name == "alpha");
        CHECK(t.at(3, 10) == Approx(6.0));
    }

    SUBCASE("dimension and cell errors name the location") {
        std::istringstream short_table(uniform_table_csv(6.5, 23));
        CHECK_THROWS_WITH_AS(wind::ingest_wind_table(short_table, 24.5),
                             doctest::Contains("24 hour rows"), ParseError);

        std::string bad = uniform_table_csv(6.5);
        bad.replace(bad.find("0,6.5") + 2, 3, "bad"); // hour 0 / Jan cell
        std::istringstream bad_cell(bad);
        CHECK_THROWS_WITH_AS(wind::ingest_wind_table(bad_cell, 24.5),
                             doctest::Contains("Jan"), ParseError);

        std::istringstream bad_header("hr,Jan\n");
        CHECK_THROWS_AS(wind::ingest_wind_table(bad_header, 24.5), ParseError);

        std::istringstream negative(uniform_table_csv(-1.0));
        CHECK_THROWS_AS(wind::ingest_wind_table(negative, 24.5), ParseError);
    }
}

TEST_SUITE_END();
