// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values come from the published tables or from the
// independent oracles in oracles.hpp, never from the code under test.

#include "nuwind/aggregation.hpp"
#include "nuwind/capacity_credit.hpp"
#include "nuwind/config.hpp"
#include "nuwind/economics.hpp"
#include "nuwind/markov.hpp"
#include "nuwind/presets.hpp"
#include "nuwind/voltage_quality.hpp"
#include "nuwind/wind.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace nuwind;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass)
        ++failures;
}

double rel_err(double got, double expected) { return std::abs(got - expected) / std::abs(expected); }

long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- 1 -----------------------------------------------------------------

void criterion_1_table_3_5() {
    const auto start = std::chrono::steady_clock::now();

    // Seven computed quantities per scenario. Four-significant-figure cells
    // are asserted as printed; two-significant-figure cells are asserted
    // against their recomputed per-unit values (the print carries less
    // resolution than the 1% gate).
    const double expected[4][7] = {
        // dss        dss_farm  plt      plt_farm  dso         sw_cut_in  sw_rated
        {1.14e-4, 0.03788, 3.16e-3, 0.058, 0.00063735, 1.764, 1.171},
        {5.46e-4, 0.18176, 6.58e-3, 0.120, 0.0008599, 2.630, 1.746},
        {6.70e-4, 0.06743, 4.00e-3, 0.040, 0.0006, 0.706, 0.346},
        {2.14e-3, 0.21360, 1.00e-2, 0.100, 0.00233333, 1.176, 0.576},
    };

    const auto scenarios = presets::pq_scenarios();
    int cells_ok = 0;
    double worst = 0.0;
    for (size_t i = 0; i < scenarios.size(); ++i) {
        const auto& s = scenarios[i];
        const pq::PQAssessment a =
            pq::assess_scenario(s.turbine, s.grid, s.annual_mean_speed, s.n_turbines);
        const double got[7] = {a.steady_state.turbine,     a.steady_state.farm,
                               a.continuous_flicker.turbine, a.continuous_flicker.farm,
                               a.d_so,                      a.switching[0].flicker.farm,
                               a.switching[1].flicker.farm};
        for (int c = 0; c < 7; ++c) {
            const double err = rel_err(got[c], expected[i][c]);
            worst = std::max(worst, err);
            if (err <= 0.01)
                ++cells_ok;
        }
    }
    const long elapsed = ms_since(start);
    std::ostringstream detail;
    detail << cells_ok << "/28 cells within 1% (worst " << worst * 100.0 << "%), " << elapsed
           << " ms";
    report(1, "voltage-quality golden table", cells_ok == 28 && elapsed < 1000, detail.str());
}

// --- 2 -----------------------------------------------------------------

void criterion_2_ctmc_oracle() {
    const double lambda = presets::diesel_rates().failure_rate;
    const double mu = presets::diesel_rates().repair_rate;

    markov::MarkovModel unit;
    unit.name = "unit";
    unit.state_labels = {"up", "down"};
    unit.generator.resize(2, 2);
    unit.generator << -lambda, mu, lambda, -mu;
    unit.success_states = {0};
    unit.initial_distribution = Eigen::Vector2d(1.0, 0.0);

    const Eigen::VectorXd times = Eigen::VectorXd::LinSpaced(1001, 0.0, 1000.0);
    const markov::Trajectory traj = markov::integrate(unit, times);
    const Eigen::VectorXd avail = markov::availability_curve(traj, unit.success_states);

    double worst = 0.0;
    for (Eigen::Index i = 0; i < times.size(); ++i)
        worst = std::max(worst, std::abs(avail[i] -
                                         oracles::two_state_availability(lambda, mu, times[i])));

    const markov::Trajectory long_run = markov::integrate(unit, 20000.0);
    const Eigen::VectorXd pi = markov::steady_state(unit);
    const double steady_err =
        (long_run.states.col(long_run.states.cols() - 1) - pi).cwiseAbs().maxCoeff();

    std::ostringstream detail;
    detail << "closed-form max error " << worst << ", steady-state gap " << steady_err;
    report(2, "two-state integration oracle", worst < 1e-6 && steady_err < 1e-6, detail.str());
}

// --- 3 -----------------------------------------------------------------

void criterion_3_conservation() {
    double worst_column = 0.0;
    double worst_mass = 0.0;
    const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(26, 0.0, 10000.0);

    for (int draw = 0; draw < 100; ++draw) {
        const markov::DieselRates rates{oracles::uniform(1e-4, 0.1),
                                        oracles::uniform(1e-3, 0.1),
                                        oracles::uniform(0.0, 0.01)};
        const markov::MarkovModel dg = markov::build_dg_model(rates);

        markov::WindTransitionProbs p;
        p.below_cut_in = oracles::uniform(0.0, 0.3);
        p.above_cut_in = 1.0 - p.below_cut_in;
        p.below_rated = oracles::uniform(p.below_cut_in, 1.0);
        p.above_rated = 1.0 - p.below_rated;
        p.below_cut_out = oracles::uniform(p.below_rated, 1.0);
        p.above_cut_out = 1.0 - p.below_cut_out;
        const markov::MarkovModel wt = markov::build_wt_model(
            oracles::uniform(1e-4, 0.05), oracles::uniform(1e-3, 0.05), p);

        for (const markov::MarkovModel* m : {&dg, &wt}) {
            worst_column =
                std::max(worst_column, m->generator.colwise().sum().cwiseAbs().maxCoeff());
            const markov::Trajectory traj = markov::integrate(*m, grid);
            const Eigen::VectorXd mass = traj.states.colwise().sum().transpose();
            worst_mass = std::max(worst_mass, (mass.array() - 1.0).abs().maxCoeff());
        }
    }
    std::ostringstream detail;
    detail << "100 draws: worst column residual " << worst_column << ", worst mass drift "
           << worst_mass << " over 10000 h";
    report(3, "generator conservation", worst_column < 1e-12 && worst_mass < 1e-8,
           detail.str());
}

// --- 4 -----------------------------------------------------------------

void criterion_4_wind_diesel_dominance() {
    const Eigen::VectorXd times = Eigen::VectorXd::LinSpaced(401, 0.0, 100.0);
    const presets::MinOutputCase moc = presets::dabaa_min_output_case();
    const markov::ReliabilityComparison cmp = markov::min_output_scenario(
        moc.wf_capacity_mw, moc.min_mw, presets::dabaa_reliability_curve(),
        presets::dabaa_weibull(), presets::dabaa_wind_rates(), presets::diesel_rates(), times);

    bool avail_dominates = true, rel_dominates = true, monotone = true;
    for (Eigen::Index i = 0; i < times.size(); ++i) {
        if (cmp.wind_diesel.availability[i] < cmp.dg.availability[i] - 1e-12)
            avail_dominates = false;
        if (cmp.wind_diesel.reliability[i] < cmp.dg.reliability[i] - 1e-12)
            rel_dominates = false;
    }
    for (const Eigen::VectorXd* rel :
         {&cmp.dg.reliability, &cmp.wind.reliability, &cmp.wind_diesel.reliability})
        for (Eigen::Index i = 1; i < rel->size(); ++i)
            if ((*rel)[i] > (*rel)[i - 1] + 1e-9)
                monotone = false;

    std::ostringstream detail;
    detail << "threshold " << cmp.wind_threshold_speed << " m/s; dominance "
           << (avail_dominates && rel_dominates ? "holds" : "violated") << ", reliability "
           << (monotone ? "non-increasing" : "not monotone");
    report(4, "wind-diesel dominance (20 MW minimum)",
           avail_dominates && rel_dominates && monotone, detail.str());
}

// --- 5 -----------------------------------------------------------------

void criterion_5_variation_ranges() {
    const auto start = std::chrono::steady_clock::now();
    const double expected_a[3][2] = {{16, -18}, {12, -16}, {11, -15}};
    const double expected_b[3][2] = {{28, -31}, {24, -37}, {22, -34}};

    bool within = true, nested = true;
    double worst = 0.0;
    for (int scenario = 1; scenario <= 3; ++scenario) {
        const agg::VariationRange ra =
            agg::variation_range(agg::aggregate_portfolio(presets::case_a(scenario)));
        const agg::VariationRange rb =
            agg::variation_range(agg::aggregate_portfolio(presets::case_b(scenario)));
        const double errs[4] = {std::abs(ra.max_pp - expected_a[scenario - 1][0]),
                                std::abs(ra.min_pp - expected_a[scenario - 1][1]),
                                std::abs(rb.max_pp - expected_b[scenario - 1][0]),
                                std::abs(rb.min_pp - expected_b[scenario - 1][1])};
        for (double e : errs) {
            worst = std::max(worst, e);
            if (e > 2.0)
                within = false;
        }
        if (!(ra.max_pp < rb.max_pp && ra.min_pp > rb.min_pp))
            nested = false;
    }
    const long elapsed = ms_since(start);
    std::ostringstream detail;
    detail << "six ranges within ±2 pp (worst " << worst << " pp), dispersed case "
           << (nested ? "strictly narrower" : "NOT narrower") << ", " << elapsed << " ms";
    report(5, "variation-range reproduction", within && nested && elapsed < 1000,
           detail.str());
}

// --- 6 -----------------------------------------------------------------

void criterion_6_power_curve_identities() {
    const std::vector<wind::TurbinePowerCurve> curves = {
        presets::smoothing_scenario_curve(1), presets::smoothing_scenario_curve(2),
        presets::smoothing_scenario_curve(3), presets::dabaa_reliability_curve()};

    bool identities = true;
    double worst = 0.0;
    for (const auto& c : curves) {
        const wind::PowerCurveCoeffs k = wind::power_curve_coeffs(c);
        worst = std::max({worst, std::abs(k(c.cut_in)), std::abs(k(c.rated_speed) - 1.0)});
        if (std::abs(k(c.cut_in)) >= 1e-9 || std::abs(k(c.rated_speed) - 1.0) >= 1e-9)
            identities = false;
    }

    const wind::TurbinePowerCurve c = presets::dabaa_reliability_curve();
    const double got = markov::threshold_wind_speed(c, 0.2);
    auto fraction = [&](double v) { return wind::power_fraction(v, c); };
    const double oracle = oracles::bisect_threshold(fraction, c.cut_in, c.rated_speed, 0.2);
    const double gap = std::abs(got - oracle);

    std::ostringstream detail;
    detail << "worst identity residual " << worst << "; threshold " << got << " m/s vs oracle "
           << oracle << " (gap " << gap << ")";
    report(6, "power-curve identities and threshold root", identities && gap < 1e-6,
           detail.str());
}

// --- 7 -----------------------------------------------------------------

void criterion_7_lcoe() {
    bool ok = true;
    std::ostringstream detail;

    // zero-discount equality
    econ::PlantCostModel m = presets::median_cost_model();
    const econ::CashflowLedger ledger = econ::build_ledger(m);
    const double zero_gap = std::abs(econ::lcoe(ledger, 0.0) * ledger.energy_mwh.sum() -
                                     ledger.total.sum()) /
                            ledger.total.sum();
    if (zero_gap >= 1e-9)
        ok = false;

    // oracle equivalence at the median case
    const oracles::PlainPlant plain{m.capacity_mw, m.capacity_factor, m.capital_cost_per_kw,
                                    0.0,           m.variable_om_per_mwh, 0.0,
                                    1,             20};
    const double oracle_gap = rel_err(econ::lcoe(m), oracles::plain_lcoe(plain, 0.08));
    if (oracle_gap >= 1e-9)
        ok = false;

    // monotone sweeps
    auto monotone = [&](econ::SweepParameter p, std::vector<double> grid, bool increasing) {
        const auto pts = econ::sensitivity_sweep(m, p, grid);
        for (size_t i = 1; i < pts.size(); ++i)
            if (increasing ? pts[i].lcoe <= pts[i - 1].lcoe : pts[i].lcoe >= pts[i - 1].lcoe)
                return false;
        return true;
    };
    const bool sweeps_ok =
        monotone(econ::SweepParameter::capital_cost, {1845, 2100, 2348.64, 3000, 3716.22}, true) &&
        monotone(econ::SweepParameter::variable_om, {8.63, 15, 21.92, 30, 42.78}, true) &&
        monotone(econ::SweepParameter::discount_rate, {0.0, 0.04, 0.08, 0.12}, true) &&
        monotone(econ::SweepParameter::capacity_factor, {0.205, 0.257, 0.30, 0.41}, false);
    if (!sweeps_ok)
        ok = false;

    // coupling comparison: concentrated case cheaper at zero reductions,
    // breakeven near 55% capital reduction for the first scenario
    const presets::CouplingComparison cmp = presets::coupling_comparison(1);
    const econ::ComparisonMatrix matrix =
        econ::coupling_compare(cmp.case_a, cmp.case_b, presets::coupling_adjustments());
    const econ::ComparisonCell& zero_cell = matrix.cells.front();
    const bool ordering_ok = zero_cell.lcoe_a > zero_cell.lcoe_b;
    const double breakeven = matrix.breakeven_capital_reduction(0.0);
    const bool breakeven_ok = std::abs(breakeven - 0.55) <= 0.05;
    if (!ordering_ok || !breakeven_ok)
        ok = false;

    detail << "zero-discount gap " << zero_gap << ", oracle gap " << oracle_gap << ", sweeps "
           << (sweeps_ok ? "monotone" : "NOT monotone") << ", breakeven " << breakeven * 100.0
           << "% (zero-reduction ordering " << (ordering_ok ? "B cheaper" : "WRONG") << ")";
    report(7, "levelized-cost properties", ok, detail.str());
}

// --- 8 -----------------------------------------------------------------

void criterion_8_capacity_credit() {
    const credit::PeakWindow window = credit::egypt_peak_window();
    constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

    // synthetic five-year hourly history
    credit::GenerationHistory history;
    std::vector<double> cf;
    for (int year = 1; year <= 5; ++year) {
        std::vector<credit::HourlySample> samples;
        double sum = 0.0;
        long count = 0;
        for (int month = 1; month <= 12; ++month)
            for (int day = 1; day <= kDays[month - 1]; ++day)
                for (int hour = 0; hour < 24; ++hour) {
                    const double value = std::fmod(
                        0.017 * month + 0.003 * day + 0.029 * hour + 0.13 * year, 1.0);
                    samples.push_back({month, day, hour, value});
                    if (window.contains(month, hour)) {
                        sum += value;
                        ++count;
                    }
                }
        cf.push_back(sum / count);
        history.years.push_back({2000 + year, std::move(samples)});
    }

    const auto rolling = credit::pjm_rolling_credit(history, window);
    double worst = 0.0;
    for (size_t i = 0; i < rolling.size(); ++i) {
        const size_t first = i >= 2 ? i - 2 : 0;
        double sum = 0.0;
        for (size_t j = first; j <= i; ++j)
            sum += cf[j];
        worst = std::max(worst, std::abs(rolling[i].credit - sum / (i - first + 1)));
    }

    // scaling linearity on year 3
    const double base = credit::window_capacity_factor(history.years[2], window);
    bool linear = true;
    for (double s : {0.25, 0.5, 0.75}) {
        credit::YearData scaled = history.years[2];
        for (auto& sample : std::get<std::vector<credit::HourlySample>>(scaled.data))
            sample.output_fraction *= s;
        if (std::abs(credit::window_capacity_factor(scaled, window) - s * base) > 1e-12)
            linear = false;
    }

    // constant-history fixed point
    Eigen::Matrix<double, 12, 24> clim;
    clim.setConstant(0.42);
    credit::GenerationHistory constant;
    for (int y = 0; y < 4; ++y)
        constant.years.push_back({2000 + y, clim});
    const auto const_rolling = credit::pjm_rolling_credit(constant, window);
    const bool fixed_point = std::abs(const_rolling.back().credit - 0.42) < 1e-12 &&
                             !const_rolling.back().provisional;

    std::ostringstream detail;
    detail << "enumeration gap " << worst << ", scaling "
           << (linear ? "linear" : "NOT linear") << ", constant history "
           << (fixed_point ? "fixed" : "NOT fixed")
           << " (published reference table is display-only)";
    report(8, "capacity-credit oracle properties", worst < 1e-12 && linear && fixed_point,
           detail.str());
}

// --- 9 -----------------------------------------------------------------

void criterion_9_determinism() {
    namespace fs = std::filesystem;
    bool identical = true;
    std::ostringstream detail;
    int files_checked = 0;

    for (const std::string& preset : cli::preset_names()) {
        const fs::path dir1 = fs::temp_directory_path() / ("nuwind-accept-" + preset + "-1");
        const fs::path dir2 = fs::temp_directory_path() / ("nuwind-accept-" + preset + "-2");
        fs::remove_all(dir1);
        fs::remove_all(dir2);

        cli::RunConfig cfg = cli::preset_config(preset);
        cfg.output_dir = dir1.string();
        const cli::RunReport first = cli::run(cfg);
        cfg.output_dir = dir2.string();
        const cli::RunReport second = cli::run(cfg);

        if (!first.all_ok() || !second.all_ok()) {
            identical = false;
            detail << preset << ": run failed; ";
            continue;
        }
        const auto files1 = first.all_outputs();
        const auto files2 = second.all_outputs();
        if (files1.size() != files2.size())
            identical = false;
        for (size_t i = 0; i < files1.size() && i < files2.size(); ++i) {
            ++files_checked;
            if (slurp(files1[i]) != slurp(files2[i])) {
                identical = false;
                detail << fs::path(files1[i]).filename().string() << " differs; ";
            }
        }
        fs::remove_all(dir1);
        fs::remove_all(dir2);
    }
    detail << files_checked << " files byte-compared across 3 presets";
    report(9, "end-to-end determinism", identical, detail.str());
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1_table_3_5();
    criterion_2_ctmc_oracle();
    criterion_3_conservation();
    criterion_4_wind_diesel_dominance();
    criterion_5_variation_ranges();
    criterion_6_power_curve_identities();
    criterion_7_lcoe();
    criterion_8_capacity_credit();
    criterion_9_determinism();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
