#include "nuwind/config.hpp"

#include "nuwind/csv.hpp"
#include "nuwind/errors.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>

namespace nuwind::cli {

namespace {

namespace fs = std::filesystem;

std::string write_output(const std::string& dir, const std::string& file,
                         const std::string& content) {
    fs::create_directories(dir);
    const std::string path = (fs::path(dir) / file).string();
    csv::write_file(path, content);
    return path;
}

AnalysisStatus run_pq(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "pq";

    csv::Writer w;
    for (const char* col :
         {"scenario", "site", "turbine", "v_a_ms", "s60_mva", "sn_mva", "s_sc_mva",
          "phase_deg", "psi_k_deg", "n_wt", "dss", "dss_farm", "flicker_coefficient",
          "plt_continuous", "plt_continuous_farm", "ku_rated", "dso", "n120_cut_in",
          "kf_cut_in", "plt_switch_cut_in", "plt_switch_cut_in_farm", "n120_rated",
          "kf_rated", "plt_switch_rated", "plt_switch_rated_farm", "dss_limit",
          "compliant"})
        w.cell(std::string(col));
    w.end_row();

    // quantities are computed per-unit; optionally displayed as percent
    const double scale = cfg.pq_percent ? 100.0 : 1.0;
    for (const auto& scenario : cfg.pq_scenarios) {
        const pq::PQAssessment a =
            pq::assess_scenario(scenario.turbine, scenario.grid, scenario.annual_mean_speed,
                                scenario.n_turbines, cfg.d_ss_limit);
        for (const auto& warning : a.warnings)
            status.warnings.push_back(scenario.name + ": " + warning);
        w.cell(scenario.name);
        w.cell(scenario.site);
        w.cell(scenario.turbine.type_name);
        w.cell(a.annual_mean_speed);
        w.cell(a.s60_mva);
        w.cell(a.s_n_mva);
        w.cell(a.s_sc_mva);
        w.cell(a.phase_deg);
        w.cell(a.impedance_angle_deg);
        w.cell(static_cast<long long>(a.n_turbines));
        w.cell(scale * a.steady_state.turbine);
        w.cell(scale * a.steady_state.farm);
        w.cell(a.flicker_coefficient);
        w.cell(scale * a.continuous_flicker.turbine);
        w.cell(scale * a.continuous_flicker.farm);
        w.cell(a.k_u_rated);
        w.cell(scale * a.d_so);
        const auto find_switching = [&](pq::SwitchingKind kind) -> const pq::SwitchingAssessment* {
            for (const auto& s : a.switching)
                if (s.kind == kind)
                    return &s;
            return nullptr;
        };
        for (pq::SwitchingKind kind :
             {pq::SwitchingKind::cut_in_at_cut_in, pq::SwitchingKind::cut_in_at_rated}) {
            if (const auto* s = find_switching(kind)) {
                w.cell(static_cast<long long>(s->n120));
                w.cell(s->k_f);
                w.cell(scale * s->flicker.turbine);
                w.cell(scale * s->flicker.farm);
            } else {
                w.cell("");
                w.cell("");
                w.cell("");
                w.cell("");
            }
        }
        w.cell(scale * a.d_ss_limit);
        w.cell(std::string(a.compliant ? "1" : "0"));
        w.end_row();
    }
    status.output_files.push_back(write_output(cfg.output_dir, "pq_assessment.csv", w.str()));
    status.ok = true;
    status.message = std::to_string(cfg.pq_scenarios.size()) + " scenarios assessed";
    return status;
}

AnalysisStatus run_reliability(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "reliability";
    if (!cfg.reliability)
        throw ConfigError("reliability analysis needs a markov section");
    const RunConfig::Reliability& rel = *cfg.reliability;

    const markov::MarkovModel dg = markov::build_dg_model(rel.diesel);
    const markov::MarkovModel wt = markov::build_wt_model(
        rel.wind_unit.failure_rate, rel.wind_unit.repair_rate,
        markov::wind_transition_probs(rel.weibull, rel.curve));

    std::string models_csv = markov::dump_model_csv(dg) + "\n" + markov::dump_model_csv(wt);
    for (const auto& extra : rel.extra_models) {
        const markov::GeneratorDiagnostics diag = markov::validate_generator(extra);
        if (!diag.ok)
            throw InvalidInputError("model \"" + extra.name + "\": " + diag.message);
        models_csv += "\n" + markov::dump_model_csv(extra);
    }

    const Eigen::VectorXd times = Eigen::VectorXd::LinSpaced(rel.points, 0.0, rel.t_end);
    markov::StepControl control;

    auto curves_csv = [&](const markov::ReliabilityComparison& cmp) {
        csv::Writer w;
        for (const char* col :
             {"time_h", "dg_availability", "dg_reliability", "wt_availability",
              "wt_reliability", "wind_diesel_availability", "wind_diesel_reliability"})
            w.cell(std::string(col));
        w.end_row();
        for (Eigen::Index i = 0; i < cmp.times.size(); ++i) {
            w.cell(cmp.times[i]);
            w.cell(cmp.dg.availability[i]);
            w.cell(cmp.dg.reliability[i]);
            w.cell(cmp.wind.availability[i]);
            w.cell(cmp.wind.reliability[i]);
            w.cell(cmp.wind_diesel.availability[i]);
            w.cell(cmp.wind_diesel.reliability[i]);
        }
        return w.str();
    };

    // Unconstrained wind model, then the minimum-output configuration.
    const markov::ReliabilityComparison unconstrained = markov::min_output_scenario(
        rel.min_output_wf_mw, 0.0, rel.curve, rel.weibull, rel.wind_unit, rel.diesel, times,
        control);
    const markov::ReliabilityComparison constrained = markov::min_output_scenario(
        rel.min_output_wf_mw, rel.min_output_min_mw, rel.curve, rel.weibull, rel.wind_unit,
        rel.diesel, times, control);

    status.warnings.push_back("minimum-output wind threshold: " +
                              csv::format(constrained.wind_threshold_speed) + " m/s");

    status.output_files.push_back(write_output(cfg.output_dir, "markov_models.csv", models_csv));
    status.output_files.push_back(
        write_output(cfg.output_dir, "reliability_curves.csv", curves_csv(unconstrained)));
    status.output_files.push_back(
        write_output(cfg.output_dir, "min_output_curves.csv", curves_csv(constrained)));
    status.ok = true;
    status.message = "dg/wt/wind-diesel curves over " + csv::format(rel.t_end) + " h";
    return status;
}

AnalysisStatus run_aggregate(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "aggregate";

    csv::Writer series_w, duration_w, delta_w, ranges_w;
    for (const char* col : {"portfolio", "index", "month", "hour", "fraction"})
        series_w.cell(std::string(col));
    series_w.end_row();
    for (const char* col : {"portfolio", "rank", "fraction"})
        duration_w.cell(std::string(col));
    duration_w.end_row();
    for (const char* col : {"portfolio", "index", "delta_fraction"})
        delta_w.cell(std::string(col));
    delta_w.end_row();
    for (const char* col : {"portfolio", "max_pp", "min_pp"})
        ranges_w.cell(std::string(col));
    ranges_w.end_row();

    for (const auto& pc : cfg.portfolios) {
        const agg::GenerationSeries series = agg::aggregate_portfolio(pc);
        const Eigen::VectorXd deltas = agg::delta_series(series);
        const Eigen::VectorXd duration = agg::duration_curve(series.values);
        const agg::VariationRange range = agg::variation_range(series);

        for (int month = 1; month <= 12; ++month) {
            for (int hour = 0; hour < 24; ++hour) {
                const int index = agg::GenerationSeries::index_of(month, hour);
                series_w.cell(pc.label);
                series_w.cell(static_cast<long long>(index + 1));
                series_w.cell(static_cast<long long>(month));
                series_w.cell(static_cast<long long>(hour));
                series_w.cell(series.values[index]);
                series_w.end_row();
            }
        }
        for (Eigen::Index i = 0; i < duration.size(); ++i) {
            duration_w.cell(pc.label);
            duration_w.cell(static_cast<long long>(i + 1));
            duration_w.cell(duration[i]);
            duration_w.end_row();
        }
        for (Eigen::Index i = 0; i < deltas.size(); ++i) {
            delta_w.cell(pc.label);
            delta_w.cell(static_cast<long long>(i + 1));
            delta_w.cell(deltas[i]);
            delta_w.end_row();
        }
        ranges_w.cell(pc.label);
        ranges_w.cell(range.max_pp);
        ranges_w.cell(range.min_pp);
        ranges_w.end_row();
    }

    status.output_files.push_back(
        write_output(cfg.output_dir, "aggregation_series.csv", series_w.str()));
    status.output_files.push_back(
        write_output(cfg.output_dir, "duration_curves.csv", duration_w.str()));
    status.output_files.push_back(
        write_output(cfg.output_dir, "delta_series.csv", delta_w.str()));
    status.output_files.push_back(
        write_output(cfg.output_dir, "variation_ranges.csv", ranges_w.str()));
    status.ok = true;
    status.message = std::to_string(cfg.portfolios.size()) + " portfolios aggregated";
    return status;
}

AnalysisStatus run_credit(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "credit";
    if (!cfg.credit)
        throw ConfigError("credit analysis needs a credit section");
    const RunConfig::Credit& section = *cfg.credit;

    std::string report;
    csv::Writer rolling_w;
    for (const char* col : {"history", "year", "credit", "provisional"})
        rolling_w.cell(std::string(col));
    rolling_w.end_row();

    for (const auto& [name, history] : section.histories) {
        report += "history," + name + "\n";
        report += credit::credit_report_csv(history, section.window);
        const auto rolling = credit::pjm_rolling_credit(history, section.window);
        for (const auto& r : rolling) {
            rolling_w.cell(name);
            rolling_w.cell(static_cast<long long>(r.year));
            rolling_w.cell(r.credit);
            rolling_w.cell(std::string(r.provisional ? "1" : "0"));
            rolling_w.end_row();
            if (r.provisional)
                status.warnings.push_back(name + " year " + std::to_string(r.year) +
                                          ": provisional (fewer than three years)");
        }
    }
    status.output_files.push_back(write_output(cfg.output_dir, "credit_report.csv", report));
    status.output_files.push_back(
        write_output(cfg.output_dir, "credit_rolling.csv", rolling_w.str()));
    status.ok = true;
    status.message = std::to_string(section.histories.size()) + " histories evaluated";
    return status;
}

AnalysisStatus run_lcoe(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "lcoe";
    if (!cfg.lcoe)
        throw ConfigError("lcoe analysis needs an lcoe section");
    const RunConfig::Lcoe& section = *cfg.lcoe;

    const econ::CashflowLedger ledger = econ::build_ledger(section.model);
    const double rate = section.model.discount_rate;

    csv::Writer ledger_w;
    for (const char* col : {"year", "capital", "fixed_om", "variable_om", "fuel", "total",
                            "energy", "discounted_cost", "discounted_energy"})
        ledger_w.cell(std::string(col));
    ledger_w.end_row();
    for (int i = 0; i < ledger.years(); ++i) {
        const double year = i + 1.0;
        ledger_w.cell(static_cast<long long>(i + 1));
        ledger_w.cell(ledger.capital[i]);
        ledger_w.cell(ledger.fixed_om[i]);
        ledger_w.cell(ledger.variable_om[i]);
        ledger_w.cell(ledger.fuel[i]);
        ledger_w.cell(ledger.total[i]);
        ledger_w.cell(ledger.energy_mwh[i]);
        ledger_w.cell(ledger.total[i] / std::pow(1.0 + rate, year - 1.0));
        ledger_w.cell(ledger.energy_mwh[i] / std::pow(1.0 + rate, year - 0.5));
        ledger_w.end_row();
    }

    csv::Writer sweep_w;
    for (const char* col : {"parameter", "value", "lcoe"})
        sweep_w.cell(std::string(col));
    sweep_w.end_row();
    sweep_w.cell(std::string("base"));
    sweep_w.cell("");
    sweep_w.cell(econ::lcoe(ledger, rate));
    sweep_w.end_row();
    for (const auto& [parameter, grid] : section.sweeps) {
        for (const auto& point : econ::sensitivity_sweep(section.model, parameter, grid)) {
            sweep_w.cell(std::string(econ::to_string(parameter)));
            sweep_w.cell(point.value);
            sweep_w.cell(point.lcoe);
            sweep_w.end_row();
        }
    }

    status.output_files.push_back(write_output(cfg.output_dir, "ledger.csv", ledger_w.str()));
    status.output_files.push_back(write_output(cfg.output_dir, "lcoe_sweeps.csv", sweep_w.str()));
    status.ok = true;
    status.message = "LCOE " + csv::format(econ::lcoe(ledger, rate)) + " $/MWh (" +
                     section.model.name + ")";
    return status;
}

AnalysisStatus run_compare(const RunConfig& cfg) {
    AnalysisStatus status;
    status.analysis = "compare";
    if (!cfg.compare)
        throw ConfigError("compare analysis needs a comparisons section");
    const RunConfig::Compare& section = *cfg.compare;

    csv::Writer w;
    for (const char* col : {"scenario", "capital_reduction", "om_reduction", "lcoe_a",
                            "lcoe_b", "breakeven"})
        w.cell(std::string(col));
    w.end_row();
    for (const auto& comparison : section.comparisons) {
        const econ::ComparisonMatrix matrix =
            econ::coupling_compare(comparison.case_a, comparison.case_b, section.adjustments);
        for (const auto& cell : matrix.cells) {
            w.cell(static_cast<long long>(comparison.scenario));
            w.cell(cell.capital_reduction);
            w.cell(cell.om_reduction);
            w.cell(cell.lcoe_a);
            w.cell(cell.lcoe_b);
            w.cell(std::string(cell.breakeven ? "1" : "0"));
            w.end_row();
        }
        const double breakeven = matrix.breakeven_capital_reduction(0.0);
        if (breakeven >= 0.0)
            status.warnings.push_back("scenario " + std::to_string(comparison.scenario) +
                                      ": breakeven capital reduction " + csv::format(breakeven) +
                                      " at zero O&M reduction");
    }
    status.output_files.push_back(
        write_output(cfg.output_dir, "comparison_matrix.csv", w.str()));
    status.ok = true;
    status.message = std::to_string(section.comparisons.size()) + " comparisons evaluated";
    return status;
}

} // namespace

RunReport run(const RunConfig& cfg) {
    RunReport report;
    report.config_name = cfg.name;

    const std::vector<std::pair<std::string, std::function<AnalysisStatus(const RunConfig&)>>>
        runners = {{"pq", run_pq},           {"reliability", run_reliability},
                   {"aggregate", run_aggregate}, {"credit", run_credit},
                   {"lcoe", run_lcoe},       {"compare", run_compare}};

    for (const auto& analysis : cfg.analyses) {
        const auto runner =
            std::find_if(runners.begin(), runners.end(),
                         [&](const auto& r) { return r.first == analysis; });
        AnalysisStatus status;
        status.analysis = analysis;
        if (runner == runners.end()) {
            status.ok = false;
            status.message = "unknown analysis";
        } else {
            try {
                status = runner->second(cfg);
            } catch (const std::exception& e) {
                status.ok = false;
                status.message = e.what();
            }
        }
        report.analyses.push_back(std::move(status));
    }
    return report;
}

} // namespace nuwind::cli
