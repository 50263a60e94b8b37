#pragma once

#include "nuwind/aggregation.hpp"
#include "nuwind/capacity_credit.hpp"
#include "nuwind/economics.hpp"
#include "nuwind/markov.hpp"
#include "nuwind/presets.hpp"
#include "nuwind/voltage_quality.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nuwind::cli {

/// Fully resolved batch-run description. Built either from a JSON config
/// file (named sections, cross-references checked at load time) or from one
/// of the shipped presets.
struct RunConfig {
    std::string name;
    std::string output_dir = "out";
    std::vector<std::string> analyses;

    // pq
    std::vector<presets::PQScenario> pq_scenarios;
    double d_ss_limit = 0.02;
    bool pq_percent = false; ///< report per-unit quantities as percent

    // reliability
    struct Reliability {
        markov::DieselRates diesel;
        markov::WindUnitRates wind_unit;
        wind::WeibullParams weibull{1.0, 1.0};
        wind::TurbinePowerCurve curve{1.0, 2.0, 3.0, 1.0, 80.0};
        double t_end = 100.0;
        int points = 401;
        double min_output_wf_mw = 100.0;
        double min_output_min_mw = 20.0;
        std::vector<markov::MarkovModel> extra_models;
    };
    std::optional<Reliability> reliability;

    // aggregate
    std::vector<agg::PortfolioCase> portfolios;

    // credit
    struct Credit {
        credit::PeakWindow window;
        std::vector<std::pair<std::string, credit::GenerationHistory>> histories;
    };
    std::optional<Credit> credit;

    // lcoe
    struct Lcoe {
        econ::PlantCostModel model;
        std::vector<std::pair<econ::SweepParameter, std::vector<double>>> sweeps;
    };
    std::optional<Lcoe> lcoe;

    // compare
    struct Compare {
        std::vector<presets::CouplingComparison> comparisons;
        econ::CouplingAdjustments adjustments;
    };
    std::optional<Compare> compare;
};

/// Shipped preset configurations:
///  - "table-3.5-scenarios": the four voltage-quality scenarios
///  - "dabaa-zafarana": reliability study plus the six smoothing portfolios
///  - "case-ab": median-plant economics and the coupling comparison
RunConfig preset_config(const std::string& name);

std::vector<std::string> preset_names();

/// Parse and validate a JSON run configuration. Relative file references
/// resolve against base_dir.
RunConfig load_config(std::istream& in, const std::string& base_dir = ".");
RunConfig load_config_file(const std::string& path);

struct AnalysisStatus {
    std::string analysis;
    bool ok = false;
    std::string message;
    std::vector<std::string> output_files;
    std::vector<std::string> warnings;
};

struct RunReport {
    std::string config_name;
    std::vector<AnalysisStatus> analyses;

    bool all_ok() const;
    std::vector<std::string> all_outputs() const;
};

/// Execute every selected analysis; a failing analysis is recorded and never
/// aborts its siblings. Output files are byte-stable across repeated runs.
RunReport run(const RunConfig& config);

std::string report_text(const RunReport& report);

} // namespace nuwind::cli
