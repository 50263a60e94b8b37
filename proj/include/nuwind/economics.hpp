#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace nuwind::econ {

/// Cost and performance parameters of one plant, 2008 US$.
struct PlantCostModel {
    std::string name;
    double capacity_mw = 0.0;
    double capacity_factor = 0.0;       ///< fraction of rated output
    double capital_cost_per_kw = 0.0;   ///< $/kW
    double fixed_om_per_year = 0.0;     ///< $/year while operating
    double variable_om_per_mwh = 0.0;   ///< $/MWh
    double fuel_cost_per_mwh = 0.0;     ///< $/MWh
    double discount_rate = 0.08;        ///< fraction
    int construction_years = 1;
    int lifetime_years = 20;

    void validate() const;
    int total_years() const { return construction_years + lifetime_years; }
};

/// Year-by-year cashflow, rows t = 1..T (construction first).
struct CashflowLedger {
    Eigen::VectorXd capital;
    Eigen::VectorXd fixed_om;
    Eigen::VectorXd variable_om;
    Eigen::VectorXd fuel;
    Eigen::VectorXd total;
    Eigen::VectorXd energy_mwh;
    int construction_years = 0;

    int years() const { return static_cast<int>(total.size()); }
    double total_investment() const { return capital.sum(); }
};

/// Spread the investment evenly over construction, then book energy and the
/// energy-proportional costs over the operating years.
CashflowLedger build_ledger(const PlantCostModel& model);

/// Discounted cost over discounted energy; costs discount with exponent
/// (t - 1), energy with exponent (t - 0.5).
double lcoe(const CashflowLedger& ledger, double discount_rate);
double lcoe(const PlantCostModel& model);

/// Combined LCOE of several plants: total discounted cost over total
/// discounted energy.
double portfolio_lcoe(const std::vector<PlantCostModel>& plants);

enum class SweepParameter { variable_om, discount_rate, capacity_factor, capital_cost };

const char* to_string(SweepParameter p);

struct SweepPoint {
    double value = 0.0;
    double lcoe = 0.0;
};

/// Recompute LCOE along a grid of one parameter, everything else held at the
/// base model's values.
std::vector<SweepPoint> sensitivity_sweep(const PlantCostModel& base, SweepParameter parameter,
                                          const std::vector<double>& grid);

/// Cost deltas attributed to siting beside the nuclear plant.
struct CouplingAspect {
    std::string name;
    bool increases = false;   ///< otherwise a decrease
    bool on_capital = false;  ///< otherwise on O&M
    double min_pct = 0.0;
    double max_pct = 0.0;
};

struct CouplingAdjustments {
    std::vector<double> capital_reduction_grid; ///< fractions in [0, 1)
    std::vector<double> om_reduction_grid;      ///< fractions in [0, 1)
    std::vector<CouplingAspect> aspects;        ///< documentation of the grid's origin
};

/// Case-A plant, optionally receiving the coupled-site cost reductions.
struct CoupledPlant {
    PlantCostModel model;
    bool coupled = false;
};

struct ComparisonCell {
    double capital_reduction = 0.0;
    double om_reduction = 0.0;
    double lcoe_a = 0.0;
    double lcoe_b = 0.0;
    bool breakeven = false; ///< first capital reduction with lcoe_a <= lcoe_b
};

struct ComparisonMatrix {
    std::vector<ComparisonCell> cells; ///< om-major, then capital ascending

    /// Smallest capital reduction where case A is no costlier than case B at
    /// the given O&M reduction; negative if never reached on the grid.
    double breakeven_capital_reduction(double om_reduction) const;
};

/// Evaluate both portfolios over the (capital, O&M) reduction grid; the
/// reductions apply only to the coupled plants of case A.
ComparisonMatrix coupling_compare(const std::vector<CoupledPlant>& case_a,
                                  const std::vector<PlantCostModel>& case_b,
                                  const CouplingAdjustments& adjustments);

} // namespace nuwind::econ
