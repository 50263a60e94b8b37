#pragma once

#include "nuwind/aggregation.hpp"
#include "nuwind/economics.hpp"
#include "nuwind/markov.hpp"
#include "nuwind/voltage_quality.hpp"
#include "nuwind/wind.hpp"

#include <string>
#include <vector>

namespace nuwind::presets {

// --- Voltage-quality case study -------------------------------------------

/// 0.6 MW fixed-speed turbine datasheet.
pq::TurbinePQData type_a_turbine();

/// 2 MW full-converter turbine datasheet.
pq::TurbinePQData type_d_turbine();

/// El Dabaa PCC: 500 kV, 1000 MVA short-circuit level.
pq::GridPoint dabaa_grid();

/// Zafarana PCC: 220 kV, 600 MVA short-circuit level.
pq::GridPoint zafarana_grid();

struct PQScenario {
    std::string name;
    std::string site;
    pq::TurbinePQData turbine;
    pq::GridPoint grid;
    double annual_mean_speed = 0.0;
    int n_turbines = 0;
};

/// The four site-by-turbine voltage-quality scenarios.
std::vector<PQScenario> pq_scenarios();

// --- Emergency-power reliability case study --------------------------------

/// Failure, repair, and common-cause rates of the standby diesel pair.
markov::DieselRates diesel_rates();

/// Wind-unit failure and repair rates at the El Dabaa site.
markov::WindUnitRates dabaa_wind_rates();

/// Weibull fit of the El Dabaa wind-speed distribution.
wind::WeibullParams dabaa_weibull();

/// 2 MW unit, cut-in 3, rated 12, cut-out 25 m/s.
wind::TurbinePowerCurve dabaa_reliability_curve();

/// Farm size and minimum emergency output of the reference study:
/// 100 MW farm, 20 MW minimum.
struct MinOutputCase {
    double wf_capacity_mw = 100.0;
    double min_mw = 20.0;
};
MinOutputCase dabaa_min_output_case();

// --- Geographic-smoothing case study ---------------------------------------

/// Month-by-hour mean speeds at 24.5 m for El Galala (stands in for the
/// nearby El Dabaa region, whose archive is unavailable).
wind::WindSpeedTable galala_wind_table();

/// Month-by-hour mean speeds at 24.5 m for Zafarana.
wind::WindSpeedTable zafarana_wind_table();

inline constexpr double kSmoothingHubHeight = 80.0;
inline constexpr double kSmoothingUnitMw = 2.0;

/// Existing fleet: cut-in 4, rated 10, cut-out 23 m/s.
wind::TurbinePowerCurve existing_fleet_curve();

/// New-fleet curve per smoothing scenario (1: 4/10/23, 2: 4/12/25, 3: 4/13/25).
wind::TurbinePowerCurve smoothing_scenario_curve(int scenario);

/// Dispersed portfolio: 500 MW existing Zafarana + 500 MW new El Galala.
agg::PortfolioCase case_a(int scenario);

/// Concentrated portfolio: 1000 MW at Zafarana.
agg::PortfolioCase case_b(int scenario);

// --- Capacity credit --------------------------------------------------------

/// Published El-Zayt capacity-credit table (%), reference display data only;
/// the underlying 2007-2009 hourly archive is not available.
struct CreditReferenceRow {
    int month = 0;
    int hour = 0;
    double scenario_credit_pct[3] = {0.0, 0.0, 0.0};
};
std::vector<CreditReferenceRow> el_zayt_credit_reference();

// --- Economics ---------------------------------------------------------------

/// Median onshore plant of the international cost survey:
/// 45 MW, CF 25.7%, 2348.64 $/kW, 21.92 $/MWh O&M, 8% discount rate.
econ::PlantCostModel median_cost_model();

/// Coupled-siting cost deltas and the reduction grids they motivate
/// (O&M about -10%, capital -45% to -65%).
econ::CouplingAdjustments coupling_adjustments();

struct CouplingComparison {
    int scenario = 0;
    std::vector<econ::CoupledPlant> case_a;
    std::vector<econ::PlantCostModel> case_b;
};

/// Case-A/Case-B cost portfolios with capacity factors taken from the
/// smoothing series of the given scenario.
CouplingComparison coupling_comparison(int scenario);

} // namespace nuwind::presets
