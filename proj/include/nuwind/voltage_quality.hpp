#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace nuwind::pq {

enum class GridStrength { weak, intermediate, strong };

const char* to_string(GridStrength s);

/// Point of common coupling.
struct GridPoint {
    double nominal_voltage_kv = 0.0;
    double short_circuit_power_mva = 0.0; ///< S_sc
    double impedance_angle_deg = 0.0;     ///< psi_k, 0-90

    void validate() const;
};

/// 1-D lookup over a strictly increasing grid of impedance angles.
struct AngleTable {
    Eigen::VectorXd angles_deg;
    Eigen::VectorXd values;
};

/// Flicker coefficient c(psi_k, v_a): rows follow the annual-mean-speed
/// grid, columns the angle grid.
struct FlickerTable {
    Eigen::VectorXd angles_deg;
    Eigen::VectorXd mean_speeds;
    Eigen::MatrixXd values;
};

enum class SwitchingKind { cut_in_at_cut_in, cut_in_at_rated };

const char* to_string(SwitchingKind k);

/// One switching-operation case from the turbine datasheet.
struct SwitchingCase {
    SwitchingKind kind = SwitchingKind::cut_in_at_cut_in;
    int n10 = 0;  ///< max switchings per 10 min
    int n120 = 0; ///< max switchings per 120 min
    AngleTable flicker_step;   ///< k_f(psi_k)
    AngleTable voltage_change; ///< k_u(psi_k)
};

/// Power-quality datasheet of one turbine type.
struct TurbinePQData {
    std::string type_name;
    double rated_apparent_power_mva = 0.0; ///< S_n
    double peak_active_power_mw = 0.0;     ///< P_60
    double peak_reactive_power_mvar = 0.0; ///< Q_60
    FlickerTable flicker;
    std::vector<SwitchingCase> switching;

    void validate() const;
    const SwitchingCase& switching_case(SwitchingKind k) const;
};

struct InterpResult {
    double value = 0.0;
    bool clamped = false; ///< query fell outside the table grid
};

struct ScrResult {
    double ratio = 0.0;
    GridStrength classification = GridStrength::intermediate;
};

struct ApparentPower {
    double s60_mva = 0.0;
    double phase_deg = 0.0;
};

/// Single-turbine value and whole-farm aggregate of one quantity.
struct FarmQuantity {
    double turbine = 0.0;
    double farm = 0.0;
};

struct SwitchingAssessment {
    SwitchingKind kind = SwitchingKind::cut_in_at_cut_in;
    int n120 = 0;
    double k_f = 0.0;
    FarmQuantity flicker;
};

/// One column of the voltage-quality results table.
struct PQAssessment {
    std::string scenario;
    double annual_mean_speed = 0.0;
    double s60_mva = 0.0;
    double phase_deg = 0.0;
    double s_n_mva = 0.0;
    double s_sc_mva = 0.0;
    double impedance_angle_deg = 0.0;
    int n_turbines = 0;
    double flicker_coefficient = 0.0;
    FarmQuantity steady_state; ///< d_ss, d_ss_farm
    FarmQuantity continuous_flicker;
    double k_u_rated = 0.0;
    double d_so = 0.0; ///< switching voltage change, cut-in at rated speed
    std::vector<SwitchingAssessment> switching;
    double d_ss_limit = 0.0;
    bool compliant = false; ///< steady_state.farm <= d_ss_limit
    std::vector<std::string> warnings;
};

/// sqrt(3) * U * I_sc.
double short_circuit_power(double line_voltage_kv, double sc_current_ka);

/// S_sc / P_E and the strong/weak classification (>20 strong, <10 weak).
ScrResult short_circuit_ratio(double s_sc_mva, double equipment_capacity_mw);

/// arctan(X/R) in degrees, [0, 90] for non-negative inputs.
double impedance_angle(double r_ohm, double x_ohm);

/// S_60 and the voltage/current phase angle from the 1-min power peaks.
ApparentPower apparent_power_and_phase(double p60_mw, double q60_mvar);

/// Steady-state relative voltage change, single turbine and farm.
/// Valid only while cos(psi_k + phi) > 0.1.
FarmQuantity steady_state_voltage_change(double s60_mva, double phase_deg,
                                         const GridPoint& grid, int n_turbines);

/// Continuous-operation flicker; the farm aggregates with sqrt(N).
FarmQuantity continuous_flicker(double c, double s_n_mva, const GridPoint& grid,
                                int n_turbines);

/// Voltage change of one switching operation (farm controls forbid
/// simultaneous switching, so only one turbine counts).
double switching_voltage_change(double k_u, double s_n_mva, const GridPoint& grid);

/// Switching-operation flicker; the farm aggregates linearly with N.
FarmQuantity switching_flicker(int n120, double k_f, double s_n_mva,
                               const GridPoint& grid, int n_turbines);

/// Linear interpolation over the angle grid; clamps outside the grid.
InterpResult interpolate(const AngleTable& table, double psi_deg);

/// Bilinear interpolation over (angle, annual mean speed).
InterpResult interpolate(const FlickerTable& table, double psi_deg, double v_a);

/// Evaluate every voltage-quality quantity for one scenario.
PQAssessment assess_scenario(const TurbinePQData& turbine, const GridPoint& grid,
                             double v_a, int n_turbines, double d_ss_limit = 0.02);

} // namespace nuwind::pq
