#include "nuwind/voltage_quality.hpp"

#include "nuwind/errors.hpp"

#include <cmath>
#include <numbers>

namespace nuwind::pq {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void require_increasing(const Eigen::VectorXd& grid, const char* what) {
    if (grid.size() == 0)
        throw ConfigError(std::string(what) + " grid is empty");
    for (Eigen::Index i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ConfigError(std::string(what) + " grid is not strictly increasing");
}

// Fractional position of x on a grid, clamped to the grid range.
struct GridPos {
    Eigen::Index lo;
    double t;
    bool clamped;
};

GridPos locate(const Eigen::VectorXd& grid, double x) {
    if (x <= grid[0])
        return {0, 0.0, x < grid[0]};
    const Eigen::Index last = grid.size() - 1;
    if (x >= grid[last])
        return {std::max<Eigen::Index>(last - 1, 0), last > 0 ? 1.0 : 0.0, x > grid[last]};
    Eigen::Index lo = 0;
    while (x > grid[lo + 1])
        ++lo;
    return {lo, (x - grid[lo]) / (grid[lo + 1] - grid[lo]), false};
}

} // namespace

const char* to_string(GridStrength s) {
    switch (s) {
    case GridStrength::weak: return "weak";
    case GridStrength::strong: return "strong";
    default: return "intermediate";
    }
}

const char* to_string(SwitchingKind k) {
    return k == SwitchingKind::cut_in_at_cut_in ? "cut_in_at_cut_in" : "cut_in_at_rated";
}

void GridPoint::validate() const {
    if (!(short_circuit_power_mva > 0.0))
        throw InvalidInputError("grid point needs positive short-circuit power");
    if (impedance_angle_deg < 0.0 || impedance_angle_deg > 90.0)
        throw InvalidInputError("grid impedance angle must lie in [0, 90] degrees");
}

void TurbinePQData::validate() const {
    if (!(rated_apparent_power_mva > 0.0))
        throw InvalidInputError("turbine rated apparent power must be positive");
    require_increasing(flicker.angles_deg, "flicker coefficient angle");
    require_increasing(flicker.mean_speeds, "flicker coefficient mean-speed");
    if (flicker.values.rows() != flicker.mean_speeds.size() ||
        flicker.values.cols() != flicker.angles_deg.size())
        throw ConfigError("flicker coefficient table shape does not match its grids");
    for (const auto& sw : switching) {
        if (sw.n10 < 0 || sw.n120 < sw.n10)
            throw InvalidInputError("switching counts require N_120 >= N_10 >= 0");
        require_increasing(sw.flicker_step.angles_deg, "flicker step factor angle");
        require_increasing(sw.voltage_change.angles_deg, "voltage change factor angle");
        if (sw.flicker_step.values.size() != sw.flicker_step.angles_deg.size() ||
            sw.voltage_change.values.size() != sw.voltage_change.angles_deg.size())
            throw ConfigError("switching factor table shape does not match its grid");
    }
}

const SwitchingCase& TurbinePQData::switching_case(SwitchingKind k) const {
    for (const auto& sw : switching)
        if (sw.kind == k)
            return sw;
    throw ConfigError(std::string("turbine datasheet lacks switching case ") + to_string(k));
}

double short_circuit_power(double line_voltage_kv, double sc_current_ka) {
    if (!(line_voltage_kv > 0.0) || !(sc_current_ka > 0.0))
        throw InvalidInputError("short-circuit power needs positive voltage and current");
    return std::numbers::sqrt3 * line_voltage_kv * sc_current_ka;
}

ScrResult short_circuit_ratio(double s_sc_mva, double equipment_capacity_mw) {
    if (!(equipment_capacity_mw > 0.0))
        throw InvalidInputError("equipment capacity must be positive");
    ScrResult r;
    r.ratio = s_sc_mva / equipment_capacity_mw;
    if (r.ratio > 20.0)
        r.classification = GridStrength::strong;
    else if (r.ratio < 10.0)
        r.classification = GridStrength::weak;
    else
        r.classification = GridStrength::intermediate;
    return r;
}

double impedance_angle(double r_ohm, double x_ohm) {
    if (r_ohm == 0.0 && x_ohm == 0.0)
        throw InvalidInputError("impedance angle undefined for zero impedance");
    return std::atan2(x_ohm, r_ohm) / kDegToRad;
}

ApparentPower apparent_power_and_phase(double p60_mw, double q60_mvar) {
    if (!(p60_mw > 0.0))
        throw InvalidInputError("peak active power must be positive");
    return {std::hypot(p60_mw, q60_mvar), std::atan2(q60_mvar, p60_mw) / kDegToRad};
}

FarmQuantity steady_state_voltage_change(double s60_mva, double phase_deg,
                                         const GridPoint& grid, int n_turbines) {
    grid.validate();
    if (n_turbines < 1)
        throw InvalidInputError("farm needs at least one turbine");
    const double c = std::cos((grid.impedance_angle_deg + phase_deg) * kDegToRad);
    if (!(c > 0.1))
        throw ValidityDomainError("steady-state voltage change valid only for "
                                  "cos(psi_k + phi) > 0.1, got " + std::to_string(c));
    const double d_ss = s60_mva / grid.short_circuit_power_mva * c;
    return {d_ss, n_turbines * d_ss};
}

FarmQuantity continuous_flicker(double c, double s_n_mva, const GridPoint& grid,
                                int n_turbines) {
    grid.validate();
    if (c < 0.0)
        throw InvalidInputError("flicker coefficient must be non-negative");
    if (n_turbines < 1)
        throw InvalidInputError("farm needs at least one turbine");
    const double p_lt = c * s_n_mva / grid.short_circuit_power_mva;
    return {p_lt, std::sqrt(static_cast<double>(n_turbines)) * p_lt};
}

double switching_voltage_change(double k_u, double s_n_mva, const GridPoint& grid) {
    grid.validate();
    if (k_u < 0.0)
        throw InvalidInputError("voltage change factor must be non-negative");
    return k_u * s_n_mva / grid.short_circuit_power_mva;
}

FarmQuantity switching_flicker(int n120, double k_f, double s_n_mva,
                               const GridPoint& grid, int n_turbines) {
    grid.validate();
    if (n120 < 0)
        throw InvalidInputError("switching count must be non-negative");
    if (k_f < 0.0)
        throw InvalidInputError("flicker step factor must be non-negative");
    if (n_turbines < 1)
        throw InvalidInputError("farm needs at least one turbine");
    const double p_lt =
        8.0 * std::pow(static_cast<double>(n120), 0.31) * k_f * s_n_mva /
        grid.short_circuit_power_mva;
    return {p_lt, n_turbines * p_lt};
}

InterpResult interpolate(const AngleTable& table, double psi_deg) {
    require_increasing(table.angles_deg, "angle");
    if (table.values.size() != table.angles_deg.size())
        throw ConfigError("angle table values do not match its grid");
    const GridPos p = locate(table.angles_deg, psi_deg);
    if (table.angles_deg.size() == 1)
        return {table.values[0], p.clamped};
    const double v = (1.0 - p.t) * table.values[p.lo] + p.t * table.values[p.lo + 1];
    return {v, p.clamped};
}

InterpResult interpolate(const FlickerTable& table, double psi_deg, double v_a) {
    require_increasing(table.angles_deg, "angle");
    require_increasing(table.mean_speeds, "mean-speed");
    if (table.values.rows() != table.mean_speeds.size() ||
        table.values.cols() != table.angles_deg.size())
        throw ConfigError("flicker table values do not match its grids");
    const GridPos pa = locate(table.angles_deg, psi_deg);
    const GridPos ps = locate(table.mean_speeds, v_a);
    auto corner = [&](Eigen::Index si, Eigen::Index ai) {
        si = std::min(si, table.values.rows() - 1);
        ai = std::min(ai, table.values.cols() - 1);
        return table.values(si, ai);
    };
    const double lo = (1.0 - pa.t) * corner(ps.lo, pa.lo) + pa.t * corner(ps.lo, pa.lo + 1);
    const double hi =
        (1.0 - pa.t) * corner(ps.lo + 1, pa.lo) + pa.t * corner(ps.lo + 1, pa.lo + 1);
    return {(1.0 - ps.t) * lo + ps.t * hi, pa.clamped || ps.clamped};
}

PQAssessment assess_scenario(const TurbinePQData& turbine, const GridPoint& grid,
                             double v_a, int n_turbines, double d_ss_limit) {
    turbine.validate();
    grid.validate();

    PQAssessment out;
    out.annual_mean_speed = v_a;
    out.s_n_mva = turbine.rated_apparent_power_mva;
    out.s_sc_mva = grid.short_circuit_power_mva;
    out.impedance_angle_deg = grid.impedance_angle_deg;
    out.n_turbines = n_turbines;
    out.d_ss_limit = d_ss_limit;

    const ApparentPower ap =
        apparent_power_and_phase(turbine.peak_active_power_mw, turbine.peak_reactive_power_mvar);
    out.s60_mva = ap.s60_mva;
    out.phase_deg = ap.phase_deg;

    try {
        out.steady_state = steady_state_voltage_change(ap.s60_mva, ap.phase_deg, grid, n_turbines);
    } catch (const ValidityDomainError& e) {
        throw ValidityDomainError(std::string("steady-state voltage change: ") + e.what());
    }

    const InterpResult c = interpolate(turbine.flicker, grid.impedance_angle_deg, v_a);
    if (c.clamped)
        out.warnings.push_back("flicker coefficient query outside table grid; clamped");
    out.flicker_coefficient = c.value;
    out.continuous_flicker =
        continuous_flicker(c.value, turbine.rated_apparent_power_mva, grid, n_turbines);

    const SwitchingCase& rated = turbine.switching_case(SwitchingKind::cut_in_at_rated);
    const InterpResult ku = interpolate(rated.voltage_change, grid.impedance_angle_deg);
    if (ku.clamped)
        out.warnings.push_back("voltage change factor query outside table grid; clamped");
    out.k_u_rated = ku.value;
    out.d_so = switching_voltage_change(ku.value, turbine.rated_apparent_power_mva, grid);

    for (const auto& sw : turbine.switching) {
        const InterpResult kf = interpolate(sw.flicker_step, grid.impedance_angle_deg);
        if (kf.clamped)
            out.warnings.push_back(std::string("flicker step factor (") + to_string(sw.kind) +
                                   ") query outside table grid; clamped");
        SwitchingAssessment sa;
        sa.kind = sw.kind;
        sa.n120 = sw.n120;
        sa.k_f = kf.value;
        sa.flicker = switching_flicker(sw.n120, kf.value, turbine.rated_apparent_power_mva,
                                       grid, n_turbines);
        out.switching.push_back(sa);
    }

    out.compliant = out.steady_state.farm <= d_ss_limit;
    return out;
}

} // namespace nuwind::pq
