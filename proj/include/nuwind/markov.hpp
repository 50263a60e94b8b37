#pragma once

#include "nuwind/wind.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace nuwind::markov {

/// Continuous-time Markov chain in column convention: generator(i, j) is the
/// rate from state j into state i (1/h), so every column sums to zero and
/// dP/dt = generator * P.
struct MarkovModel {
    std::string name;
    std::vector<std::string> state_labels;
    Eigen::MatrixXd generator;
    std::vector<int> success_states;
    Eigen::VectorXd initial_distribution;

    int size() const { return static_cast<int>(generator.rows()); }
    std::vector<int> failure_states() const;
};

/// State distributions on a time grid; states.col(k) is P(times[k]).
struct Trajectory {
    Eigen::VectorXd times;
    Eigen::MatrixXd states;
};

struct GeneratorDiagnostics {
    bool ok = true;
    Eigen::VectorXd column_residuals;
    std::vector<std::pair<int, int>> negative_off_diagonals;
    double initial_mass_error = 0.0;
    std::string message;
};

struct StepControl {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    int output_points = 401; ///< grid size for the t_end overloads
};

/// Column-sum, sign, and distribution checks; never throws.
GeneratorDiagnostics validate_generator(const MarkovModel& m);

/// Solve dP/dt = A*P on the given grid (strictly increasing, may start at 0).
Trajectory integrate(const MarkovModel& m, const Eigen::VectorXd& times,
                     const StepControl& control = {});
Trajectory integrate(const MarkovModel& m, double t_end, const StepControl& control = {});

/// Pointwise sum of success-state probabilities.
Eigen::VectorXd availability_curve(const Trajectory& traj,
                                   const std::vector<int>& success_states);

/// Integrates the reduced system (failure rows/columns deleted) and sums the
/// surviving probabilities; leaked probability is absorbed failure.
Eigen::VectorXd reliability_curve(const MarkovModel& m, const Eigen::VectorXd& times,
                                  const StepControl& control = {});

/// Null-space stationary distribution: A*pi = 0, sum(pi) = 1.
Eigen::VectorXd steady_state(const MarkovModel& m);

struct DieselRates {
    double failure_rate = 0.0;      ///< lambda (1/h)
    double repair_rate = 0.0;       ///< mu (1/h)
    double common_cause_rate = 0.0; ///< lambda_ccf (1/h)
};

struct WindUnitRates {
    double failure_rate = 0.0; ///< lambda (1/h)
    double repair_rate = 0.0;  ///< mu (1/h)
};

/// Four-state model of two redundant diesel generators with common-cause
/// failure and a single repairman. Success: both, or either one, running.
MarkovModel build_dg_model(const DieselRates& rates);

/// Wind-region occupancy probabilities used as transition rates between the
/// wind-speed regions of the turbine model.
struct WindTransitionProbs {
    double below_cut_in = 0.0;  ///< P(V < V_i)
    double above_cut_in = 0.0;  ///< P(V > V_i)
    double below_rated = 0.0;   ///< P(V < V_r)
    double above_rated = 0.0;   ///< P(V > V_r)
    double below_cut_out = 0.0; ///< P(V < V_o)
    double above_cut_out = 0.0; ///< P(V > V_o)
};

WindTransitionProbs wind_transition_probs(const wind::WeibullParams& w,
                                          const wind::TurbinePowerCurve& curve);

/// Seven-state model of two identical wind units in parallel: states track
/// unit health (two / one / none running) and the wind region (partial,
/// rated, or out of range). S6 (out of range or both units down) is the only
/// failure state.
MarkovModel build_wt_model(double failure_rate, double repair_rate,
                           const WindTransitionProbs& probs);

struct TimeSeries {
    Eigen::VectorXd times;
    Eigen::VectorXd values;
};

/// Pointwise 1 - (1-a)(1-b) for two availability or reliability series.
Eigen::VectorXd parallel_combine(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
TimeSeries parallel_combine(const TimeSeries& a, const TimeSeries& b);

/// Smallest speed in [cut_in, rated] where the power fraction reaches
/// min_fraction, from the quadratic ramp (positive root).
double threshold_wind_speed(const wind::TurbinePowerCurve& curve, double min_fraction);

struct SystemCurves {
    Eigen::VectorXd availability;
    Eigen::VectorXd reliability;
};

struct ReliabilityComparison {
    Eigen::VectorXd times;
    double wind_threshold_speed = 0.0; ///< m/s; cut-in when unconstrained
    SystemCurves dg;
    SystemCurves wind;
    SystemCurves wind_diesel;
};

/// Wind-diesel emergency-supply study with a minimum acceptable farm output.
/// The wind model's cut-in is raised to the speed where the farm first meets
/// min_mw, and the farm is represented as two half-capacity trains.
ReliabilityComparison min_output_scenario(double wf_capacity_mw, double min_mw,
                                          const wind::TurbinePowerCurve& curve,
                                          const wind::WeibullParams& weibull,
                                          const WindUnitRates& wind_rates,
                                          const DieselRates& diesel_rates,
                                          const Eigen::VectorXd& times,
                                          const StepControl& control = {});

/// CSV dump of the generator with state labels, for external verification.
std::string dump_model_csv(const MarkovModel& m);

} // namespace nuwind::markov
