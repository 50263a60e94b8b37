#include "nuwind/markov.hpp"

#include "nuwind/csv.hpp"
#include "nuwind/errors.hpp"
#include "nuwind/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nuwind::markov {

namespace {

constexpr double kColumnSumTol = 1e-12;

Eigen::VectorXd linspace_grid(double t_end, int points) {
    if (!(t_end > 0.0))
        throw InvalidInputError("integration horizon must be positive");
    if (points < 2)
        throw InvalidInputError("time grid needs at least two points");
    return Eigen::VectorXd::LinSpaced(points, 0.0, t_end);
}

} // namespace

std::vector<int> MarkovModel::failure_states() const {
    std::vector<int> fail;
    for (int i = 0; i < size(); ++i)
        if (std::find(success_states.begin(), success_states.end(), i) == success_states.end())
            fail.push_back(i);
    return fail;
}

GeneratorDiagnostics validate_generator(const MarkovModel& m) {
    GeneratorDiagnostics d;
    std::ostringstream msg;

    const Eigen::Index n = m.generator.rows();
    if (n == 0 || m.generator.cols() != n) {
        d.ok = false;
        d.message = "generator must be square and non-empty";
        return d;
    }
    d.column_residuals = m.generator.colwise().sum();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(d.column_residuals[j]) > kColumnSumTol) {
            d.ok = false;
            msg << "column " << j << " sums to " << d.column_residuals[j] << "; ";
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j && m.generator(i, j) < 0.0) {
                d.negative_off_diagonals.emplace_back(static_cast<int>(i), static_cast<int>(j));
                d.ok = false;
                msg << "negative rate at (" << i << "," << j << "); ";
            }
        }
    }
    if (m.initial_distribution.size() != n) {
        d.ok = false;
        msg << "initial distribution has wrong length; ";
    } else {
        d.initial_mass_error = m.initial_distribution.sum() - 1.0;
        if (std::abs(d.initial_mass_error) > 1e-9 ||
            (m.initial_distribution.array() < 0.0).any()) {
            d.ok = false;
            msg << "initial distribution is not a probability vector; ";
        }
    }
    if (m.success_states.empty()) {
        d.ok = false;
        msg << "success set is empty; ";
    }
    for (int s : m.success_states) {
        if (s < 0 || s >= n) {
            d.ok = false;
            msg << "success state " << s << " out of range; ";
        }
    }
    if (!m.state_labels.empty() && static_cast<Eigen::Index>(m.state_labels.size()) != n) {
        d.ok = false;
        msg << "label count does not match state count; ";
    }
    d.message = d.ok ? "ok" : msg.str();
    return d;
}

Trajectory integrate(const MarkovModel& m, const Eigen::VectorXd& times,
                     const StepControl& control) {
    const GeneratorDiagnostics diag = validate_generator(m);
    if (!diag.ok)
        throw InvalidInputError("invalid generator: " + diag.message);

    ode::Options opt;
    opt.rel_tol = control.rel_tol;
    opt.abs_tol = control.abs_tol;
    Trajectory traj;
    traj.times = times;
    const Eigen::MatrixXd& a = m.generator;
    try {
        traj.states = ode::integrate_on_grid(
            [&a](double, const Eigen::VectorXd& y) -> Eigen::VectorXd { return a * y; },
            m.initial_distribution, times, opt);
    } catch (const StiffnessError& e) {
        const double max_diag = a.diagonal().cwiseAbs().maxCoeff();
        throw StiffnessError(std::string(e.what()) +
                             "; largest |diagonal rate| = " + csv::format(max_diag) + " 1/h");
    }
    return traj;
}

Trajectory integrate(const MarkovModel& m, double t_end, const StepControl& control) {
    return integrate(m, linspace_grid(t_end, control.output_points), control);
}

Eigen::VectorXd availability_curve(const Trajectory& traj,
                                   const std::vector<int>& success_states) {
    if (success_states.empty())
        throw InvalidInputError("success set is empty");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(traj.times.size());
    for (int s : success_states) {
        if (s < 0 || s >= traj.states.rows())
            throw InvalidInputError("success state index out of range");
        out += traj.states.row(s).transpose();
    }
    return out;
}

Eigen::VectorXd reliability_curve(const MarkovModel& m, const Eigen::VectorXd& times,
                                  const StepControl& control) {
    const GeneratorDiagnostics diag = validate_generator(m);
    if (!diag.ok)
        throw InvalidInputError("invalid generator: " + diag.message);

    std::vector<int> keep = m.success_states;
    std::sort(keep.begin(), keep.end());
    const Eigen::Index k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd reduced(k, k);
    Eigen::VectorXd p0(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        p0[i] = m.initial_distribution[keep[i]];
        for (Eigen::Index j = 0; j < k; ++j)
            reduced(i, j) = m.generator(keep[i], keep[j]);
    }

    ode::Options opt;
    opt.rel_tol = control.rel_tol;
    opt.abs_tol = control.abs_tol;
    Eigen::MatrixXd states;
    try {
        states = ode::integrate_on_grid(
            [&reduced](double, const Eigen::VectorXd& y) -> Eigen::VectorXd {
                return reduced * y;
            },
            p0, times, opt);
    } catch (const StiffnessError& e) {
        const double max_diag = reduced.diagonal().cwiseAbs().maxCoeff();
        throw StiffnessError(std::string(e.what()) +
                             "; largest |diagonal rate| = " + csv::format(max_diag) + " 1/h");
    }
    return states.colwise().sum().transpose();
}

Eigen::VectorXd steady_state(const MarkovModel& m) {
    const Eigen::Index n = m.generator.rows();
    if (n == 0 || m.generator.cols() != n)
        throw InvalidInputError("generator must be square and non-empty");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m.generator);
    lu.setThreshold(1e-10);
    const Eigen::Index kernel_dim = n - lu.rank();
    if (kernel_dim != 1)
        throw SteadyStateError("generator has " + std::to_string(kernel_dim) +
                               " recurrent classes; steady state is not unique");
    Eigen::VectorXd pi = lu.kernel().col(0);
    const double total = pi.sum();
    if (total == 0.0)
        throw SteadyStateError("degenerate null space");
    pi /= total;
    return pi;
}

MarkovModel build_dg_model(const DieselRates& rates) {
    if (rates.failure_rate < 0.0 || rates.repair_rate < 0.0 || rates.common_cause_rate < 0.0)
        throw InvalidInputError("diesel rates must be non-negative");
    const double lam = rates.failure_rate;
    const double mu = rates.repair_rate;
    const double ccf = rates.common_cause_rate;

    MarkovModel m;
    m.name = "dg";
    m.state_labels = {"S0", "S1", "S2", "S3"};
    m.generator.resize(4, 4);
    m.generator << -(2.0 * lam + ccf), mu, mu, 0.0,
                   lam, -(lam + mu), 0.0, mu,
                   lam, 0.0, -(lam + mu), mu,
                   ccf, lam, lam, -2.0 * mu;
    m.success_states = {0, 1, 2};
    m.initial_distribution = Eigen::Vector4d(1.0, 0.0, 0.0, 0.0);
    return m;
}

WindTransitionProbs wind_transition_probs(const wind::WeibullParams& w,
                                          const wind::TurbinePowerCurve& curve) {
    wind::validate(curve);
    const double inf = std::numeric_limits<double>::infinity();
    WindTransitionProbs p;
    p.below_cut_in = wind::weibull_prob_range(0.0, curve.cut_in, w);
    p.above_cut_in = wind::weibull_prob_range(curve.cut_in, inf, w);
    p.below_rated = wind::weibull_prob_range(0.0, curve.rated_speed, w);
    p.above_rated = wind::weibull_prob_range(curve.rated_speed, inf, w);
    p.below_cut_out = wind::weibull_prob_range(0.0, curve.cut_out, w);
    p.above_cut_out = wind::weibull_prob_range(curve.cut_out, inf, w);
    return p;
}

MarkovModel build_wt_model(double failure_rate, double repair_rate,
                           const WindTransitionProbs& probs) {
    if (failure_rate < 0.0 || repair_rate < 0.0)
        throw InvalidInputError("wind unit rates must be non-negative");
    const double lam = failure_rate;
    const double mu = repair_rate;
    // Region-change rates, aliased per unit-health level.
    const double p06 = probs.below_cut_in, p16 = p06, p26 = p06;
    const double p60 = probs.above_cut_in, p61 = p60, p62 = p60;
    const double p30 = probs.below_rated, p41 = p30, p52 = p30;
    const double p03 = probs.above_rated, p14 = p03, p25 = p03;
    const double p63 = probs.below_cut_out, p64 = p63, p65 = p63;
    const double p36 = probs.above_cut_out, p46 = p36, p56 = p36;

    const double da = -(p03 + 2.0 * lam + p06);
    const double db = -(lam + mu + p16 + p14);
    const double dc = -(lam + mu + p26 + p25);
    const double dd = -(p30 + 2.0 * lam + p36);
    const double de = -(mu + lam + p46 + p41);
    const double df = -(mu + lam + p52 + p56);
    const double dg = -(p60 + 4.0 * mu + p61 + p62 + p63 + p64 + p65);

    MarkovModel m;
    m.name = "wt";
    m.state_labels = {"S0", "S1", "S2", "S3", "S4", "S5", "S6"};
    m.generator.resize(7, 7);
    m.generator << da,  mu,        mu,        p30, 0.0,       0.0,       p60,
                   lam, db,        0.0,       0.0, p41,       0.0,       mu + p61,
                   lam, 0.0,       dc,        0.0, 0.0,       p52,       mu + p62,
                   p03, 0.0,       0.0,       dd,  mu,        mu,        p63,
                   0.0, p14,       0.0,       lam, de,        0.0,       mu + p64,
                   0.0, 0.0,       p25,       lam, 0.0,       df,        mu + p65,
                   p06, lam + p16, lam + p26, p36, lam + p46, lam + p56, dg;
    m.success_states = {0, 1, 2, 3, 4, 5};
    m.initial_distribution = Eigen::VectorXd::Zero(7);
    m.initial_distribution[0] = 1.0;
    return m;
}

Eigen::VectorXd parallel_combine(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size())
        throw InvalidInputError("parallel combination needs series of equal length");
    Eigen::ArrayXd combined = 1.0 - (1.0 - a.array()) * (1.0 - b.array());
    return combined.matrix();
}

TimeSeries parallel_combine(const TimeSeries& a, const TimeSeries& b) {
    if (a.times.size() != b.times.size() || !(a.times.array() == b.times.array()).all())
        throw InvalidInputError("parallel combination needs identical time grids");
    return {a.times, parallel_combine(a.values, b.values)};
}

double threshold_wind_speed(const wind::TurbinePowerCurve& curve, double min_fraction) {
    if (!(min_fraction > 0.0) || min_fraction > 1.0)
        throw InvalidInputError("minimum output fraction must lie in (0, 1]");
    const wind::PowerCurveCoeffs k = wind::power_curve_coeffs(curve);
    const double vi = curve.cut_in;
    const double vr = curve.rated_speed;

    // c v^2 + b v + (a - f) = 0 on [V_i, V_r]; the ramp is 0 at V_i and 1 at
    // V_r, so exactly one upward crossing exists for monotone ramps.
    const double cq = k.c;
    const double bq = k.b;
    const double aq = k.a - min_fraction;
    double root = vr;
    if (std::abs(cq) < 1e-14 * std::max(1.0, std::abs(bq))) {
        root = -aq / bq;
    } else {
        const double disc = std::max(0.0, bq * bq - 4.0 * cq * aq);
        const double q = -0.5 * (bq + std::copysign(std::sqrt(disc), bq));
        const double r1 = q / cq;
        const double r2 = aq / q;
        const double eps = 1e-9 * (vr - vi);
        double best = std::numeric_limits<double>::infinity();
        for (double r : {r1, r2})
            if (r >= vi - eps && r <= vr + eps)
                best = std::min(best, r);
        if (!std::isfinite(best))
            throw InvalidInputError("power-curve ramp never reaches the requested fraction");
        root = best;
    }
    return std::clamp(root, vi, vr);
}

ReliabilityComparison min_output_scenario(double wf_capacity_mw, double min_mw,
                                          const wind::TurbinePowerCurve& curve,
                                          const wind::WeibullParams& weibull,
                                          const WindUnitRates& wind_rates,
                                          const DieselRates& diesel_rates,
                                          const Eigen::VectorXd& times,
                                          const StepControl& control) {
    if (!(wf_capacity_mw > 0.0))
        throw InvalidInputError("wind farm capacity must be positive");
    if (min_mw < 0.0 || min_mw > wf_capacity_mw)
        throw InvalidInputError("minimum output must lie in [0, farm capacity]");

    ReliabilityComparison out;
    out.times = times;
    out.wind_threshold_speed =
        min_mw == 0.0 ? curve.cut_in : threshold_wind_speed(curve, min_mw / wf_capacity_mw);

    // The farm enters the model as two half-capacity trains; a train is
    // productive only while the farm-level minimum is met.
    wind::TurbinePowerCurve train_curve = curve;
    train_curve.cut_in = out.wind_threshold_speed;
    if (!(train_curve.cut_in < train_curve.rated_speed))
        train_curve.cut_in = std::nextafter(train_curve.rated_speed, 0.0);

    const MarkovModel dg = build_dg_model(diesel_rates);
    const MarkovModel wt = build_wt_model(wind_rates.failure_rate, wind_rates.repair_rate,
                                          wind_transition_probs(weibull, train_curve));

    const Trajectory dg_traj = integrate(dg, times, control);
    const Trajectory wt_traj = integrate(wt, times, control);
    out.dg.availability = availability_curve(dg_traj, dg.success_states);
    out.wind.availability = availability_curve(wt_traj, wt.success_states);
    out.dg.reliability = reliability_curve(dg, times, control);
    out.wind.reliability = reliability_curve(wt, times, control);
    out.wind_diesel.availability = parallel_combine(out.dg.availability, out.wind.availability);
    out.wind_diesel.reliability = parallel_combine(out.dg.reliability, out.wind.reliability);
    return out;
}

std::string dump_model_csv(const MarkovModel& m) {
    csv::Writer w;
    w.cell("model");
    w.cell(m.name.empty() ? std::string("markov") : m.name);
    w.end_row();
    w.cell("state");
    for (const auto& label : m.state_labels)
        w.cell(label);
    w.cell("success");
    w.cell("initial");
    w.end_row();
    for (int i = 0; i < m.size(); ++i) {
        w.cell(m.state_labels[static_cast<size_t>(i)]);
        for (int j = 0; j < m.size(); ++j)
            w.cell(m.generator(i, j));
        const bool success = std::find(m.success_states.begin(), m.success_states.end(), i) !=
                             m.success_states.end();
        w.cell(std::string(success ? "1" : "0"));
        w.cell(m.initial_distribution[i]);
        w.end_row();
    }
    return w.str();
}

} // namespace nuwind::markov
