#pragma once

#include "nuwind/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace nuwind::ode {

struct Options {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    long max_steps = 50'000'000;
};

/// Adaptive Dormand-Prince 5(4) integration of y' = f(t, y) from t = 0,
/// landing exactly on every requested output time. Returns one column per
/// entry of `times` (strictly increasing, non-negative).
///
/// The first requested time may be 0, in which case its column is y0.
template <typename Rhs>
Eigen::MatrixXd integrate_on_grid(Rhs&& f, const Eigen::VectorXd& y0,
                                  const Eigen::VectorXd& times, const Options& opt = {}) {
    const Eigen::Index n = y0.size();
    const Eigen::Index m = times.size();
    if (m == 0)
        throw InvalidInputError("integration grid is empty");
    if (times[0] < 0.0)
        throw InvalidInputError("integration grid must start at t >= 0");
    for (Eigen::Index i = 1; i < m; ++i)
        if (!(times[i] > times[i - 1]))
            throw InvalidInputError("integration grid must be strictly increasing");

    Eigen::MatrixXd out(n, m);

    Eigen::VectorXd y = y0;
    double t = 0.0;
    Eigen::Index next = 0;
    if (times[0] == 0.0) {
        out.col(0) = y0;
        next = 1;
    }
    if (next == m)
        return out;

    Eigen::VectorXd k1 = f(t, y);
    Eigen::VectorXd k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), yerr(n);

    const double t_end = times[m - 1];
    double h = (times[next] - t) / 16.0;
    {
        // Conservative start; the controller adapts within a few steps.
        const double d1 = k1.cwiseAbs().maxCoeff();
        if (d1 > 0.0)
            h = std::min(h, 0.01 * (opt.abs_tol / opt.rel_tol + y.cwiseAbs().maxCoeff()) / d1);
        h = std::max(h, 1e-12);
    }

    long steps = 0;
    while (next < m) {
        if (++steps > opt.max_steps)
            throw StiffnessError("integration exceeded " + std::to_string(opt.max_steps) +
                                 " steps at t = " + std::to_string(t));
        const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
        if (h < h_min)
            throw StiffnessError("step size underflow at t = " + std::to_string(t) +
                                 " (h = " + std::to_string(h) + ")");
        bool exact_hit = false;
        if (t + h >= times[next]) {
            h = times[next] - t;
            exact_hit = true;
        }

        k2 = f(t + h * 0.2, ytmp = y + h * (0.2 * k1));
        k3 = f(t + h * 0.3, ytmp = y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
        k4 = f(t + h * 0.8, ytmp = y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
        k5 = f(t + h * 8.0 / 9.0,
               ytmp = y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                               64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
        k6 = f(t + h, ytmp = y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                                      46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                                      5103.0 / 18656.0 * k5));
        ynew = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                        2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
        k7 = f(t + h, ynew);
        yerr = h * (71.0 / 57600.0 * k1 - 71.0 / 16695.0 * k3 + 71.0 / 1920.0 * k4 -
                    17253.0 / 339200.0 * k5 + 22.0 / 525.0 * k6 - 1.0 / 40.0 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double e = yerr[i] / sc;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(n));
        if (!std::isfinite(err))
            err = 1e10; // overflowed stage: reject and shrink hard

        if (err <= 1.0) {
            t = exact_hit ? times[next] : t + h;
            y = ynew;
            k1 = k7; // first-same-as-last
            while (next < m && t >= times[next]) {
                out.col(next) = y;
                ++next;
            }
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
        h = std::min(h, t_end); // keep the step finite on flat solutions
    }
    return out;
}

} // namespace nuwind::ode
