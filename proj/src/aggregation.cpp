#include "nuwind/aggregation.hpp"

#include "nuwind/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nuwind::agg {

GenerationSeries series_from_site(const wind::SiteProfile& site,
                                  const wind::TurbinePowerCurve& curve) {
    wind::validate(site.wind_table);
    wind::validate(curve);
    if (site.shear_exponent < 0.0 || site.shear_exponent > 1.0)
        throw InvalidInputError("shear exponent must lie in [0, 1]");

    GenerationSeries s;
    s.values.resize(kSamplesPerYear);
    for (int month = 1; month <= 12; ++month) {
        for (int hour = 0; hour < 24; ++hour) {
            const double v_hub =
                wind::shear_correct(site.wind_table.at(month, hour),
                                    site.wind_table.reference_height, curve.hub_height,
                                    site.shear_exponent);
            s.values[GenerationSeries::index_of(month, hour)] =
                wind::power_fraction(v_hub, curve);
        }
    }
    return s;
}

GenerationSeries aggregate_portfolio(const PortfolioCase& pc) {
    if (pc.components.empty())
        throw InvalidInputError("portfolio \"" + pc.label + "\" has no components");

    GenerationSeries total;
    total.values = Eigen::VectorXd::Zero(kSamplesPerYear);
    for (const auto& comp : pc.components) {
        if (!(comp.installed_mw > 0.0))
            throw InvalidInputError("portfolio \"" + pc.label +
                                    "\" has a non-positive component capacity");
        total.installed_capacity_mw += comp.installed_mw;
    }
    for (const auto& comp : pc.components) {
        const double weight = comp.installed_mw / total.installed_capacity_mw;
        total.values += weight * series_from_site(comp.site, comp.curve).values;
    }
    return total;
}

Eigen::VectorXd delta_series(const GenerationSeries& s) {
    const Eigen::Index n = s.values.size();
    if (n != kSamplesPerYear)
        throw InvalidInputError("generation series must hold 288 samples");
    Eigen::VectorXd d(n);
    d[0] = s.values[0] - s.values[n - 1];
    d.tail(n - 1) = s.values.tail(n - 1) - s.values.head(n - 1);
    return d;
}

Eigen::VectorXd duration_curve(const Eigen::VectorXd& samples) {
    std::vector<double> sorted(samples.data(), samples.data() + samples.size());
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
    return Eigen::Map<const Eigen::VectorXd>(sorted.data(),
                                             static_cast<Eigen::Index>(sorted.size()));
}

VariationRange variation_range(const GenerationSeries& s) {
    const Eigen::VectorXd d = delta_series(s);
    return {100.0 * d.maxCoeff(), 100.0 * d.minCoeff()};
}

} // namespace nuwind::agg
