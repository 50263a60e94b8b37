#include "nuwind/economics.hpp"
#include "nuwind/errors.hpp"
#include "nuwind/presets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace nuwind;
using doctest::Approx;

namespace {

econ::PlantCostModel trivial_plant() {
    econ::PlantCostModel m;
    m.name = "trivial";
    m.capacity_mw = 1.0;
    m.capacity_factor = 1.0;
    m.capital_cost_per_kw = 1000.0;
    m.discount_rate = 0.0;
    m.construction_years = 1;
    m.lifetime_years = 10;
    return m;
}

} // namespace

TEST_SUITE_BEGIN("economics");

TEST_CASE("ledger construction") {
    SUBCASE("trivial plant") {
        const econ::CashflowLedger ledger = econ::build_ledger(trivial_plant());
        CHECK(ledger.years() == 11);
        CHECK(ledger.capital[0] == Approx(1'000'000.0));
        CHECK(ledger.capital.tail(10).cwiseAbs().maxCoeff() == 0.0);
        CHECK(ledger.energy_mwh[0] == 0.0);
        for (int t = 1; t <= 10; ++t)
            CHECK(ledger.energy_mwh[t] == Approx(8760.0));
    }

    SUBCASE("median onshore plant") {
        const econ::CashflowLedger ledger = econ::build_ledger(presets::median_cost_model());
        CHECK(ledger.total_investment() == Approx(105'688'800.0).epsilon(1e-9));
        CHECK(ledger.energy_mwh[1] == Approx(45.0 * 0.257 * 8760.0).epsilon(1e-12));
        CHECK(ledger.variable_om[1] == Approx(45.0 * 0.257 * 8760.0 * 21.92).epsilon(1e-12));
        CHECK(ledger.energy_mwh[1] == Approx(101'309.4).epsilon(1e-9));
        CHECK(ledger.variable_om[1] == Approx(2'220'702.05).epsilon(1e-6));

        // totals equal component sums
        for (int t = 0; t < ledger.years(); ++t)
            CHECK(ledger.total[t] == Approx(ledger.capital[t] + ledger.fixed_om[t] +
                                            ledger.variable_om[t] + ledger.fuel[t]));
    }

    SUBCASE("two-year build splits the investment evenly") {
        econ::PlantCostModel m = presets::median_cost_model();
        m.construction_years = 2;
        const econ::CashflowLedger ledger = econ::build_ledger(m);
        CHECK(ledger.capital[0] == Approx(105'688'800.0 / 2.0));
        CHECK(ledger.capital[1] == Approx(105'688'800.0 / 2.0));
        CHECK(ledger.capital[2] == 0.0);
        CHECK(ledger.energy_mwh[1] == 0.0);
        CHECK(ledger.energy_mwh[2] > 0.0);
        CHECK(ledger.total_investment() == Approx(105'688'800.0).epsilon(1e-9));
    }

    econ::PlantCostModel bad = trivial_plant();
    bad.capacity_factor = 1.5;
    CHECK_THROWS_AS(econ::build_ledger(bad), InvalidInputError);
}

TEST_CASE("lcoe discounting") {
    SUBCASE("zero discount rate is a plain ratio") {
        const econ::CashflowLedger ledger = econ::build_ledger(trivial_plant());
        CHECK(econ::lcoe(ledger, 0.0) == Approx(1'000'000.0 / 87'600.0).epsilon(1e-12));
        // undiscounted identity: lcoe * total energy = total cost
        CHECK(econ::lcoe(ledger, 0.0) * ledger.energy_mwh.sum() ==
              Approx(ledger.total.sum()).epsilon(1e-9));
    }

    SUBCASE("median case matches the spreadsheet-style oracle") {
        const econ::PlantCostModel m = presets::median_cost_model();
        const oracles::PlainPlant p{m.capacity_mw, m.capacity_factor, m.capital_cost_per_kw,
                                    0.0,           m.variable_om_per_mwh, 0.0,
                                    1,             20};
        CHECK(econ::lcoe(m) == Approx(oracles::plain_lcoe(p, 0.08)).epsilon(1e-9));
    }

    SUBCASE("linear in costs") {
        econ::PlantCostModel m = presets::median_cost_model();
        const double base = econ::lcoe(m);
        m.capital_cost_per_kw *= 2.0;
        m.variable_om_per_mwh *= 2.0;
        m.fixed_om_per_year *= 2.0;
        m.fuel_cost_per_mwh *= 2.0;
        CHECK(econ::lcoe(m) == Approx(2.0 * base).epsilon(1e-12));
    }

    SUBCASE("currency rescaling invariance") {
        econ::PlantCostModel m = presets::median_cost_model();
        m.fuel_cost_per_mwh = 3.0;
        m.fixed_om_per_year = 1e5;
        const double base = econ::lcoe(m);
        const double k = 117.3; // arbitrary exchange rate
        m.capital_cost_per_kw *= k;
        m.variable_om_per_mwh *= k;
        m.fixed_om_per_year *= k;
        m.fuel_cost_per_mwh *= k;
        CHECK(econ::lcoe(m) == Approx(k * base).epsilon(1e-12));
    }

    SUBCASE("zero energy is an error") {
        econ::PlantCostModel m = trivial_plant();
        m.capacity_factor = 0.0;
        CHECK_THROWS_AS(econ::lcoe(m), InvalidInputError);
    }
}

TEST_CASE("sensitivity sweeps are monotone") {
    const econ::PlantCostModel base = presets::median_cost_model();

    auto values = [](const std::vector<econ::SweepPoint>& pts) {
        std::vector<double> v;
        for (const auto& p : pts)
            v.push_back(p.lcoe);
        return v;
    };

    const auto capital = values(econ::sensitivity_sweep(
        base, econ::SweepParameter::capital_cost, {1845.0, 2100.0, 2348.64, 3000.0, 3716.22}));
    for (size_t i = 1; i < capital.size(); ++i)
        CHECK(capital[i] > capital[i - 1]);

    const auto om = values(econ::sensitivity_sweep(base, econ::SweepParameter::variable_om,
                                                   {8.63, 15.0, 21.92, 30.0, 42.78}));
    for (size_t i = 1; i < om.size(); ++i)
        CHECK(om[i] > om[i - 1]);

    const auto cf = values(econ::sensitivity_sweep(base, econ::SweepParameter::capacity_factor,
                                                   {0.205, 0.257, 0.30, 0.35, 0.41}));
    for (size_t i = 1; i < cf.size(); ++i)
        CHECK(cf[i] < cf[i - 1]);

    // costs front-loaded: discounting raises the levelized price
    const auto rate = values(econ::sensitivity_sweep(base, econ::SweepParameter::discount_rate,
                                                     {0.0, 0.04, 0.08, 0.12}));
    for (size_t i = 1; i < rate.size(); ++i)
        CHECK(rate[i] > rate[i - 1]);

    CHECK_THROWS_AS(econ::sensitivity_sweep(base, econ::SweepParameter::capital_cost, {}),
                    InvalidInputError);
}

TEST_CASE("portfolio lcoe pools discounted cost and energy") {
    const econ::PlantCostModel m = presets::median_cost_model();
    // pooling two identical plants changes nothing
    CHECK(econ::portfolio_lcoe({m, m}) == Approx(econ::lcoe(m)).epsilon(1e-12));

    const oracles::PlainPlant p{m.capacity_mw, m.capacity_factor, m.capital_cost_per_kw,
                                0.0,           m.variable_om_per_mwh, 0.0,
                                1,             20};
    oracles::PlainPlant q = p;
    q.capacity_factor = 0.4;
    double cost_p, energy_p, cost_q, energy_q;
    oracles::discounted_totals(p, 0.08, cost_p, energy_p);
    oracles::discounted_totals(q, 0.08, cost_q, energy_q);
    econ::PlantCostModel m2 = m;
    m2.capacity_factor = 0.4;
    CHECK(econ::portfolio_lcoe({m, m2}) ==
          Approx((cost_p + cost_q) / (energy_p + energy_q)).epsilon(1e-9));
}

TEST_CASE("coupling comparison") {
    SUBCASE("identical cases tie at zero reduction") {
        const econ::PlantCostModel m = presets::median_cost_model();
        econ::CouplingAdjustments adj;
        adj.capital_reduction_grid = {0.0, 0.1};
        adj.om_reduction_grid = {0.0};
        const econ::ComparisonMatrix matrix =
            econ::coupling_compare({{m, true}}, {m}, adj);
        CHECK(matrix.cells[0].lcoe_a == Approx(matrix.cells[0].lcoe_b).epsilon(1e-12));
        CHECK(matrix.cells[0].breakeven);
        CHECK(matrix.breakeven_capital_reduction(0.0) == 0.0);
    }

    SUBCASE("coupled site with lower capacity factor starts out costlier") {
        const presets::CouplingComparison cmp = presets::coupling_comparison(1);
        econ::CouplingAdjustments adj;
        adj.capital_reduction_grid = {0.0};
        adj.om_reduction_grid = {0.0};
        const econ::ComparisonMatrix matrix =
            econ::coupling_compare(cmp.case_a, cmp.case_b, adj);
        CHECK(matrix.cells[0].lcoe_a > matrix.cells[0].lcoe_b);
    }

    SUBCASE("breakeven capital reduction near 55 percent for the first scenario") {
        const presets::CouplingComparison cmp = presets::coupling_comparison(1);
        const econ::ComparisonMatrix matrix =
            econ::coupling_compare(cmp.case_a, cmp.case_b, presets::coupling_adjustments());
        const double breakeven = matrix.breakeven_capital_reduction(0.0);
        CHECK(breakeven == Approx(0.55).epsilon(0.05 / 0.55));

        // any O&M reduction can only bring the breakeven earlier
        const double with_om = matrix.breakeven_capital_reduction(0.10);
        CHECK(with_om <= breakeven);
    }

    SUBCASE("reduction grids are validated") {
        const econ::PlantCostModel m = presets::median_cost_model();
        econ::CouplingAdjustments adj;
        adj.capital_reduction_grid = {0.5, 0.2}; // not increasing
        adj.om_reduction_grid = {0.0};
        CHECK_THROWS_AS(econ::coupling_compare({{m, true}}, {m}, adj), InvalidInputError);
        adj.capital_reduction_grid = {1.2};
        CHECK_THROWS_AS(econ::coupling_compare({{m, true}}, {m}, adj), InvalidInputError);
    }

    SUBCASE("published aspect list backs the default grids") {
        const econ::CouplingAdjustments adj = presets::coupling_adjustments();
        CHECK(adj.aspects.size() == 8);
        CHECK(!adj.capital_reduction_grid.empty());
        // the documented envelope reaches 45-65% capital reduction
        CHECK(adj.capital_reduction_grid.back() >= 0.65);
    }
}

TEST_SUITE_END();
