#include "nuwind/economics.hpp"

#include "nuwind/errors.hpp"

#include <cmath>

namespace nuwind::econ {

namespace {

constexpr double kHoursPerYear = 8760.0;

struct DiscountedTotals {
    double cost = 0.0;
    double energy = 0.0;
};

DiscountedTotals discount(const CashflowLedger& ledger, double rate) {
    if (rate < 0.0 || rate >= 1.0)
        throw InvalidInputError("discount rate must lie in [0, 1)");
    DiscountedTotals t;
    for (int i = 0; i < ledger.years(); ++i) {
        const double year = i + 1.0;
        t.cost += ledger.total[i] / std::pow(1.0 + rate, year - 1.0);
        t.energy += ledger.energy_mwh[i] / std::pow(1.0 + rate, year - 0.5);
    }
    return t;
}

} // namespace

void PlantCostModel::validate() const {
    if (!(capacity_mw > 0.0))
        throw InvalidInputError("plant capacity must be positive");
    if (capacity_factor < 0.0 || capacity_factor > 1.0)
        throw InvalidInputError("capacity factor must lie in [0, 1]");
    if (capital_cost_per_kw < 0.0 || fixed_om_per_year < 0.0 || variable_om_per_mwh < 0.0 ||
        fuel_cost_per_mwh < 0.0)
        throw InvalidInputError("costs must be non-negative");
    if (discount_rate < 0.0 || discount_rate >= 1.0)
        throw InvalidInputError("discount rate must lie in [0, 1)");
    if (construction_years < 1 || lifetime_years < 1)
        throw InvalidInputError("construction and lifetime must be at least one year");
}

CashflowLedger build_ledger(const PlantCostModel& model) {
    model.validate();
    const int t_total = model.total_years();
    const double investment = 1000.0 * model.capacity_mw * model.capital_cost_per_kw;
    const double annual_energy = model.capacity_mw * model.capacity_factor * kHoursPerYear;

    CashflowLedger ledger;
    ledger.construction_years = model.construction_years;
    ledger.capital = Eigen::VectorXd::Zero(t_total);
    ledger.fixed_om = Eigen::VectorXd::Zero(t_total);
    ledger.variable_om = Eigen::VectorXd::Zero(t_total);
    ledger.fuel = Eigen::VectorXd::Zero(t_total);
    ledger.energy_mwh = Eigen::VectorXd::Zero(t_total);
    for (int i = 0; i < t_total; ++i) {
        if (i < model.construction_years) {
            ledger.capital[i] = investment / model.construction_years;
        } else {
            ledger.energy_mwh[i] = annual_energy;
            ledger.fixed_om[i] = model.fixed_om_per_year;
            ledger.variable_om[i] = annual_energy * model.variable_om_per_mwh;
            ledger.fuel[i] = annual_energy * model.fuel_cost_per_mwh;
        }
    }
    ledger.total = ledger.capital + ledger.fixed_om + ledger.variable_om + ledger.fuel;
    return ledger;
}

double lcoe(const CashflowLedger& ledger, double discount_rate) {
    const DiscountedTotals t = discount(ledger, discount_rate);
    if (!(t.energy > 0.0))
        throw InvalidInputError("LCOE undefined: discounted energy is zero");
    return t.cost / t.energy;
}

double lcoe(const PlantCostModel& model) {
    return lcoe(build_ledger(model), model.discount_rate);
}

double portfolio_lcoe(const std::vector<PlantCostModel>& plants) {
    if (plants.empty())
        throw InvalidInputError("portfolio LCOE needs at least one plant");
    DiscountedTotals sum;
    for (const auto& p : plants) {
        const DiscountedTotals t = discount(build_ledger(p), p.discount_rate);
        sum.cost += t.cost;
        sum.energy += t.energy;
    }
    if (!(sum.energy > 0.0))
        throw InvalidInputError("LCOE undefined: discounted energy is zero");
    return sum.cost / sum.energy;
}

const char* to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::variable_om: return "variable_om";
    case SweepParameter::discount_rate: return "discount_rate";
    case SweepParameter::capacity_factor: return "capacity_factor";
    default: return "capital_cost";
    }
}

std::vector<SweepPoint> sensitivity_sweep(const PlantCostModel& base, SweepParameter parameter,
                                          const std::vector<double>& grid) {
    if (grid.empty())
        throw InvalidInputError("sensitivity sweep grid is empty");
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (double value : grid) {
        PlantCostModel m = base;
        switch (parameter) {
        case SweepParameter::variable_om: m.variable_om_per_mwh = value; break;
        case SweepParameter::discount_rate: m.discount_rate = value; break;
        case SweepParameter::capacity_factor: m.capacity_factor = value; break;
        case SweepParameter::capital_cost: m.capital_cost_per_kw = value; break;
        }
        out.push_back({value, lcoe(m)});
    }
    return out;
}

double ComparisonMatrix::breakeven_capital_reduction(double om_reduction) const {
    for (const auto& cell : cells)
        if (cell.om_reduction == om_reduction && cell.lcoe_a <= cell.lcoe_b)
            return cell.capital_reduction;
    return -1.0;
}

ComparisonMatrix coupling_compare(const std::vector<CoupledPlant>& case_a,
                                  const std::vector<PlantCostModel>& case_b,
                                  const CouplingAdjustments& adjustments) {
    if (case_a.empty() || case_b.empty())
        throw InvalidInputError("both cases need at least one plant");
    auto check_grid = [](const std::vector<double>& grid, const char* what) {
        if (grid.empty())
            throw InvalidInputError(std::string(what) + " reduction grid is empty");
        for (size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] < 0.0 || grid[i] >= 1.0)
                throw InvalidInputError(std::string(what) + " reductions must lie in [0, 1)");
            if (i > 0 && !(grid[i] > grid[i - 1]))
                throw InvalidInputError(std::string(what) +
                                        " reduction grid must be strictly increasing");
        }
    };
    check_grid(adjustments.capital_reduction_grid, "capital");
    check_grid(adjustments.om_reduction_grid, "O&M");

    const double lcoe_b = portfolio_lcoe(case_b);

    ComparisonMatrix out;
    for (double om_red : adjustments.om_reduction_grid) {
        bool breakeven_found = false;
        for (double cap_red : adjustments.capital_reduction_grid) {
            std::vector<PlantCostModel> adjusted;
            adjusted.reserve(case_a.size());
            for (const auto& plant : case_a) {
                PlantCostModel m = plant.model;
                if (plant.coupled) {
                    m.capital_cost_per_kw *= 1.0 - cap_red;
                    m.fixed_om_per_year *= 1.0 - om_red;
                    m.variable_om_per_mwh *= 1.0 - om_red;
                }
                adjusted.push_back(std::move(m));
            }
            ComparisonCell cell;
            cell.capital_reduction = cap_red;
            cell.om_reduction = om_red;
            cell.lcoe_a = portfolio_lcoe(adjusted);
            cell.lcoe_b = lcoe_b;
            if (!breakeven_found && cell.lcoe_a <= cell.lcoe_b) {
                cell.breakeven = true;
                breakeven_found = true;
            }
            out.cells.push_back(cell);
        }
    }
    return out;
}

} // namespace nuwind::econ
