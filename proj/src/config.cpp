#include "nuwind/config.hpp"

#include "nuwind/errors.hpp"
#include "nuwind/pq_datasheet.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nuwind::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kAnalyses = {"pq",     "reliability", "aggregate",
                                            "credit", "lcoe",        "compare"};

std::string join_path(const std::string& base, const std::string& rel) {
    if (rel.empty() || rel.front() == '/' || base.empty() || base == ".")
        return rel;
    return base + "/" + rel;
}

double number_at(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(where + ": missing numeric key \"" + key + "\"");
    return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback,
                 const std::string& where) {
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number())
        throw ConfigError(where + ": key \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

std::vector<double> grid_at(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ConfigError(where + ": expected a non-empty numeric array");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number())
            throw ConfigError(where + ": expected numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

wind::TurbinePowerCurve parse_curve(const json& j, const std::string& where) {
    wind::TurbinePowerCurve c;
    c.cut_in = number_at(j, "cut_in", where);
    c.rated_speed = number_at(j, "rated_speed", where);
    c.cut_out = number_at(j, "cut_out", where);
    c.rated_power = number_at(j, "rated_power", where);
    c.hub_height = number_at(j, "hub_height", where);
    wind::validate(c);
    return c;
}

econ::PlantCostModel parse_cost_model(const json& j, const std::string& name,
                                      const std::string& where) {
    econ::PlantCostModel m;
    m.name = name;
    m.capacity_mw = number_at(j, "capacity_mw", where);
    m.capacity_factor = number_at(j, "capacity_factor", where);
    m.capital_cost_per_kw = number_at(j, "capital_cost_per_kw", where);
    m.fixed_om_per_year = number_or(j, "fixed_om_per_year", 0.0, where);
    m.variable_om_per_mwh = number_or(j, "variable_om_per_mwh", 0.0, where);
    m.fuel_cost_per_mwh = number_or(j, "fuel_cost_per_mwh", 0.0, where);
    m.discount_rate = number_or(j, "discount_rate", 0.08, where);
    m.construction_years = static_cast<int>(number_or(j, "construction_years", 1, where));
    m.lifetime_years = static_cast<int>(number_or(j, "lifetime_years", 20, where));
    m.validate();
    return m;
}

wind::WindSpeedTable resolve_wind_table(const std::string& ref, double reference_height,
                                        const std::string& base_dir, const std::string& where) {
    if (ref == "builtin:zafarana")
        return presets::zafarana_wind_table();
    if (ref == "builtin:galala")
        return presets::galala_wind_table();
    if (ref.rfind("builtin:", 0) == 0)
        throw ConfigError(where + ": unknown builtin wind table \"" + ref + "\"");
    return wind::load_wind_table(join_path(base_dir, ref), reference_height);
}

pq::TurbinePQData resolve_pq_turbine(const std::string& ref, const std::string& base_dir,
                                     const std::string& where) {
    if (ref == "builtin:type_a")
        return presets::type_a_turbine();
    if (ref == "builtin:type_d")
        return presets::type_d_turbine();
    if (ref.rfind("builtin:", 0) == 0)
        throw ConfigError(where + ": unknown builtin pq turbine \"" + ref + "\"");
    return pq::load_pq_datasheet_file(join_path(base_dir, ref));
}

markov::MarkovModel parse_markov_model(const json& j, const std::string& where) {
    markov::MarkovModel m;
    m.name = j.value("name", std::string("custom"));
    if (!j.contains("generator") || !j.at("generator").is_array())
        throw ConfigError(where + ": model needs a \"generator\" matrix");
    const auto& rows = j.at("generator");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    m.generator.resize(n, n);
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
            throw ConfigError(where + ": generator must be square");
        Eigen::Index c = 0;
        for (const auto& x : row)
            m.generator(r, c++) = x.get<double>();
        ++r;
    }
    if (j.contains("labels"))
        for (const auto& l : j.at("labels"))
            m.state_labels.push_back(l.get<std::string>());
    if (m.state_labels.empty())
        for (Eigen::Index i = 0; i < n; ++i)
            m.state_labels.push_back("S" + std::to_string(i));
    if (!j.contains("success") || !j.at("success").is_array())
        throw ConfigError(where + ": model needs a \"success\" state list");
    for (const auto& s : j.at("success"))
        m.success_states.push_back(s.get<int>());
    m.initial_distribution = Eigen::VectorXd::Zero(n);
    if (j.contains("initial")) {
        const auto grid = grid_at(j.at("initial"), where + ".initial");
        if (static_cast<Eigen::Index>(grid.size()) != n)
            throw ConfigError(where + ": initial distribution length mismatch");
        for (Eigen::Index i = 0; i < n; ++i)
            m.initial_distribution[i] = grid[static_cast<size_t>(i)];
    } else {
        m.initial_distribution[0] = 1.0;
    }
    return m;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"table-3.5-scenarios", "dabaa-zafarana", "case-ab"};
}

RunConfig preset_config(const std::string& name) {
    RunConfig cfg;
    cfg.name = name;
    if (name == "table-3.5-scenarios") {
        cfg.analyses = {"pq"};
        cfg.pq_scenarios = presets::pq_scenarios();
        return cfg;
    }
    if (name == "dabaa-zafarana") {
        cfg.analyses = {"reliability", "aggregate"};
        RunConfig::Reliability rel;
        rel.diesel = presets::diesel_rates();
        rel.wind_unit = presets::dabaa_wind_rates();
        rel.weibull = presets::dabaa_weibull();
        rel.curve = presets::dabaa_reliability_curve();
        rel.t_end = 100.0;
        rel.points = 401;
        const presets::MinOutputCase moc = presets::dabaa_min_output_case();
        rel.min_output_wf_mw = moc.wf_capacity_mw;
        rel.min_output_min_mw = moc.min_mw;
        cfg.reliability = rel;
        for (int s = 1; s <= 3; ++s) {
            cfg.portfolios.push_back(presets::case_a(s));
            cfg.portfolios.push_back(presets::case_b(s));
        }
        return cfg;
    }
    if (name == "case-ab") {
        cfg.analyses = {"lcoe", "compare"};
        RunConfig::Lcoe lcoe;
        lcoe.model = presets::median_cost_model();
        lcoe.sweeps = {
            {econ::SweepParameter::variable_om, {5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0}},
            {econ::SweepParameter::discount_rate, {0.0, 0.02, 0.04, 0.06, 0.08, 0.10, 0.12}},
            {econ::SweepParameter::capacity_factor, {0.15, 0.20, 0.25, 0.30, 0.35, 0.40}},
            {econ::SweepParameter::capital_cost, {1845.0, 2100.0, 2348.64, 2800.0, 3300.0, 3716.22}},
        };
        cfg.lcoe = lcoe;
        RunConfig::Compare cmp;
        cmp.adjustments = presets::coupling_adjustments();
        for (int s = 1; s <= 3; ++s)
            cmp.comparisons.push_back(presets::coupling_comparison(s));
        cfg.compare = cmp;
        return cfg;
    }
    throw ConfigError("unknown preset \"" + name + "\"");
}

RunConfig load_config(std::istream& in, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");

    static const std::vector<std::string> known = {
        "name",         "output_dir", "analyses",     "sites",   "turbines",
        "grid_points",  "pq_turbines", "pq_scenarios", "d_ss_limit", "pq_percent", "markov",
        "portfolios",   "peak_windows", "credit",     "cost_models", "lcoe",
        "comparisons"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("config: unknown key \"" + key + "\"");
    }

    RunConfig cfg;
    cfg.name = j.value("name", std::string("config"));
    cfg.output_dir = j.value("output_dir", std::string("out"));

    if (j.contains("analyses")) {
        for (const auto& a : j.at("analyses")) {
            const std::string name = a.get<std::string>();
            if (std::find(kAnalyses.begin(), kAnalyses.end(), name) == kAnalyses.end())
                throw ConfigError("config: unknown analysis \"" + name + "\"");
            cfg.analyses.push_back(name);
        }
    }
    auto selected = [&](const std::string& a) {
        return std::find(cfg.analyses.begin(), cfg.analyses.end(), a) != cfg.analyses.end();
    };

    // named sections
    std::map<std::string, wind::SiteProfile> sites;
    if (j.contains("sites")) {
        for (const auto& [name, body] : j.at("sites").items()) {
            const std::string where = "site \"" + name + "\"";
            if (!body.contains("wind_table"))
                throw ConfigError(where + ": missing \"wind_table\"");
            wind::SiteProfile site;
            site.wind_table =
                resolve_wind_table(body.at("wind_table").get<std::string>(),
                                   number_or(body, "reference_height", 24.5, where),
                                   base_dir, where);
            site.shear_exponent =
                number_or(body, "shear_exponent", wind::kDefaultShearExponent, where);
            if (body.contains("weibull")) {
                wind::WeibullParams w{number_at(body.at("weibull"), "shape", where),
                                      number_at(body.at("weibull"), "scale", where)};
                wind::validate(w);
                site.weibull = w;
            }
            sites.emplace(name, std::move(site));
        }
    }

    std::map<std::string, wind::TurbinePowerCurve> turbines;
    if (j.contains("turbines"))
        for (const auto& [name, body] : j.at("turbines").items())
            turbines.emplace(name, parse_curve(body, "turbine \"" + name + "\""));

    std::map<std::string, pq::GridPoint> grid_points;
    if (j.contains("grid_points")) {
        for (const auto& [name, body] : j.at("grid_points").items()) {
            const std::string where = "grid point \"" + name + "\"";
            pq::GridPoint g;
            g.nominal_voltage_kv = number_or(body, "nominal_voltage_kv", 0.0, where);
            g.short_circuit_power_mva = number_at(body, "short_circuit_power_mva", where);
            g.impedance_angle_deg = number_at(body, "impedance_angle_deg", where);
            g.validate();
            grid_points.emplace(name, g);
        }
    }

    std::map<std::string, pq::TurbinePQData> pq_turbines;
    if (j.contains("pq_turbines")) {
        for (const auto& [name, body] : j.at("pq_turbines").items()) {
            pq::TurbinePQData t = resolve_pq_turbine(body.get<std::string>(), base_dir,
                                                     "pq turbine \"" + name + "\"");
            t.type_name = name;
            pq_turbines.emplace(name, std::move(t));
        }
    }

    if (j.contains("pq_scenarios")) {
        int index = 0;
        for (const auto& body : j.at("pq_scenarios")) {
            const std::string where = "pq scenario #" + std::to_string(++index);
            presets::PQScenario s;
            s.name = body.value("name", "pq-" + std::to_string(index));
            const std::string turbine = body.value("turbine", std::string());
            auto t_it = pq_turbines.find(turbine);
            if (t_it == pq_turbines.end())
                throw ConfigError(where + ": unknown pq turbine \"" + turbine + "\"");
            s.turbine = t_it->second;
            const std::string grid = body.value("grid", std::string());
            auto g_it = grid_points.find(grid);
            if (g_it == grid_points.end())
                throw ConfigError(where + ": unknown grid point \"" + grid + "\"");
            s.grid = g_it->second;
            s.annual_mean_speed = number_at(body, "v_a", where);
            s.n_turbines = static_cast<int>(number_at(body, "n_turbines", where));
            cfg.pq_scenarios.push_back(std::move(s));
        }
    }
    cfg.d_ss_limit = number_or(j, "d_ss_limit", 0.02, "config");
    if (j.contains("pq_percent")) {
        if (!j.at("pq_percent").is_boolean())
            throw ConfigError("config: \"pq_percent\" must be a boolean");
        cfg.pq_percent = j.at("pq_percent").get<bool>();
    }

    if (j.contains("markov")) {
        const json& mk = j.at("markov");
        RunConfig::Reliability rel;
        if (mk.contains("diesel")) {
            const json& d = mk.at("diesel");
            rel.diesel = {number_at(d, "failure_rate", "markov.diesel"),
                          number_at(d, "repair_rate", "markov.diesel"),
                          number_or(d, "common_cause_rate", 0.0, "markov.diesel")};
        }
        if (mk.contains("wind_unit")) {
            const json& wu = mk.at("wind_unit");
            rel.wind_unit = {number_at(wu, "failure_rate", "markov.wind_unit"),
                             number_at(wu, "repair_rate", "markov.wind_unit")};
        }
        if (mk.contains("weibull")) {
            rel.weibull = {number_at(mk.at("weibull"), "shape", "markov.weibull"),
                           number_at(mk.at("weibull"), "scale", "markov.weibull")};
            wind::validate(rel.weibull);
        }
        if (mk.contains("turbine")) {
            const std::string name = mk.at("turbine").get<std::string>();
            auto it = turbines.find(name);
            if (it == turbines.end())
                throw ConfigError("markov: unknown turbine \"" + name + "\"");
            rel.curve = it->second;
        }
        rel.t_end = number_or(mk, "t_end", 100.0, "markov");
        rel.points = static_cast<int>(number_or(mk, "points", 401, "markov"));
        if (mk.contains("min_output")) {
            rel.min_output_wf_mw =
                number_at(mk.at("min_output"), "wf_capacity_mw", "markov.min_output");
            rel.min_output_min_mw = number_at(mk.at("min_output"), "min_mw", "markov.min_output");
        }
        if (mk.contains("models"))
            for (const auto& body : mk.at("models"))
                rel.extra_models.push_back(parse_markov_model(body, "markov.models"));
        cfg.reliability = rel;
    } else if (selected("reliability")) {
        throw ConfigError("analysis \"reliability\" selected but no \"markov\" section given");
    }

    if (j.contains("portfolios")) {
        for (const auto& [name, body] : j.at("portfolios").items()) {
            const std::string where = "portfolio \"" + name + "\"";
            agg::PortfolioCase pc;
            pc.label = name;
            if (!body.contains("components") || !body.at("components").is_array() ||
                body.at("components").empty())
                throw ConfigError(where + ": needs a non-empty \"components\" array");
            for (const auto& comp : body.at("components")) {
                const std::string site = comp.value("site", std::string());
                auto s_it = sites.find(site);
                if (s_it == sites.end())
                    throw ConfigError(where + ": unknown site \"" + site + "\"");
                const std::string turbine = comp.value("turbine", std::string());
                auto t_it = turbines.find(turbine);
                if (t_it == turbines.end())
                    throw ConfigError(where + ": unknown turbine \"" + turbine + "\"");
                pc.components.push_back(
                    {s_it->second, t_it->second, number_at(comp, "installed_mw", where)});
            }
            cfg.portfolios.push_back(std::move(pc));
        }
    } else if (selected("aggregate")) {
        throw ConfigError("analysis \"aggregate\" selected but no \"portfolios\" section given");
    }

    std::map<std::string, credit::PeakWindow> windows;
    windows.emplace("egypt", credit::egypt_peak_window());
    windows.emplace("pjm", credit::pjm_native_window());
    if (j.contains("peak_windows")) {
        for (const auto& [name, body] : j.at("peak_windows").items()) {
            credit::PeakWindow w;
            for (const auto& m : body.at("months"))
                w.months.insert(m.get<int>());
            for (const auto& h : body.at("hours"))
                w.hours.insert(h.get<int>());
            w.validate();
            windows[name] = w;
        }
    }

    if (j.contains("credit")) {
        const json& cr = j.at("credit");
        RunConfig::Credit credit_section;
        const std::string window = cr.value("window", std::string("egypt"));
        auto w_it = windows.find(window);
        if (w_it == windows.end())
            throw ConfigError("credit: unknown peak window \"" + window + "\"");
        credit_section.window = w_it->second;
        if (!cr.contains("histories") || cr.at("histories").empty())
            throw ConfigError("credit: needs a \"histories\" section");
        for (const auto& [name, body] : cr.at("histories").items()) {
            const std::string where = "credit history \"" + name + "\"";
            credit::GenerationHistory history;
            if (body.contains("hourly_csv")) {
                const std::string path =
                    join_path(base_dir, body.at("hourly_csv").get<std::string>());
                std::ifstream in_file(path);
                if (!in_file)
                    throw ConfigError(where + ": cannot open " + path);
                history = credit::load_hourly_history(in_file);
            } else if (body.contains("climatology_site")) {
                const std::string site = body.at("climatology_site").get<std::string>();
                auto s_it = sites.find(site);
                if (s_it == sites.end())
                    throw ConfigError(where + ": unknown site \"" + site + "\"");
                const std::string turbine = body.value("turbine", std::string());
                auto t_it = turbines.find(turbine);
                if (t_it == turbines.end())
                    throw ConfigError(where + ": unknown turbine \"" + turbine + "\"");
                const agg::GenerationSeries series =
                    agg::series_from_site(s_it->second, t_it->second);
                Eigen::Matrix<double, 12, 24> clim;
                for (int m = 1; m <= 12; ++m)
                    for (int h = 0; h < 24; ++h)
                        clim(m - 1, h) = series.values[agg::GenerationSeries::index_of(m, h)];
                const int base_year = static_cast<int>(number_or(body, "year", 1, where));
                const int years = static_cast<int>(number_or(body, "repeat_years", 1, where));
                for (int y = 0; y < years; ++y)
                    history.years.push_back({base_year + y, clim});
            } else {
                throw ConfigError(where + ": needs \"hourly_csv\" or \"climatology_site\"");
            }
            credit_section.histories.emplace_back(name, std::move(history));
        }
        cfg.credit = credit_section;
    } else if (selected("credit")) {
        throw ConfigError("analysis \"credit\" selected but no \"credit\" section given");
    }

    std::map<std::string, econ::PlantCostModel> cost_models;
    if (j.contains("cost_models"))
        for (const auto& [name, body] : j.at("cost_models").items())
            cost_models.emplace(name,
                                parse_cost_model(body, name, "cost model \"" + name + "\""));

    if (j.contains("lcoe")) {
        const json& lc = j.at("lcoe");
        RunConfig::Lcoe lcoe_section;
        const std::string model = lc.value("model", std::string());
        auto m_it = cost_models.find(model);
        if (m_it == cost_models.end())
            throw ConfigError("lcoe: unknown cost model \"" + model + "\"");
        lcoe_section.model = m_it->second;
        if (lc.contains("sweeps")) {
            for (const auto& [param, grid] : lc.at("sweeps").items()) {
                econ::SweepParameter p;
                if (param == "variable_om")
                    p = econ::SweepParameter::variable_om;
                else if (param == "discount_rate")
                    p = econ::SweepParameter::discount_rate;
                else if (param == "capacity_factor")
                    p = econ::SweepParameter::capacity_factor;
                else if (param == "capital_cost")
                    p = econ::SweepParameter::capital_cost;
                else
                    throw ConfigError("lcoe: unknown sweep parameter \"" + param + "\"");
                lcoe_section.sweeps.emplace_back(p, grid_at(grid, "lcoe.sweeps." + param));
            }
        }
        cfg.lcoe = lcoe_section;
    } else if (selected("lcoe")) {
        throw ConfigError("analysis \"lcoe\" selected but no \"lcoe\" section given");
    }

    if (j.contains("comparisons")) {
        const json& cmp = j.at("comparisons");
        RunConfig::Compare compare_section;
        compare_section.adjustments = presets::coupling_adjustments();
        if (cmp.contains("capital_reduction_grid"))
            compare_section.adjustments.capital_reduction_grid =
                grid_at(cmp.at("capital_reduction_grid"), "comparisons.capital_reduction_grid");
        if (cmp.contains("om_reduction_grid"))
            compare_section.adjustments.om_reduction_grid =
                grid_at(cmp.at("om_reduction_grid"), "comparisons.om_reduction_grid");
        if (cmp.contains("preset_scenarios")) {
            for (const auto& s : cmp.at("preset_scenarios"))
                compare_section.comparisons.push_back(
                    presets::coupling_comparison(s.get<int>()));
        }
        if (cmp.contains("cases")) {
            int index = 0;
            for (const auto& body : cmp.at("cases")) {
                const std::string where = "comparison #" + std::to_string(++index);
                presets::CouplingComparison comparison;
                comparison.scenario = index;
                for (const auto& pa : body.at("case_a")) {
                    const std::string model = pa.value("model", std::string());
                    auto it = cost_models.find(model);
                    if (it == cost_models.end())
                        throw ConfigError(where + ": unknown cost model \"" + model + "\"");
                    comparison.case_a.push_back({it->second, pa.value("coupled", false)});
                }
                for (const auto& pb : body.at("case_b")) {
                    const std::string model = pb.get<std::string>();
                    auto it = cost_models.find(model);
                    if (it == cost_models.end())
                        throw ConfigError(where + ": unknown cost model \"" + model + "\"");
                    comparison.case_b.push_back(it->second);
                }
                compare_section.comparisons.push_back(std::move(comparison));
            }
        }
        if (compare_section.comparisons.empty())
            throw ConfigError("comparisons: needs \"preset_scenarios\" or \"cases\"");
        cfg.compare = compare_section;
    } else if (selected("compare")) {
        throw ConfigError("analysis \"compare\" selected but no \"comparisons\" section given");
    }

    if (selected("pq") && cfg.pq_scenarios.empty())
        throw ConfigError("analysis \"pq\" selected but no \"pq_scenarios\" given");

    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::string base_dir = ".";
    if (const auto slash = path.find_last_of('/'); slash != std::string::npos)
        base_dir = path.substr(0, slash);
    RunConfig cfg = load_config(in, base_dir);
    if (cfg.name == "config")
        cfg.name = path;
    return cfg;
}

bool RunReport::all_ok() const {
    for (const auto& a : analyses)
        if (!a.ok)
            return false;
    return true;
}

std::vector<std::string> RunReport::all_outputs() const {
    std::vector<std::string> out;
    for (const auto& a : analyses)
        out.insert(out.end(), a.output_files.begin(), a.output_files.end());
    return out;
}

std::string report_text(const RunReport& report) {
    std::ostringstream os;
    os << "run: " << report.config_name << "\n";
    for (const auto& a : report.analyses) {
        os << "  [" << (a.ok ? "ok" : "FAILED") << "] " << a.analysis;
        if (!a.message.empty())
            os << ": " << a.message;
        os << "\n";
        for (const auto& f : a.output_files)
            os << "    wrote " << f << "\n";
        for (const auto& w : a.warnings)
            os << "    warning: " << w << "\n";
    }
    return os.str();
}

} // namespace nuwind::cli
