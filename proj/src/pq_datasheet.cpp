#include "nuwind/pq_datasheet.hpp"

#include "nuwind/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>

namespace nuwind::pq {

namespace {

using nlohmann::json;

Eigen::VectorXd to_vector(const json& arr, const std::string& key) {
    if (!arr.is_array() || arr.empty())
        throw ParseError("pq datasheet: \"" + key + "\" must be a non-empty array");
    Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
    Eigen::Index i = 0;
    for (const auto& x : arr) {
        if (!x.is_number())
            throw ParseError("pq datasheet: \"" + key + "\" contains a non-number");
        v[i++] = x.get<double>();
    }
    return v;
}

AngleTable to_angle_table(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains("angles") || !obj.contains("values"))
        throw ParseError("pq datasheet: \"" + key + "\" needs \"angles\" and \"values\"");
    AngleTable t;
    t.angles_deg = to_vector(obj.at("angles"), key + ".angles");
    t.values = to_vector(obj.at("values"), key + ".values");
    if (t.values.size() != t.angles_deg.size())
        throw ParseError("pq datasheet: \"" + key + "\" angle and value counts differ");
    return t;
}

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ParseError("pq datasheet: missing numeric key \"" + key + "\"");
    return j.at(key).get<double>();
}

} // namespace

TurbinePQData load_pq_datasheet(std::istream& in, const std::string& name) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("pq datasheet: ") + e.what());
    }

    TurbinePQData t;
    t.type_name = name.empty() ? j.value("name", std::string()) : name;
    t.rated_apparent_power_mva = require_number(j, "sn_mva");
    t.peak_active_power_mw = require_number(j, "p60_mw");
    t.peak_reactive_power_mvar = require_number(j, "q60_mvar");

    if (!j.contains("flicker_coefficients"))
        throw ParseError("pq datasheet: missing \"flicker_coefficients\"");
    const json& fc = j.at("flicker_coefficients");
    t.flicker.angles_deg = to_vector(fc.at("angles"), "flicker_coefficients.angles");
    t.flicker.mean_speeds = to_vector(fc.at("va"), "flicker_coefficients.va");
    if (!fc.contains("values") || !fc.at("values").is_array())
        throw ParseError("pq datasheet: flicker_coefficients.values must be an array of rows");
    const json& rows = fc.at("values");
    if (static_cast<Eigen::Index>(rows.size()) != t.flicker.mean_speeds.size())
        throw ParseError("pq datasheet: flicker_coefficients.values row count must match va");
    t.flicker.values.resize(t.flicker.mean_speeds.size(), t.flicker.angles_deg.size());
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        const Eigen::VectorXd v = to_vector(row, "flicker_coefficients.values");
        if (v.size() != t.flicker.angles_deg.size())
            throw ParseError("pq datasheet: flicker_coefficients.values row width must match angles");
        t.flicker.values.row(r++) = v.transpose();
    }

    if (!j.contains("switching") || !j.at("switching").is_array())
        throw ParseError("pq datasheet: missing \"switching\" array");
    for (const auto& sw : j.at("switching")) {
        SwitchingCase c;
        const std::string kind = sw.value("case", std::string());
        if (kind == "cut_in_at_cut_in")
            c.kind = SwitchingKind::cut_in_at_cut_in;
        else if (kind == "cut_in_at_rated")
            c.kind = SwitchingKind::cut_in_at_rated;
        else
            throw ParseError("pq datasheet: switching case must be \"cut_in_at_cut_in\" or "
                             "\"cut_in_at_rated\", got \"" + kind + "\"");
        c.n10 = static_cast<int>(require_number(sw, "n10"));
        c.n120 = static_cast<int>(require_number(sw, "n120"));
        c.flicker_step = to_angle_table(sw.at("kf"), "kf");
        c.voltage_change = to_angle_table(sw.at("ku"), "ku");
        t.switching.push_back(std::move(c));
    }

    t.validate();
    return t;
}

TurbinePQData load_pq_datasheet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open pq datasheet: " + path);
    TurbinePQData t = load_pq_datasheet(in);
    if (t.type_name.empty())
        t.type_name = path;
    return t;
}

std::string pq_datasheet_json(const TurbinePQData& turbine) {
    json j;
    j["name"] = turbine.type_name;
    j["sn_mva"] = turbine.rated_apparent_power_mva;
    j["p60_mw"] = turbine.peak_active_power_mw;
    j["q60_mvar"] = turbine.peak_reactive_power_mvar;

    auto vector_json = [](const Eigen::VectorXd& v) {
        json arr = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            arr.push_back(v[i]);
        return arr;
    };

    j["flicker_coefficients"]["angles"] = vector_json(turbine.flicker.angles_deg);
    j["flicker_coefficients"]["va"] = vector_json(turbine.flicker.mean_speeds);
    json rows = json::array();
    for (Eigen::Index r = 0; r < turbine.flicker.values.rows(); ++r)
        rows.push_back(vector_json(turbine.flicker.values.row(r).transpose()));
    j["flicker_coefficients"]["values"] = rows;

    j["switching"] = json::array();
    for (const auto& sw : turbine.switching) {
        json c;
        c["case"] = to_string(sw.kind);
        c["n10"] = sw.n10;
        c["n120"] = sw.n120;
        c["kf"]["angles"] = vector_json(sw.flicker_step.angles_deg);
        c["kf"]["values"] = vector_json(sw.flicker_step.values);
        c["ku"]["angles"] = vector_json(sw.voltage_change.angles_deg);
        c["ku"]["values"] = vector_json(sw.voltage_change.values);
        j["switching"].push_back(c);
    }
    return j.dump(2) + "\n";
}

} // namespace nuwind::pq
