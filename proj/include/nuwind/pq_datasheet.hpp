#pragma once

#include "nuwind/voltage_quality.hpp"

#include <iosfwd>
#include <string>

namespace nuwind::pq {

/// Parse a turbine power-quality datasheet:
/// { "sn_mva":..., "p60_mw":..., "q60_mvar":...,
///   "flicker_coefficients": {"angles":[...], "va":[...], "values":[[...]]},
///   "switching": [ {"case":"cut_in_at_cut_in"|"cut_in_at_rated",
///                   "n10":..., "n120":...,
///                   "kf":{"angles":[...],"values":[...]},
///                   "ku":{"angles":[...],"values":[...]}} ] }
TurbinePQData load_pq_datasheet(std::istream& in, const std::string& name = {});
TurbinePQData load_pq_datasheet_file(const std::string& path);

/// Serialize a datasheet in the same schema.
std::string pq_datasheet_json(const TurbinePQData& turbine);

} // namespace nuwind::pq
