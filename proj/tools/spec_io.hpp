#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm::io {

using json = nlohmann::ordered_json;

// {"form": [a1,a2,a3], "s": s, "jstar": [{"alpha": ["p/q","p/q"], "eps": "p/q"}, ...]}
FamilySpec spec_from_json(const json& j);
FamilySpec load_spec(const std::string& path);
json spec_to_json(const FamilySpec& spec);

// "x+yi", "x-yi", "yi", "i"; x and y decimal or p/q
std::complex<double> parse_tau(const std::string& text);
std::string tau_string(std::complex<double> tau);

json cjson(std::complex<double> z);
std::string utc_timestamp();

}  // namespace qm::io
