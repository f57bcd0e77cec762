#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schub {

using Json = nlohmann::ordered_json;

/* Outcome of one criterion check. `holds` is the verdict; `witnesses` carry
 * the data that decided it (qualifying pairs, failing subsets, margins);
 * `assumptions` list hypotheses taken on trust from the caller (declared
 * irreducibility, completeness); `reason` is a one-line human summary and
 * `details` machine-readable intermediates. */
struct Certificate {
    std::string criterion;
    bool holds = false;
    Json witnesses = Json::array();
    std::vector<std::string> assumptions;
    std::string reason;
    Json details = Json::object();
};

}  // namespace schub
