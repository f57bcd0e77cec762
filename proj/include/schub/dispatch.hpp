#pragma once

#include <string>

#include "schub/json_io.hpp"

namespace schub {

/* Runs one named criterion against a JSON input object (the --inputs file
 * contents) and returns the certificate. Unknown keys are ignored. */
Certificate dispatch_check(const std::string& criterion, const Json& inputs);

/* Replays every .json file in dir (sorted by name). Files with a top-level
 * "expect" object are criterion inputs checked against the expected verdicts;
 * files with a "cases" array hold individual expectation entries. Returns the
 * report; ok is false on any mismatch. */
struct FixtureReport {
    bool ok = true;
    Json report = Json::array();
};

FixtureReport run_fixtures(const std::string& dir);

}  // namespace schub
