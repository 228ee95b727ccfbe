#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ybe/identities.hpp"
#include "ybe/reductions.hpp"

namespace ybe {

using json = nlohmann::ordered_json;

// Complex numbers are [re, im]; a bare number is read as real.
json cplx_to_json(cplx z);
cplx cplx_from_json(const json& j, const std::string& field);

json to_json(const IdentityCase& c);
json to_json(const VerificationReport& r);
json to_json(const LimitExperiment& e);
json to_json(const ConvergenceTable& t);

// Strict readers: unknown keys and wrong types raise ConfigError with the
// JSON pointer of the offending field. `lines` maps pointers to source lines
// (see json_key_lines) and may be empty.
using LineMap = std::map<std::string, int>;
IdentityCase case_from_json(const json& j, const std::string& path, const LineMap& lines,
                            IdentityCase base = {});
VerificationReport report_from_json(const json& j, const std::string& path, const LineMap& lines = {});
LimitExperiment limit_from_json(const json& j, const std::string& path, const LineMap& lines,
                                LimitExperiment base);
ConvergenceTable table_from_json(const json& j, const std::string& path, const LineMap& lines = {});

// Line of every object key, keyed by JSON pointer ("/cases/0/kind").
// Assumes text already parsed as valid JSON.
LineMap json_key_lines(std::string_view text);
// line of the pointer or of its closest ancestor that has one; 0 if none
int line_of(const LineMap& lines, const std::string& pointer);

// temp file in the same directory, then rename
void atomic_write(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Human readable breakdown of one report.
std::string explain(const VerificationReport& r);

}  // namespace ybe
