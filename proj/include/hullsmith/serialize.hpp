#pragma once

#include <string>

#include <json.hpp>

#include "hullsmith/eaqecc.hpp"

namespace hullsmith {

using json = nlohmann::json;

/// Field descriptor {"p", "m", "modulus"}; coefficients low degree first;
/// elements travel as integer reps everywhere.
json to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const GrsCode& c);
GrsCode grs_from_json(const json& j);

json to_json(const LinearCode& c);
LinearCode linear_from_json(const json& j);

json to_json(const RuleOutcome& o);

json to_json(const EaqeccParams& p);

/// Either a GRS or a plain linear code descriptor, detected by shape.
struct AnyCode {
    std::optional<GrsCode> grs;
    std::optional<LinearCode> linear;

    LinearCode as_linear_code() const {
        return grs ? hullsmith::as_linear(*grs) : *linear;
    }
};
AnyCode code_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// FNV-1a over the canonical dump; keys the content-addressed catalog.
std::string content_hash(const json& j);

} // namespace hullsmith
