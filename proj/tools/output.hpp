#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace heis::cli {

// Every command produces a list of flat records sharing the same keys.
// Scalar values are integers (strings past 64 bits), booleans or strings;
// lists are JSON arrays.
using Record = nlohmann::ordered_json;
using Records = std::vector<Record>;

enum class Format { json, csv, text };
Format parse_format(std::string_view name);

// json: an array of objects. csv: RFC 4180 with a header row.
// text: tab separated with a '#'-prefixed header row.
std::string emit(const Records& rows, Format f);
Records parse(std::string_view text, Format f);

}  // namespace heis::cli
