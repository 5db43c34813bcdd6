#pragma once

#include "molex/bounds.hpp"
#include "molex/search.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace molex {

nlohmann::json to_json(const BoundCase& c);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const DegreeCensus& d);
nlohmann::json to_json(const EdgeCensus& x);
nlohmann::json to_json(const EnumerationSummary& s);

/// CSV number with 9 significant digits.
std::string csv_number(double v);

}  // namespace molex
