#include "molex/report.hpp"

#include <array>

namespace molex {

nlohmann::json to_json(const BoundCase& c)
{
    return {{"variant", to_string(c.variant)},
            {"parameter", c.parameter},
            {"residue", c.residue},
            {"regime", to_string(c.regime)},
            {"direction", to_string(c.direction)}};
}

nlohmann::json to_json(const BoundReport& r)
{
    return {{"graph6", r.graph6},
            {"n", r.n},
            {"m", r.m},
            {"bound", to_string(r.kind)},
            {"case", to_json(r.bound_case)},
            {"index", r.index},
            {"index_value", r.index_value},
            {"bound_value", r.bound_value},
            {"gap", r.gap},
            {"equality", r.equality},
            {"extremal_condition_met", r.extremal_condition_met}};
}

nlohmann::json to_json(const DegreeCensus& d)
{
    return {{"n0", d.n(0)}, {"n1", d.n(1)}, {"n2", d.n(2)}, {"n3", d.n(3)}, {"n4", d.n(4)}};
}

nlohmann::json to_json(const EdgeCensus& x)
{
    nlohmann::json out = nlohmann::json::object();
    for (int i = 1; i <= kMaxDegree; ++i)
        for (int j = i; j <= kMaxDegree; ++j)
            out["x" + std::to_string(i) + std::to_string(j)] = x.x(i, j);
    return out;
}

nlohmann::json to_json(const EnumerationSummary& s)
{
    nlohmann::json holders = nlohmann::json::array();
    for (const auto& h : s.equality_holders)
        holders.push_back({{"canonical_key", h.canonical_key}, {"degrees", to_json(h.degrees)},
                           {"edges", to_json(h.edges)}});
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& r : s.violations)
        violations.push_back(to_json(r));
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& r : s.mismatches)
        mismatches.push_back(to_json(r));
    return {{"n", s.n},
            {"m", s.m},
            {"bound", to_string(s.kind)},
            {"case", to_json(s.bound_case)},
            {"bound_value", s.bound_value},
            {"graph_count", s.graph_count},
            {"min_index", s.min_index},
            {"max_index", s.max_index},
            {"condition_count", s.condition_count},
            {"attained", s.attained()},
            {"equality_holders", holders},
            {"violation_count", s.violation_count},
            {"mismatch_count", s.mismatch_count},
            {"violations", violations},
            {"mismatches", mismatches}};
}

std::string csv_number(double v)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.9g", v);
    return buf.data();
}

}  // namespace molex
