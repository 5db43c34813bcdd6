#include "molex/indices.hpp"

#include "molex/error.hpp"

#include <cmath>
#include <sstream>

namespace molex {

std::string_view to_string(IndexKind kind)
{
    switch (kind) {
    case IndexKind::GeneralSumConnectivity: return "chi";
    case IndexKind::GeneralPlatt: return "general-platt";
    case IndexKind::Oga: return "oga";
    case IndexKind::FirstZagreb: return "m1";
    case IndexKind::Platt: return "platt";
    case IndexKind::Harmonic: return "harmonic";
    case IndexKind::SumConnectivity: return "sum-connectivity";
    case IndexKind::Randic: return "randic";
    case IndexKind::HyperZagreb: return "hyper-zagreb";
    case IndexKind::ReformulatedZagreb: return "em1";
    }
    return "unknown";
}

namespace {

bool takes_parameter(IndexKind kind)
{
    return kind == IndexKind::GeneralSumConnectivity || kind == IndexKind::GeneralPlatt || kind == IndexKind::Oga;
}

}  // namespace

IndexSpec::IndexSpec(IndexKind kind, std::optional<double> parameter) : kind_(kind), parameter_(parameter)
{
    const std::string name(to_string(kind));
    if (!takes_parameter(kind)) {
        if (parameter)
            throw Error(ErrorCode::InvalidParameter, name + " takes no parameter");
        return;
    }
    if (!parameter)
        throw Error(ErrorCode::InvalidParameter, name + " needs a parameter");
    if (!std::isfinite(*parameter))
        throw Error(ErrorCode::InvalidParameter, name + " parameter must be finite");
    if (kind == IndexKind::Oga && *parameter <= 0)
        throw Error(ErrorCode::InvalidParameter, "oga needs k > 0");
    if (kind != IndexKind::Oga && *parameter == 0)
        throw Error(ErrorCode::InvalidParameter, name + " needs alpha != 0");
}

double IndexSpec::edge_weight(int du, int dv) const
{
    const double sum = du + dv;
    switch (kind_) {
    case IndexKind::GeneralSumConnectivity: return std::pow(sum, *parameter_);
    case IndexKind::GeneralPlatt: {
        const double shifted = sum - 2;
        if (shifted == 0) {
            if (*parameter_ < 0)
                throw Error(ErrorCode::UndefinedTerm, "general Platt term 0^alpha with alpha < 0 on a (1,1) edge");
            return 0.0;
        }
        return std::pow(shifted, *parameter_);
    }
    case IndexKind::Oga: return std::pow(2.0 * std::sqrt(static_cast<double>(du * dv)) / sum, *parameter_);
    case IndexKind::FirstZagreb: return sum;
    case IndexKind::Platt: return sum - 2;
    case IndexKind::Harmonic: return 2.0 / sum;
    case IndexKind::SumConnectivity: return 1.0 / std::sqrt(sum);
    case IndexKind::Randic: return 1.0 / std::sqrt(static_cast<double>(du * dv));
    case IndexKind::HyperZagreb: return sum * sum;
    case IndexKind::ReformulatedZagreb: return (sum - 2) * (sum - 2);
    }
    return 0.0;
}

std::string IndexSpec::name() const
{
    std::ostringstream out;
    out << to_string(kind_);
    if (parameter_)
        out << '(' << *parameter_ << ')';
    return out.str();
}

double evaluate(const MolecularGraph& g, const IndexSpec& spec)
{
    double total = 0.0;
    for (auto [u, v] : g.edges())
        total += spec.edge_weight(g.degree(u), g.degree(v));
    return total;
}

double evaluate_from_census(const EdgeCensus& census, const IndexSpec& spec)
{
    double total = 0.0;
    for (int i = 1; i <= kMaxDegree; ++i)
        for (int j = i; j <= kMaxDegree; ++j)
            if (census.x(i, j) != 0)
                total += census.x(i, j) * spec.edge_weight(i, j);
    return total;
}

std::optional<long long> evaluate_exact(const MolecularGraph& g, const IndexSpec& spec)
{
    int power = 0;
    int shift = 0;
    switch (spec.kind()) {
    case IndexKind::FirstZagreb: power = 1; break;
    case IndexKind::Platt: power = 1; shift = 2; break;
    case IndexKind::HyperZagreb: power = 2; break;
    case IndexKind::ReformulatedZagreb: power = 2; shift = 2; break;
    case IndexKind::GeneralSumConnectivity:
    case IndexKind::GeneralPlatt: {
        const double a = *spec.parameter();
        if (a != 1.0 && a != 2.0)
            return std::nullopt;
        power = static_cast<int>(a);
        shift = spec.kind() == IndexKind::GeneralPlatt ? 2 : 0;
        break;
    }
    default: return std::nullopt;
    }
    long long total = 0;
    for (auto [u, v] : g.edges()) {
        const long long s = g.degree(u) + g.degree(v) - shift;
        total += power == 1 ? s : s * s;
    }
    return total;
}

WeightTable::WeightTable(const IndexSpec& spec) : spec_(spec)
{
    for (int i = 1; i <= kMaxDegree; ++i)
        for (int j = 1; j <= kMaxDegree; ++j) {
            try {
                weight_[i][j] = spec.edge_weight(i, j);
                defined_[i][j] = true;
            } catch (const Error&) {
                defined_[i][j] = false;
            }
        }
}

double WeightTable::evaluate(const MolecularGraph& g) const
{
    double total = 0.0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const int du = g.degree(u);
        for (Vertex v : g.neighbors(u)) {
            if (v < u)
                continue;
            const int dv = g.degree(v);
            if (!defined_[du][dv])
                spec_.edge_weight(du, dv);  // throws the precise error
            total += weight_[du][dv];
        }
    }
    return total;
}

}  // namespace molex
