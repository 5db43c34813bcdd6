#include "molex/reduction.hpp"

#include "molex/error.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace molex {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::Chi: return "chi";
    case Variant::Platt: return "platt";
    case Variant::Oga: return "oga";
    }
    return "unknown";
}

IndexSpec index_for(Variant v, double parameter)
{
    switch (v) {
    case Variant::Chi: return IndexSpec::general_sum_connectivity(parameter);
    case Variant::Platt: return IndexSpec::general_platt(parameter);
    case Variant::Oga: return IndexSpec::oga(parameter);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown variant");
}

int reduced_index(DegreePair pair)
{
    if (pair.i > pair.j)
        std::swap(pair.i, pair.j);
    for (std::size_t k = 0; k < kReducedPairs.size(); ++k)
        if (kReducedPairs[k] == pair)
            return static_cast<int>(k);
    throw Error(ErrorCode::UnknownPair,
                "(" + std::to_string(pair.i) + "," + std::to_string(pair.j) + ") is not a reduced pair");
}

namespace {

// Theta and Theta' share one shape; they differ only in the bases, which are
// the edge sums (Chi) or the edge sums minus two (Platt).
std::array<double, 7> theta(double a, int shift)
{
    auto p = [&](int s) { return std::pow(static_cast<double>(s - shift), a); };
    return {
        p(3) - 4.0 / 3.0 * p(5) + 1.0 / 3.0 * p(8),
        p(4) - 10.0 / 9.0 * p(5) + 1.0 / 9.0 * p(8),
        p(4) - 2.0 / 3.0 * p(5) - 1.0 / 3.0 * p(8),
        5.0 / 9.0 * (p(5) - p(8)),
        p(6) - 1.0 / 3.0 * p(5) - 2.0 / 3.0 * p(8),
        p(6) - 2.0 / 9.0 * p(5) - 7.0 / 9.0 * p(8),
        p(7) - 1.0 / 9.0 * p(5) - 8.0 / 9.0 * p(8),
    };
}

std::array<double, 7> phi(double k)
{
    const double q = std::pow(0.8, k);
    const double r12 = std::pow(2.0 * std::sqrt(2.0) / 3.0, k);
    return {
        r12 - 4.0 / 3.0 * q + 1.0 / 3.0,
        std::pow(std::sqrt(3.0) / 2.0, k) - 10.0 / 9.0 * q + 1.0 / 9.0,
        2.0 / 3.0 * (1.0 - q),
        std::pow(2.0 * std::sqrt(6.0) / 5.0, k) - 4.0 / 9.0 * q - 5.0 / 9.0,
        r12 - 1.0 / 3.0 * q - 2.0 / 3.0,
        2.0 / 9.0 * (1.0 - q),
        std::pow(4.0 * std::sqrt(3.0) / 7.0, k) - 1.0 / 9.0 * q - 8.0 / 9.0,
    };
}

std::array<double, 7> coefficients(Variant variant, double p)
{
    switch (variant) {
    case Variant::Chi: return theta(p, 0);
    case Variant::Platt: return theta(p, 2);
    case Variant::Oga: return phi(p);
    }
    return {};
}

}  // namespace

double coefficient(Variant variant, DegreePair pair, double p)
{
    return coefficients(variant, p)[reduced_index(pair)];
}

CoefficientTable CoefficientTable::build(Variant variant, double p)
{
    return {variant, p, coefficients(variant, p)};
}

EliminatedCounts solve_x14_x44(long long n, long long m, const EdgeCensus& partial)
{
    auto x = [&](int i, int j) { return Rational(partial.x(i, j)); };
    const Rational x14 = Rational(4 * n - 2 * m, 3) - Rational(4, 3) * x(1, 2) - Rational(10, 9) * x(1, 3) -
                         Rational(2, 3) * x(2, 2) - Rational(4, 9) * x(2, 3) - Rational(1, 3) * x(2, 4) -
                         Rational(2, 9) * x(3, 3) - Rational(1, 9) * x(3, 4);
    const Rational x44 = Rational(-4 * n + 5 * m, 3) + Rational(1, 3) * x(1, 2) + Rational(1, 9) * x(1, 3) -
                         Rational(1, 3) * x(2, 2) - Rational(5, 9) * x(2, 3) - Rational(2, 3) * x(2, 4) -
                         Rational(7, 9) * x(3, 3) - Rational(8, 9) * x(3, 4);
    return {x14, x44};
}

double leading_term(Variant variant, double p, long long n, long long m)
{
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    switch (variant) {
    case Variant::Chi: {
        const double a = std::pow(5.0, p), b = std::pow(8.0, p);
        return 4.0 / 3.0 * (a - b) * dn - 1.0 / 3.0 * (2.0 * a - 5.0 * b) * dm;
    }
    case Variant::Platt: {
        const double a = std::pow(3.0, p), b = std::pow(6.0, p);
        return 4.0 / 3.0 * (a - b) * dn - 1.0 / 3.0 * (2.0 * a - 5.0 * b) * dm;
    }
    case Variant::Oga: {
        const double q = std::pow(0.8, p);
        return 4.0 / 3.0 * (q - 1.0) * dn - 1.0 / 3.0 * (2.0 * q - 5.0) * dm;
    }
    }
    return 0.0;
}

double residual(const EdgeCensus& census, const CoefficientTable& table)
{
    double total = 0.0;
    for (std::size_t k = 0; k < kReducedPairs.size(); ++k)
        total += census.x(kReducedPairs[k].i, kReducedPairs[k].j) * table.value[k];
    return total;
}

double residual(const MolecularGraph& g, Variant variant, double p)
{
    return residual(edge_census(g), CoefficientTable::build(variant, p));
}

double reconstruct(long long n, long long m, const EdgeCensus& census, Variant variant, double p)
{
    return leading_term(variant, p, n, m) + residual(census, CoefficientTable::build(variant, p));
}

double reconstruct(const MolecularGraph& g, Variant variant, double p)
{
    return reconstruct(g.order(), g.size(), edge_census(g), variant, p);
}

Congruence congruence(long long n, long long m, const DegreeCensus& census)
{
    auto mod3 = [](long long v) { return static_cast<int>(((v % 3) + 3) % 3); };
    const int residue = mod3(m + n);
    return {residue, mod3(census.n(3) - census.n(2) - (m + n)) == 0};
}

void write_coefficient_csv(std::ostream& out, Variant variant, std::span<const double> grid)
{
    out << "parameter,pair,value\n";
    char buf[64];
    for (double p : grid) {
        const auto values = coefficients(variant, p);
        for (std::size_t k = 0; k < kReducedPairs.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.9g,%d%d,%.9g\n", p, kReducedPairs[k].i, kReducedPairs[k].j,
                          values[k]);
            out << buf;
        }
    }
}

}  // namespace molex
