#include "molex/lemmas.hpp"

#include "molex/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace molex {

void write_violations_csv(std::ostream& out, std::span<const Violation> violations)
{
    out << "parameter,clause,lhs,rhs\n";
    char buf[64];
    for (const auto& v : violations) {
        std::snprintf(buf, sizeof buf, "%.9g", v.parameter);
        out << buf << ",\"" << v.clause << "\",";
        std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", v.lhs, v.rhs);
        out << buf;
    }
}

std::vector<double> parameter_grid(double lo, double hi, double step, bool lo_closed, bool hi_closed)
{
    if (!(step > 0) || !(hi > lo))
        throw Error(ErrorCode::InvalidParameter, "grid needs step > 0 and hi > lo");
    const double eps = step * 1e-6;
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> out;
    out.reserve(count + 2);
    for (long long i = 0; i <= count; ++i) {
        const double x = lo + static_cast<double>(i) * step;
        if (i == 0 && !lo_closed)
            continue;
        if (x > hi - eps && !hi_closed)
            continue;
        out.push_back(std::min(x, hi));
    }
    if (hi_closed && (out.empty() || out.back() < hi - eps))
        out.push_back(hi);
    return out;
}

std::vector<double> alpha_grid(double step)
{
    auto grid = parameter_grid(-1.0, 0.0, step, true, false);
    for (auto part : {parameter_grid(0.0, 1.0, step, false, false), parameter_grid(1.0, 2.0, step, false, true)})
        grid.insert(grid.end(), part.begin(), part.end());
    return grid;
}

std::vector<double> k_grid(double step)
{
    return parameter_grid(0.0, 1.0, step, false, true);
}

namespace {

enum class Op { Less, LessEq, Greater, GreaterEq };

struct Checker {
    std::vector<Violation>& out;
    double parameter;

    void operator()(const std::string& clause, double lhs, Op op, double rhs) const
    {
        const double slack = 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
        bool ok = false;
        switch (op) {
        case Op::Less: ok = lhs < rhs; break;
        case Op::LessEq: ok = lhs <= rhs + slack; break;
        case Op::Greater: ok = lhs > rhs; break;
        case Op::GreaterEq: ok = lhs >= rhs - slack; break;
        }
        if (!ok)
            out.push_back({clause, parameter, lhs, rhs});
    }
};

enum class AlphaRange { Negative, Middle, High };

AlphaRange alpha_range(double alpha)
{
    if (alpha >= -1.0 && alpha < 0.0)
        return AlphaRange::Negative;
    if (alpha > 0.0 && alpha < 1.0)
        return AlphaRange::Middle;
    if (alpha > 1.0 && alpha <= 2.0)
        return AlphaRange::High;
    throw Error(ErrorCode::DomainError, "alpha " + std::to_string(alpha) + " outside [-1,0) u (0,1) u (1,2]");
}

void require_theta_variant(Variant variant)
{
    if (variant == Variant::Oga)
        throw Error(ErrorCode::InvalidParameter, "this check applies to chi and platt only");
}

double theta_prime_12(double a)
{
    return coefficient(Variant::Platt, {1, 2}, a);
}

struct Named {
    CoefficientTable t;
    double operator()(int i, int j) const { return t[{i, j}]; }
};

}  // namespace

double find_x0()
{
    static const double root = [] {
        const auto grid = parameter_grid(0.0, 2.0, 1e-3, false, true);
        int changes = 0;
        double lo = 0, hi = 0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double a = theta_prime_12(grid[i - 1]);
            const double b = theta_prime_12(grid[i]);
            if ((a < 0) != (b < 0)) {
                ++changes;
                lo = grid[i - 1];
                hi = grid[i];
            }
        }
        if (changes != 1)
            throw Error(ErrorCode::NoSignChange,
                        "Theta'(1,2) changes sign " + std::to_string(changes) + " times on (0,2]");
        double flo = theta_prime_12(lo);
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            const double fm = theta_prime_12(mid);
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

std::vector<Violation> coefficient_orderings(Variant variant, std::span<const double> grid)
{
    require_theta_variant(variant);
    const double x0 = variant == Variant::Platt ? find_x0() : 0.0;
    std::vector<Violation> out;
    for (double a : grid) {
        const auto range = alpha_range(a);
        const Named t{CoefficientTable::build(variant, a)};
        const Checker check{out, a};
        switch (range) {
        case AlphaRange::Negative:
            check("(i) min{T13,T23,T33} > T34", std::min({t(1, 3), t(2, 3), t(3, 3)}), Op::Greater, t(3, 4));
            check("(i) T34 > 0", t(3, 4), Op::Greater, 0.0);
            check("(ii) min{T12,T22,T23} > T24", std::min({t(1, 2), t(2, 2), t(2, 3)}), Op::Greater, t(2, 4));
            check("(ii) T24 > 0", t(2, 4), Op::Greater, 0.0);
            break;
        case AlphaRange::Middle:
            check("(i) max{T13,T23,T33} < T34", std::max({t(1, 3), t(2, 3), t(3, 3)}), Op::Less, t(3, 4));
            check("(i) T34 < 0", t(3, 4), Op::Less, 0.0);
            check("(ii) max{T12,T22,T23} < T24", std::max({t(1, 2), t(2, 2), t(2, 3)}), Op::Less, t(2, 4));
            check("(ii) T24 < 0", t(2, 4), Op::Less, 0.0);
            break;
        case AlphaRange::High:
            check("(i) max{T23,T33,T34} < T13", std::max({t(2, 3), t(3, 3), t(3, 4)}), Op::Less, t(1, 3));
            check("(i) T13 < 0", t(1, 3), Op::Less, 0.0);
            if (variant == Variant::Platt && a >= x0) {
                check("(ii) max{T22,T23,T24} < 0", std::max({t(2, 2), t(2, 3), t(2, 4)}), Op::Less, 0.0);
                check("(ii) 0 <= T12", 0.0, Op::LessEq, t(1, 2));
            } else {
                check("(ii) max{T22,T23,T24} < T12", std::max({t(2, 2), t(2, 3), t(2, 4)}), Op::Less, t(1, 2));
                check("(ii) T12 < 0", t(1, 2), Op::Less, 0.0);
            }
            break;
        }
    }
    return out;
}

std::vector<Violation> sign_chart_check(Variant variant, std::span<const double> grid)
{
    require_theta_variant(variant);
    const double x0 = variant == Variant::Platt ? find_x0() : 0.0;
    std::vector<Violation> out;
    for (double a : grid) {
        const bool negative = alpha_range(a) == AlphaRange::Negative;
        const Named t{CoefficientTable::build(variant, a)};
        const Checker check{out, a};
        for (auto [i, j] : kReducedPairs) {
            const std::string name = "T" + std::to_string(i) + std::to_string(j);
            if (variant == Variant::Platt && i == 1 && j == 2 && !negative) {
                if (a < x0)
                    check("T12 < 0 on (0,x0)", t(1, 2), Op::Less, 0.0);
                else
                    check("T12 >= 0 on [x0,2]", t(1, 2), Op::GreaterEq, 0.0);
                continue;
            }
            if (negative)
                check(name + " > 0", t(i, j), Op::Greater, 0.0);
            else
                check(name + " < 0", t(i, j), Op::Less, 0.0);
        }
        if (variant == Variant::Platt && a >= x0) {
            check("T12+T22 < 0 on [x0,2]", t(1, 2) + t(2, 2), Op::Less, 0.0);
            check("T12+T23 < 0 on [x0,2]", t(1, 2) + t(2, 3), Op::Less, 0.0);
            check("T12+T24 < 0 on [x0,2]", t(1, 2) + t(2, 4), Op::Less, 0.0);
        }
    }
    return out;
}

std::vector<Violation> phi_chain_check(std::span<const double> grid)
{
    std::vector<Violation> out;
    for (double k : grid) {
        if (!(k > 0.0 && k <= 1.0))
            throw Error(ErrorCode::DomainError, "k " + std::to_string(k) + " outside (0,1]");
        const Named f{CoefficientTable::build(Variant::Oga, k)};
        const Checker check{out, k};
        check("F12 > F22", f(1, 2), Op::Greater, f(2, 2));
        check("F22 > F23", f(2, 2), Op::Greater, f(2, 3));
        check("F23 > F24", f(2, 3), Op::Greater, f(2, 4));
        check("F24 > 0", f(2, 4), Op::Greater, 0.0);
        check("F13 > F23", f(1, 3), Op::Greater, f(2, 3));
        check("F23 > F33", f(2, 3), Op::Greater, f(3, 3));
        check("F33 > F34", f(3, 3), Op::Greater, f(3, 4));
        check("F34 > 0", f(3, 4), Op::Greater, 0.0);
    }
    return out;
}

std::vector<Violation> proof_chain_check(Variant variant, std::span<const double> grid)
{
    require_theta_variant(variant);
    const double x0 = variant == Variant::Platt ? find_x0() : 0.0;
    std::vector<Violation> out;
    for (double a : grid) {
        const auto range = alpha_range(a);
        const Named t{CoefficientTable::build(variant, a)};
        const Checker check{out, a};
        if (range != AlphaRange::High) {
            // Same comparisons on both sides of zero with the direction flipped.
            const Op beyond = range == AlphaRange::Negative ? Op::Greater : Op::Less;
            const std::string rel = range == AlphaRange::Negative ? " > " : " < ";
            const double target = 2 * t(2, 4);
            check("T22" + rel + "2T24", t(2, 2), beyond, target);
            check("T23+T34" + rel + "2T24", t(2, 3) + t(3, 4), beyond, target);
            check("3T23" + rel + "2T24", 3 * t(2, 3), beyond, target);
            check("T33+T34" + rel + "2T24", t(3, 3) + t(3, 4), beyond, target);
            check("3T33" + rel + "2T24", 3 * t(3, 3), beyond, target);
            check("2T24+3T34" + rel + "2T24", target + 3 * t(3, 4), beyond, target);
            check("6T34" + rel + "2T24", 6 * t(3, 4), beyond, target);
            check("4T24" + rel + "2T24", 4 * t(2, 4), beyond, target);
            check("2T24" + rel + "3T34", target, beyond, 3 * t(3, 4));
            check("T13" + rel + "T34", t(1, 3), beyond, t(3, 4));
            check("T12" + rel + "T24", t(1, 2), beyond, t(2, 4));
            continue;
        }
        const double target = 2 * t(1, 3) + t(3, 4);
        check("T22 < 2T13+T34", t(2, 2), Op::Less, target);
        check("T23+T13 < 2T13+T34", t(2, 3) + t(1, 3), Op::Less, target);
        check("3T23 < 2T13+T34", 3 * t(2, 3), Op::Less, target);
        check("T33+T13 < 2T13+T34", t(3, 3) + t(1, 3), Op::Less, target);
        check("3T33 < 2T13+T34", 3 * t(3, 3), Op::Less, target);
        check("6T13 < 2T13+T34", 6 * t(1, 3), Op::Less, target);
        check("4T24 < 2T13+T34", 4 * t(2, 4), Op::Less, target);
        check("T12+3T24 < 2T13+T34", t(1, 2) + 3 * t(2, 4), Op::Less, target);
        check("2T12+2T24 < 2T13+T34", 2 * t(1, 2) + 2 * t(2, 4), Op::Less, target);
        check("2T13+T34 < T12+T24", target, Op::Less, t(1, 2) + t(2, 4));
        check("T13 > T34", t(1, 3), Op::Greater, t(3, 4));
        check("T12 > T24", t(1, 2), Op::Greater, t(2, 4));
        if (variant == Variant::Platt && a >= x0)
            check("T12+T24+3T13 < 2T13+T34", t(1, 2) + t(2, 4) + 3 * t(1, 3), Op::Less, target);
        else
            check("2T12+3T13 <= 2T13+T34", 2 * t(1, 2) + 3 * t(1, 3), Op::LessEq, target);
    }
    return out;
}

bool residual_check(const DegreeCensus& degrees, const EdgeCensus& edges, const CoefficientTable& table)
{
    require_theta_variant(table.variant);
    if (degrees.n(2) + degrees.n(3) < 2)
        throw Error(ErrorCode::PreconditionFailed, "lemma needs n2 + n3 >= 2");
    const double gamma = residual(edges, table);
    switch (alpha_range(table.parameter)) {
    case AlphaRange::Negative: return gamma > 2 * table[{2, 4}];
    case AlphaRange::Middle: return gamma < 2 * table[{2, 4}];
    case AlphaRange::High: return gamma < 2 * table[{1, 3}] + table[{3, 4}];
    }
    return false;
}

bool residual_check(const MolecularGraph& g, Variant variant, double alpha)
{
    require_theta_variant(variant);
    alpha_range(alpha);
    return residual_check(degree_census(g), edge_census(g), CoefficientTable::build(variant, alpha));
}

bool oga_residual_check(const DegreeCensus& degrees, const EdgeCensus& edges, const CoefficientTable& table)
{
    if (table.variant != Variant::Oga)
        throw Error(ErrorCode::InvalidParameter, "oga_residual_check needs an OGA table");
    if (!(table.parameter > 0.0 && table.parameter <= 1.0))
        throw Error(ErrorCode::DomainError, "k outside (0,1]");
    if (degrees.n(2) + degrees.n(3) < 2)
        throw Error(ErrorCode::PreconditionFailed, "lemma needs n2 + n3 >= 2");
    return residual(edges, table) > 3 * table[{3, 4}];
}

bool oga_residual_check(const MolecularGraph& g, double k)
{
    if (!(k > 0.0 && k <= 1.0))
        throw Error(ErrorCode::DomainError, "k outside (0,1]");
    return oga_residual_check(degree_census(g), edge_census(g), CoefficientTable::build(Variant::Oga, k));
}

bool structural_inequality(const EdgeCensus& edges)
{
    return edges.x(1, 2) <= edges.x(2, 2) + edges.x(2, 3) + edges.x(2, 4);
}

bool structural_inequality(const MolecularGraph& g)
{
    if (g.order() < 5)
        throw Error(ErrorCode::PreconditionFailed, "structural inequality needs n >= 5");
    return structural_inequality(edge_census(g));
}

}  // namespace molex
