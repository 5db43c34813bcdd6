#include "molex/bounds.hpp"

#include "molex/error.hpp"
#include "molex/graph_io.hpp"
#include "molex/indices.hpp"

#include <cmath>

namespace molex {

std::string_view to_string(Regime r)
{
    switch (r) {
    case Regime::NegAlpha: return "neg";
    case Regime::MidAlpha: return "mid";
    case Regime::HighAlpha: return "high";
    case Regime::OgaK: return "oga";
    }
    return "unknown";
}

std::string_view to_string(Direction d)
{
    return d == Direction::Lower ? "lower" : "upper";
}

std::string_view to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::Leading: return "leading";
    case BoundKind::Refined: return "refined";
    case BoundKind::FirstZagreb: return "m1";
    case BoundKind::Harmonic: return "harmonic";
    case BoundKind::SumConnectivity: return "sum-connectivity";
    }
    return "unknown";
}

Regime regime_of(Variant variant, double p)
{
    if (variant == Variant::Oga) {
        if (p > 0.0 && p <= 1.0)
            return Regime::OgaK;
        throw Error(ErrorCode::DomainError, "OGA bounds need 0 < k <= 1, got " + std::to_string(p));
    }
    if (p >= -1.0 && p < 0.0)
        return Regime::NegAlpha;
    if (p > 0.0 && p < 1.0)
        return Regime::MidAlpha;
    if (p == 1.0)
        throw Error(ErrorCode::UnsupportedCase,
                    "alpha = 1 is excluded from the refined bounds; the sharp M1 bound is a separate result "
                    "(only the leading-term bound and 10m - 4n apply)");
    if (p > 1.0 && p <= 2.0)
        return Regime::HighAlpha;
    throw Error(ErrorCode::DomainError, "alpha must lie in [-1,0) u (0,2], got " + std::to_string(p));
}

Direction direction_of(Variant variant, Regime regime)
{
    if (variant == Variant::Oga || regime == Regime::NegAlpha)
        return Direction::Lower;
    return Direction::Upper;
}

BoundCase BoundCase::make(Variant variant, double parameter, int residue)
{
    if (residue < 0 || residue > 2)
        throw Error(ErrorCode::DomainError, "residue must be 0, 1 or 2");
    const Regime r = regime_of(variant, parameter);
    return {variant, parameter, residue, r, direction_of(variant, r)};
}

namespace {

void require_leading_range(Variant variant, long long n, double alpha)
{
    if (variant == Variant::Oga)
        throw Error(ErrorCode::DomainError, "the leading-term bound is stated for chi and platt");
    if (n < 5)
        throw Error(ErrorCode::DomainError, "bounds need n >= 5");
    if (!(alpha >= -1.0 && alpha <= 2.0) || alpha == 0.0)
        throw Error(ErrorCode::DomainError, "alpha must lie in [-1,0) u (0,2]");
}

void require_refined_range(const BoundCase& c, long long n, long long m)
{
    if (n < 5)
        throw Error(ErrorCode::DomainError, "bounds need n >= 5");
    if (m < n - 1 || m > 2 * n)
        throw Error(ErrorCode::DomainError, "bounds need n - 1 <= m <= 2n");
    if ((m + n) % 3 != c.residue)
        throw Error(ErrorCode::DomainError, "residue " + std::to_string(c.residue) + " does not match (m + n) mod 3 = " +
                                                std::to_string((m + n) % 3));
}

// Closed forms shared by the floating and exact paths. `pw(s)` is the edge
// weight of an edge with degree sum s, i.e. s^a for Chi and (s - 2)^a for Platt.
template <class T, class Pow>
T theta_leading(Pow pw, long long n, long long m)
{
    return T(4) / T(3) * (pw(5) - pw(8)) * T(n) - T(1) / T(3) * (T(2) * pw(5) - T(5) * pw(8)) * T(m);
}

template <class T, class Pow>
T theta_correction(Pow pw, int residue, Regime regime)
{
    const bool high = regime == Regime::HighAlpha;
    switch (residue) {
    case 1:
        if (high)
            return T(2) * pw(4) + pw(7) - T(7) / T(3) * pw(5) - T(2) / T(3) * pw(8);
        return T(3) * pw(7) - T(1) / T(3) * pw(5) - T(8) / T(3) * pw(8);
    case 2:
        if (high)
            return pw(3) + pw(6) - T(5) / T(3) * pw(5) - T(1) / T(3) * pw(8);
        return T(2) * pw(6) - T(2) / T(3) * pw(5) - T(4) / T(3) * pw(8);
    default: return T(0);
    }
}

double oga_correction(double k, int residue)
{
    const double q = std::pow(0.8, k);
    switch (residue) {
    case 1: return 3.0 * std::pow(4.0 * std::sqrt(3.0) / 7.0, k) - q / 3.0 - 8.0 / 3.0;
    case 2: return 2.0 * std::pow(2.0 * std::sqrt(2.0) / 3.0, k) - 2.0 / 3.0 * q - 4.0 / 3.0;
    default: return 0.0;
    }
}

auto double_pow(Variant v, double a)
{
    const int shift = v == Variant::Platt ? 2 : 0;
    return [=](int s) { return std::pow(static_cast<double>(s - shift), a); };
}

std::optional<int> integer_power(double a)
{
    if (a == 1.0 || a == 2.0)
        return static_cast<int>(a);
    return std::nullopt;
}

auto rational_pow(Variant v, int power)
{
    const int shift = v == Variant::Platt ? 2 : 0;
    return [=](int s) {
        long long base = s - shift;
        return Rational(power == 1 ? base : base * base);
    };
}

Regime leading_regime(double alpha)
{
    if (alpha < 0)
        return Regime::NegAlpha;
    return alpha < 1 ? Regime::MidAlpha : Regime::HighAlpha;
}

void fill_comparison(BoundReport& r, double tol, std::optional<long long> exact_index, std::optional<Rational> exact_bound)
{
    const auto c = compare_to_bound(r.bound_case.direction, r.index_value, r.bound_value, tol, exact_index, exact_bound);
    r.gap = c.gap;
    r.equality = c.equality;
}

void require_verdict_graph(const MolecularGraph& g)
{
    if (g.order() < 5)
        throw Error(ErrorCode::PreconditionFailed, "verdicts need n >= 5");
    if (!is_connected(g))
        throw Error(ErrorCode::PreconditionFailed, "verdicts need a connected graph");
}

}  // namespace

Comparison compare_to_bound(Direction direction, double index_value, double bound_value, double tol,
                            std::optional<long long> exact_index, std::optional<Rational> exact_bound)
{
    const bool lower = direction == Direction::Lower;
    if (exact_index && exact_bound) {
        const Rational diff = lower ? Rational(*exact_index) - *exact_bound : *exact_bound - Rational(*exact_index);
        return {boost::rational_cast<double>(diff), diff.numerator() == 0};
    }
    const double gap = lower ? index_value - bound_value : bound_value - index_value;
    return {gap, std::abs(gap) <= tol};
}

Bound leading_bound(Variant variant, long long n, long long m, double alpha)
{
    require_leading_range(variant, n, alpha);
    return {theta_leading<double>(double_pow(variant, alpha), n, m),
            alpha < 0 ? Direction::Lower : Direction::Upper};
}

std::optional<Rational> exact_leading_bound(Variant variant, long long n, long long m, double alpha)
{
    require_leading_range(variant, n, alpha);
    const auto power = integer_power(alpha);
    if (!power)
        return std::nullopt;
    return theta_leading<Rational>(rational_pow(variant, *power), n, m);
}

NamedIndexBounds named_index_bounds(long long n, long long m)
{
    if (n < 5)
        throw Error(ErrorCode::DomainError, "bounds need n >= 5");
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    const double r5 = 1.0 / std::sqrt(5.0);
    const double r8 = 1.0 / (2.0 * std::sqrt(2.0));
    return {10 * m - 4 * n, (4.0 * dn + 3.0 * dm) / 20.0,
            4.0 / 3.0 * (r5 - r8) * dn + 1.0 / 3.0 * (5.0 * r8 - 2.0 * r5) * dm};
}

double correction_term(const BoundCase& c)
{
    if (c.variant == Variant::Oga)
        return oga_correction(c.parameter, c.residue);
    return theta_correction<double>(double_pow(c.variant, c.parameter), c.residue, c.regime);
}

double refined_bound(const BoundCase& c, long long n, long long m)
{
    require_refined_range(c, n, m);
    return leading_term(c.variant, c.parameter, n, m) + correction_term(c);
}

std::optional<Rational> exact_refined_bound(const BoundCase& c, long long n, long long m)
{
    require_refined_range(c, n, m);
    if (c.variant == Variant::Oga)
        return std::nullopt;
    const auto power = integer_power(c.parameter);
    if (!power)
        return std::nullopt;
    const auto pw = rational_pow(c.variant, *power);
    return theta_leading<Rational>(pw, n, m) + theta_correction<Rational>(pw, c.residue, c.regime);
}

bool leading_condition(const DegreeCensus& degrees)
{
    return degrees.n(2) == 0 && degrees.n(3) == 0;
}

bool extremal_condition(const DegreeCensus& d, const EdgeCensus& x, const BoundCase& c)
{
    const bool high = c.regime == Regime::HighAlpha;
    switch (c.residue) {
    case 0: return leading_condition(d);
    case 1:
        return d.n(2) == 0 && d.n(3) == 1 && (high ? x.x(1, 3) == 2 && x.x(3, 4) == 1 : x.x(1, 3) == 0 && x.x(3, 4) == 3);
    case 2:
        return d.n(3) == 0 && d.n(2) == 1 && (high ? x.x(1, 2) == 1 && x.x(2, 4) == 1 : x.x(1, 2) == 0 && x.x(2, 4) == 2);
    }
    return false;
}

bool extremal_condition(const MolecularGraph& g, const BoundCase& c)
{
    return extremal_condition(degree_census(g), edge_census(g), c);
}

BoundReport verdict(const MolecularGraph& g, const BoundCase& c, double tol)
{
    require_verdict_graph(g);
    BoundReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.kind = BoundKind::Refined;
    r.bound_case = c;
    const auto spec = index_for(c.variant, c.parameter);
    r.index = spec.name();
    r.bound_value = refined_bound(c, r.n, r.m);
    r.index_value = evaluate(g, spec);
    fill_comparison(r, tol, evaluate_exact(g, spec), exact_refined_bound(c, r.n, r.m));
    r.extremal_condition_met = extremal_condition(g, c);
    return r;
}

BoundReport leading_verdict(const MolecularGraph& g, Variant variant, double alpha, double tol)
{
    require_verdict_graph(g);
    BoundReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.kind = BoundKind::Leading;
    const Bound b = leading_bound(variant, r.n, r.m, alpha);
    const Regime regime = leading_regime(alpha);
    r.bound_case = {variant, alpha, static_cast<int>((r.n + r.m) % 3), regime, b.direction};
    const auto spec = index_for(variant, alpha);
    r.index = spec.name();
    r.bound_value = b.value;
    r.index_value = evaluate(g, spec);
    fill_comparison(r, tol, evaluate_exact(g, spec), exact_leading_bound(variant, r.n, r.m, alpha));
    r.extremal_condition_met = leading_condition(degree_census(g));
    return r;
}

std::array<BoundReport, 3> named_index_verdicts(const MolecularGraph& g, double tol)
{
    require_verdict_graph(g);
    const auto b = named_index_bounds(g.order(), g.size());
    const bool condition = leading_condition(degree_census(g));
    const int residue = static_cast<int>((g.order() + g.size()) % 3);

    std::array<BoundReport, 3> out;
    const std::array<BoundKind, 3> kinds{BoundKind::FirstZagreb, BoundKind::Harmonic,
                                         BoundKind::SumConnectivity};
    const std::array<IndexSpec, 3> specs{IndexSpec(IndexKind::FirstZagreb), IndexSpec(IndexKind::Harmonic),
                                         IndexSpec(IndexKind::SumConnectivity)};
    const std::array<double, 3> alphas{1.0, -1.0, -0.5};
    const std::array<double, 3> values{static_cast<double>(b.m1_upper), b.harmonic_lower, b.sum_connectivity_lower};
    for (int k = 0; k < 3; ++k) {
        auto& r = out[k];
        r.graph6 = to_graph6(g);
        r.n = g.order();
        r.m = g.size();
        r.kind = kinds[k];
        r.bound_case = {Variant::Chi, alphas[k], residue, leading_regime(alphas[k]),
                        k == 0 ? Direction::Upper : Direction::Lower};
        r.index = specs[k].name();
        r.index_value = evaluate(g, specs[k]);
        r.bound_value = values[k];
        std::optional<Rational> exact_bound;
        if (k == 0)
            exact_bound = Rational(b.m1_upper);
        fill_comparison(r, tol, evaluate_exact(g, specs[k]), exact_bound);
        r.extremal_condition_met = condition;
    }
    return out;
}

}  // namespace molex
