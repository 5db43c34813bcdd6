#pragma once

#include "molex/graph.hpp"
#include "molex/reduction.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace molex {

enum class Regime {
    NegAlpha,   ///< alpha in [-1, 0)
    MidAlpha,   ///< alpha in (0, 1)
    HighAlpha,  ///< alpha in (1, 2]
    OgaK,       ///< k in (0, 1]
};

enum class Direction { Lower, Upper };

std::string_view to_string(Regime r);
std::string_view to_string(Direction d);

/// Regime of a parameter for a variant. Throws DomainError outside the
/// ranges above and UnsupportedCase at alpha = 1.
Regime regime_of(Variant variant, double parameter);

/// Lower for (Chi | Platt, NegAlpha) and (Oga, OgaK), Upper otherwise.
Direction direction_of(Variant variant, Regime regime);

/// One residue/regime case of the refined bounds.
struct BoundCase {
    Variant variant;
    double parameter;
    int residue;
    Regime regime;
    Direction direction;

    /// Derives regime and direction from the parameter; see `regime_of`.
    static BoundCase make(Variant variant, double parameter, int residue);
};

struct Bound {
    double value;
    Direction direction;
};

/// (4/3)(5^a - 8^a) n - (1/3)(2 5^a - 5 8^a) m, or its Platt analogue with
/// bases 3 and 6. Lower bound for alpha < 0, upper for alpha > 0, alpha = 1
/// included. Needs n >= 5 and alpha in [-1, 0) u (0, 2]; DomainError otherwise.
Bound leading_bound(Variant variant, long long n, long long m, double alpha);
inline Bound leading_bound(long long n, long long m, double alpha)
{
    return leading_bound(Variant::Chi, n, m, alpha);
}

struct NamedIndexBounds {
    long long m1_upper;  ///< 10m - 4n
    double harmonic_lower;
    double sum_connectivity_lower;
};

NamedIndexBounds named_index_bounds(long long n, long long m);

/// Residue/regime correction added to the leading term, in closed form.
double correction_term(const BoundCase& c);

/// Leading term plus the correction for the case. Needs n >= 5,
/// n - 1 <= m <= 2n and residue = (m + n) mod 3; DomainError otherwise.
double refined_bound(const BoundCase& c, long long n, long long m);

/// Exact value of the bound when the index is integer valued (alpha = 2 for
/// Chi or Platt, alpha = 1 for the leading bound only).
std::optional<Rational> exact_refined_bound(const BoundCase& c, long long n, long long m);
std::optional<Rational> exact_leading_bound(Variant variant, long long n, long long m, double alpha);

/// Whether the census matches the equality configuration of the case.
bool extremal_condition(const DegreeCensus& degrees, const EdgeCensus& edges, const BoundCase& c);
bool extremal_condition(const MolecularGraph& g, const BoundCase& c);
/// Equality configuration of the leading-term bound: n2 = n3 = 0.
bool leading_condition(const DegreeCensus& degrees);

enum class BoundKind { Leading, Refined, FirstZagreb, Harmonic, SumConnectivity };
std::string_view to_string(BoundKind k);

struct BoundReport {
    std::string graph6;
    long long n = 0;
    long long m = 0;
    BoundKind kind = BoundKind::Refined;
    BoundCase bound_case{};
    std::string index;
    double index_value = 0;
    double bound_value = 0;
    double gap = 0;  ///< index - bound for lower bounds, bound - index for upper
    bool equality = false;
    bool extremal_condition_met = false;

    bool satisfied(double tol) const { return gap >= -tol; }
};

struct Comparison {
    double gap;
    bool equality;
};

/// Gap and equality of an index value against a bound. Exact when both exact
/// values are given, otherwise equality means |gap| <= tol.
Comparison compare_to_bound(Direction direction, double index_value, double bound_value, double tol,
                            std::optional<long long> exact_index, std::optional<Rational> exact_bound);

/// Evaluates the index directly, compares it to the refined bound, and checks
/// the equality configuration. Needs a connected graph with n >= 5 and
/// n - 1 <= m <= 2n (PreconditionFailed otherwise); the case residue must
/// match. With alpha = 2 on Chi or Platt the comparison is exact.
BoundReport verdict(const MolecularGraph& g, const BoundCase& c, double tol);

/// Same for the leading-term bound at any admissible alpha, including 1.
BoundReport leading_verdict(const MolecularGraph& g, Variant variant, double alpha, double tol);

/// M1 <= 10m - 4n, H >= (4n + 3m)/20 and the chi lower bound, from the leading bound.
std::array<BoundReport, 3> named_index_verdicts(const MolecularGraph& g, double tol);

}  // namespace molex
