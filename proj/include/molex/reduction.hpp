#pragma once

#include "molex/graph.hpp"
#include "molex/indices.hpp"

#include <boost/rational.hpp>

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>

namespace molex {

/// Index family handled by the census reduction.
enum class Variant { Chi, Platt, Oga };

std::string_view to_string(Variant v);
IndexSpec index_for(Variant v, double parameter);

struct DegreePair {
    int i;
    int j;
    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// The seven degree pairs that survive eliminating x(1,4) and x(4,4), in the
/// order (1,2) (1,3) (2,2) (2,3) (2,4) (3,3) (3,4).
inline constexpr std::array<DegreePair, 7> kReducedPairs{
    {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}}};

/// Position of a pair in kReducedPairs; throws UnknownPair otherwise.
int reduced_index(DegreePair pair);

/// Closed-form coefficient of x(i, j) after elimination. For Chi and Platt the
/// parameter is alpha, for Oga it is k.
double coefficient(Variant variant, DegreePair pair, double p);

/// All seven coefficients for one (variant, parameter).
struct CoefficientTable {
    Variant variant;
    double parameter;
    std::array<double, 7> value;

    static CoefficientTable build(Variant variant, double p);
    double operator[](DegreePair pair) const { return value[reduced_index(pair)]; }
};

using Rational = boost::rational<long long>;

struct EliminatedCounts {
    Rational x14;
    Rational x44;
};

/// Solves the degree/edge census system for x(1,4) and x(4,4) given n, m and
/// the other seven counts. Entries x(1,1), x(1,4), x(4,4) of `partial` are
/// ignored.
EliminatedCounts solve_x14_x44(long long n, long long m, const EdgeCensus& partial);

/// The part of the index that depends on n and m only:
/// (4/3)(w14 - w44) n - (1/3)(2 w14 - 5 w44) m in closed form.
double leading_term(Variant variant, double p, long long n, long long m);

/// Sum over the seven reduced pairs of x(i, j) times the coefficient.
double residual(const EdgeCensus& census, const CoefficientTable& table);
double residual(const MolecularGraph& g, Variant variant, double p);

/// leading_term + residual; equals the index for every connected molecular
/// graph on at least three vertices.
double reconstruct(long long n, long long m, const EdgeCensus& census, Variant variant, double p);
double reconstruct(const MolecularGraph& g, Variant variant, double p);

struct Congruence {
    int residue;      ///< (m + n) mod 3
    bool consistent;  ///< n3 - n2 == m + n (mod 3)
};

Congruence congruence(long long n, long long m, const DegreeCensus& census);

/// Writes "parameter,pair,value" rows of the coefficient curves over a grid.
void write_coefficient_csv(std::ostream& out, Variant variant, std::span<const double> grid);

}  // namespace molex
