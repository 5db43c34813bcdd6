#pragma once

#include "molex/graph.hpp"
#include "molex/reduction.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace molex {

/// A failed inequality at one parameter value. `clause` names the inequality
/// as "lhs op rhs"; lhs and rhs are its evaluated sides.
struct Violation {
    std::string clause;
    double parameter;
    double lhs;
    double rhs;
};

void write_violations_csv(std::ostream& out, std::span<const Violation> violations);

/// Grid over [lo, hi] with the given step; open ends are dropped. Points are
/// lo + i * step, so they do not accumulate rounding error.
std::vector<double> parameter_grid(double lo, double hi, double step, bool lo_closed, bool hi_closed);

/// [-1, 0) u (0, 1) u (1, 2] at the given step.
std::vector<double> alpha_grid(double step = 1e-3);
/// (0, 1] at the given step.
std::vector<double> k_grid(double step = 1e-3);

/// Root of Theta'(1,2) in (0, 2], by bisection to an interval of 1e-9.
/// Throws NoSignChange unless the coefficient changes sign exactly once there.
double find_x0();

/// Both ordering clauses for Chi or Platt at every grid point. For Platt at
/// alpha >= x0 the second clause is max{T'22, T'23, T'24} < 0 <= T'12.
std::vector<Violation> coefficient_orderings(Variant variant, std::span<const double> grid);

/// Signs of the seven coefficients: positive on [-1, 0), negative on (0, 2].
/// For Platt, Theta'(1,2) is negative on (0, x0) and non-negative on [x0, 2],
/// and its sums with Theta'(2,2), Theta'(2,3), Theta'(2,4) are negative there.
std::vector<Violation> sign_chart_check(Variant variant, std::span<const double> grid);

/// Phi(1,2) > Phi(2,2) > Phi(2,3) > Phi(2,4) > 0 and
/// Phi(1,3) > Phi(2,3) > Phi(3,3) > Phi(3,4) > 0 for k in the grid.
std::vector<Violation> phi_chain_check(std::span<const double> grid);

/// Coefficient inequalities that the case analysis of the residual bounds
/// relies on, e.g. Theta(2,3) + Theta(3,4) > 2 Theta(2,4) for alpha < 0.
std::vector<Violation> proof_chain_check(Variant variant, std::span<const double> grid);

/// Gamma (Chi) or Gamma' (Platt) against its bound for graphs with
/// n2 + n3 >= 2: > 2T24 on [-1, 0), < 2T24 on (0, 1), < 2T13 + T34 on (1, 2].
/// Throws PreconditionFailed when n2 + n3 < 2, DomainError outside the range.
bool residual_check(const MolecularGraph& g, Variant variant, double alpha);
bool residual_check(const DegreeCensus& degrees, const EdgeCensus& edges, const CoefficientTable& table);

/// Upsilon(G) > 3 Phi(3,4) for graphs with n2 + n3 >= 2 and 0 < k <= 1.
bool oga_residual_check(const MolecularGraph& g, double k);
bool oga_residual_check(const DegreeCensus& degrees, const EdgeCensus& edges, const CoefficientTable& table);

/// x(1,2) <= x(2,2) + x(2,3) + x(2,4). Needs n >= 5; fails on some
/// disconnected graphs such as two disjoint paths on three vertices.
bool structural_inequality(const MolecularGraph& g);
bool structural_inequality(const EdgeCensus& edges);

}  // namespace molex
