#pragma once

#include "molex/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace molex {

enum class IndexKind {
    GeneralSumConnectivity,  ///< chi_alpha: sum of (du + dv)^alpha
    GeneralPlatt,            ///< Pl_alpha: sum of (du + dv - 2)^alpha
    Oga,                     ///< OGA_k: sum of (2 sqrt(du dv) / (du + dv))^k
    FirstZagreb,
    Platt,
    Harmonic,
    SumConnectivity,
    Randic,
    HyperZagreb,
    ReformulatedZagreb,
};

std::string_view to_string(IndexKind kind);

/// An index together with its real parameter (alpha or k) where it has one.
class IndexSpec {
public:
    /// Throws InvalidParameter when the parameter is missing, superfluous,
    /// non-finite, zero for the general indices or non-positive for OGA.
    IndexSpec(IndexKind kind, std::optional<double> parameter = std::nullopt);

    static IndexSpec general_sum_connectivity(double alpha) { return {IndexKind::GeneralSumConnectivity, alpha}; }
    static IndexSpec general_platt(double alpha) { return {IndexKind::GeneralPlatt, alpha}; }
    static IndexSpec oga(double k) { return {IndexKind::Oga, k}; }

    IndexKind kind() const noexcept { return kind_; }
    std::optional<double> parameter() const noexcept { return parameter_; }

    /// Contribution of one edge whose endpoints have degrees du and dv.
    /// Throws UndefinedTerm for a negative power of zero.
    double edge_weight(int du, int dv) const;

    std::string name() const;

private:
    IndexKind kind_;
    std::optional<double> parameter_;
};

/// Edge-by-edge evaluation of the defining sum.
double evaluate(const MolecularGraph& g, const IndexSpec& spec);

/// Census form: sum over degree pairs of x(i, j) times the edge weight.
double evaluate_from_census(const EdgeCensus& census, const IndexSpec& spec);

/// Exact integer value when the index is integer-valued on integer degrees:
/// M1, Pl, hyper-Zagreb, EM1, and the general indices at alpha in {1, 2}.
std::optional<long long> evaluate_exact(const MolecularGraph& g, const IndexSpec& spec);

/// Precomputed edge weights for all degree pairs, for hot loops that evaluate
/// one spec over many graphs. Pairs whose weight is undefined are marked.
class WeightTable {
public:
    explicit WeightTable(const IndexSpec& spec);

    double operator()(int du, int dv) const { return weight_[du][dv]; }
    bool defined(int du, int dv) const { return defined_[du][dv]; }
    const IndexSpec& spec() const noexcept { return spec_; }

    /// Edge-by-edge sum using the cached weights.
    double evaluate(const MolecularGraph& g) const;

private:
    IndexSpec spec_;
    std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> weight_{};
    std::array<std::array<bool, kMaxDegree + 1>, kMaxDegree + 1> defined_{};
};

}  // namespace molex
