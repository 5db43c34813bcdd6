#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace molex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxDegree = 4;

/// Simple undirected graph with every degree at most 4.
///
/// Vertices are 0..n-1 and each neighbor list is kept sorted. Instances are
/// immutable once built; use `build` to obtain a validated graph.
class MolecularGraph {
public:
    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return edge_count_; }

    int degree(Vertex v) const { return adjacency_[v].degree; }
    std::span<const Vertex> neighbors(Vertex v) const
    {
        const auto& a = adjacency_[v];
        return {a.neighbors.data(), static_cast<std::size_t>(a.degree)};
    }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const MolecularGraph&, const MolecularGraph&) = default;

private:
    struct Adjacency {
        std::array<Vertex, kMaxDegree> neighbors{};
        int degree = 0;
        friend bool operator==(const Adjacency&, const Adjacency&) = default;
    };

    friend MolecularGraph build(int n, std::span<const Edge> edges);

    std::vector<Adjacency> adjacency_;
    int edge_count_ = 0;
};

/// Validates and builds a graph. Throws `Error` with Loop, DuplicateEdge,
/// DegreeOverflow or VertexOutOfRange.
MolecularGraph build(int n, std::span<const Edge> edges);

inline MolecularGraph build(int n, std::initializer_list<Edge> edges)
{
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Vertex counts by degree. Index 0 holds isolated vertices, which the raw
/// graph type allows but the bound theorems do not.
struct DegreeCensus {
    std::array<int, kMaxDegree + 1> count{};

    int n(int degree) const { return count[degree]; }
    int order() const;
    int degree_sum() const;

    friend bool operator==(const DegreeCensus&, const DegreeCensus&) = default;
};

/// Edge counts x(i, j) by endpoint degrees, 1 <= i <= j <= 4. Access is
/// symmetric in (i, j).
class EdgeCensus {
public:
    int x(int i, int j) const { return counts_[index(i, j)]; }
    int& x(int i, int j) { return counts_[index(i, j)]; }
    int total() const;

    friend bool operator==(const EdgeCensus&, const EdgeCensus&) = default;

private:
    static int index(int i, int j);
    std::array<int, 10> counts_{};
};

DegreeCensus degree_census(const MolecularGraph& g);
EdgeCensus edge_census(const MolecularGraph& g);

/// Checks sum_{i != j} x(j, i) + 2 x(j, j) = j n_j for j = 1..4.
bool census_consistent(const DegreeCensus& degrees, const EdgeCensus& edges);

bool is_connected(const MolecularGraph& g);

/// Returns the graph with vertex v renamed to perm[v].
MolecularGraph relabel(const MolecularGraph& g, std::span<const Vertex> perm);

}  // namespace molex
