#pragma once

#include "molex/graph.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace molex {

inline constexpr int kMaxCanonicalOrder = 32;

/// Bitset adjacency used by canonical labeling and the enumerator.
struct BitGraph {
    using Row = std::uint32_t;

    int n = 0;
    std::array<Row, kMaxCanonicalOrder> adj{};

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const;
    void add_edge(int u, int v)
    {
        adj[u] |= Row{1} << v;
        adj[v] |= Row{1} << u;
    }

    static BitGraph from(const MolecularGraph& g);
    MolecularGraph to_graph() const;

    friend bool operator==(const BitGraph&, const BitGraph&) = default;
};

/// Adjacency rows of a relabeled graph; row i is the neighbor mask of the
/// vertex carrying label i. Rows past the order are zero.
using CanonicalCode = std::array<BitGraph::Row, kMaxCanonicalOrder>;

struct CanonicalLabeling {
    CanonicalCode code{};
    std::array<std::uint8_t, kMaxCanonicalOrder> label{};  ///< vertex -> canonical label
};

/// Canonical labeling: two graphs get the same code iff they are isomorphic.
CanonicalLabeling canonical_labeling(const BitGraph& g);

/// Canonical code of the graph with vertex `v` distinguished. Two vertices of
/// the same graph get the same code iff an automorphism maps one to the other.
/// The distinguished vertex always receives label 0.
CanonicalCode marked_canonical_code(const BitGraph& g, int v);

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
std::string canonical_key(const MolecularGraph& g);

}  // namespace molex
