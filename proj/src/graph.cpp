#include "molex/graph.hpp"

#include "molex/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace molex {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UndefinedTerm: return "UndefinedTerm";
    case ErrorCode::UnknownPair: return "UnknownPair";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool MolecularGraph::adjacent(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> MolecularGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

MolecularGraph build(int n, std::span<const Edge> edges)
{
    if (n < 1)
        throw Error(ErrorCode::PreconditionFailed, "graph needs at least one vertex");

    MolecularGraph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::Loop, "vertex " + std::to_string(u));
        auto& au = g.adjacency_[u];
        auto& av = g.adjacency_[v];
        if (std::find(au.neighbors.begin(), au.neighbors.begin() + au.degree, v) != au.neighbors.begin() + au.degree)
            throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        for (Vertex w : {u, v})
            if (g.adjacency_[w].degree == kMaxDegree)
                throw Error(ErrorCode::DegreeOverflow, "vertex " + std::to_string(w) + " would exceed degree 4");
        au.neighbors[au.degree++] = v;
        av.neighbors[av.degree++] = u;
        ++g.edge_count_;
    }
    for (auto& a : g.adjacency_)
        std::sort(a.neighbors.begin(), a.neighbors.begin() + a.degree);
    return g;
}

int DegreeCensus::order() const
{
    return std::accumulate(count.begin(), count.end(), 0);
}

int DegreeCensus::degree_sum() const
{
    int s = 0;
    for (int d = 1; d <= kMaxDegree; ++d)
        s += d * count[d];
    return s;
}

int EdgeCensus::index(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i < 1 || j > kMaxDegree)
        throw Error(ErrorCode::UnknownPair, "degree pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    // Row offsets of the upper triangle: (1,*) -> 0, (2,*) -> 4, (3,*) -> 7, (4,4) -> 9.
    static constexpr std::array<int, 5> row{0, 0, 4, 7, 9};
    return row[i] + (j - i);
}

int EdgeCensus::total() const
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

DegreeCensus degree_census(const MolecularGraph& g)
{
    DegreeCensus c;
    for (Vertex v = 0; v < g.order(); ++v)
        ++c.count[g.degree(v)];
    return c;
}

EdgeCensus edge_census(const MolecularGraph& g)
{
    EdgeCensus c;
    for (auto [u, v] : g.edges())
        ++c.x(g.degree(u), g.degree(v));
    return c;
}

bool census_consistent(const DegreeCensus& degrees, const EdgeCensus& edges)
{
    for (int j = 1; j <= kMaxDegree; ++j) {
        int lhs = 2 * edges.x(j, j);
        for (int i = 1; i <= kMaxDegree; ++i)
            if (i != j)
                lhs += edges.x(i, j);
        if (lhs != j * degrees.n(j))
            return false;
    }
    return true;
}

bool is_connected(const MolecularGraph& g)
{
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

MolecularGraph relabel(const MolecularGraph& g, std::span<const Vertex> perm)
{
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return build(g.order(), edges);
}

}  // namespace molex
