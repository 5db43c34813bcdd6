#include "molex/canonical.hpp"

#include "molex/error.hpp"
#include "molex/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace molex {

int BitGraph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n; ++v)
        twice += degree(v);
    return twice / 2;
}

BitGraph BitGraph::from(const MolecularGraph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error(ErrorCode::PreconditionFailed, "bitset graphs hold at most 32 vertices");
    BitGraph b;
    b.n = g.order();
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    return b;
}

MolecularGraph BitGraph::to_graph() const
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (Row rest = adj[u] >> (u + 1); rest != 0; rest &= rest - 1)
            edges.emplace_back(u, u + 1 + __builtin_ctz(rest));
    return build(n, edges);
}

namespace {

using Perm = std::array<std::uint8_t, kMaxCanonicalOrder>;

// Ordered partition: `order` lists vertices cell by cell; bit p of `starts`
// marks position p as the first position of a cell.
struct Partition {
    Perm order{};
    std::uint32_t starts = 1;
};

class Search {
public:
    explicit Search(const BitGraph& g) : g_(g), full_(g.n == 32 ? ~0u : (1u << g.n) - 1) {}

    CanonicalLabeling run(Partition p)
    {
        refine(p);
        std::vector<std::uint8_t> prefix;
        descend(p, prefix);
        return best_;
    }

private:
    int next_start(const Partition& p, int pos) const
    {
        std::uint32_t above = pos + 1 >= 32 ? 0u : p.starts & ~((2u << pos) - 1);
        return above ? __builtin_ctz(above) : g_.n;
    }

    // Coarsest equitable refinement; splits cells by neighbor counts into each
    // splitter cell, ascending count first.
    void refine(Partition& p) const
    {
        const int n = g_.n;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n;) {
                const int e = next_start(p, s);
                BitGraph::Row w = 0;
                for (int pos = s; pos < e; ++pos)
                    w |= BitGraph::Row{1} << p.order[pos];
                for (int b = 0; b < n;) {
                    const int c = next_start(p, b);
                    if (c - b > 1 && split(p, b, c, w))
                        changed = true;
                    b = c;
                }
                s = e;
            }
        }
    }

    bool split(Partition& p, int b, int c, BitGraph::Row w) const
    {
        std::array<int, kMaxCanonicalOrder> key{};
        bool uniform = true;
        for (int pos = b; pos < c; ++pos) {
            key[pos] = __builtin_popcount(g_.adj[p.order[pos]] & w);
            uniform = uniform && key[pos] == key[b];
        }
        if (uniform)
            return false;
        // Insertion sort of the segment by key; segments are at most 32 long.
        for (int i = b + 1; i < c; ++i) {
            int k = key[i];
            auto v = p.order[i];
            int j = i - 1;
            while (j >= b && key[j] > k) {
                key[j + 1] = key[j];
                p.order[j + 1] = p.order[j];
                --j;
            }
            key[j + 1] = k;
            p.order[j + 1] = v;
        }
        for (int i = b + 1; i < c; ++i)
            if (key[i] != key[i - 1])
                p.starts |= 1u << i;
        return true;
    }

    void leaf(const Partition& p)
    {
        CanonicalLabeling cur;
        for (int i = 0; i < g_.n; ++i)
            cur.label[p.order[i]] = static_cast<std::uint8_t>(i);
        for (int u = 0; u < g_.n; ++u) {
            BitGraph::Row row = 0;
            for (BitGraph::Row rest = g_.adj[u]; rest != 0; rest &= rest - 1)
                row |= BitGraph::Row{1} << cur.label[__builtin_ctz(rest)];
            cur.code[cur.label[u]] = row;
        }
        if (!have_best_ || cur.code > best_.code) {
            best_ = cur;
            have_best_ = true;
            for (int i = 0; i < g_.n; ++i)
                best_inverse_[i] = p.order[i];
        } else if (cur.code == best_.code && automorphisms_.size() < kMaxStored) {
            Perm gamma{};
            for (int v = 0; v < g_.n; ++v)
                gamma[v] = best_inverse_[cur.label[v]];
            automorphisms_.push_back(gamma);
        }
    }

    // Union-find orbits of the stored automorphisms that fix `prefix` pointwise.
    std::vector<int> orbits(const std::vector<std::uint8_t>& prefix) const
    {
        std::vector<int> parent(g_.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](auto v) { return gamma[v] == v; });
            if (!fixes)
                continue;
            for (int v = 0; v < g_.n; ++v)
                parent[find(v)] = find(gamma[v]);
        }
        for (int v = 0; v < g_.n; ++v)
            parent[v] = find(v);
        return parent;
    }

    void descend(const Partition& p, std::vector<std::uint8_t>& prefix)
    {
        if (p.starts == full_) {
            leaf(p);
            return;
        }
        int b = 0;
        int c = next_start(p, 0);
        while (c - b == 1) {
            b = c;
            c = next_start(p, b);
        }
        std::vector<std::uint8_t> explored;
        for (int pos = b; pos < c; ++pos) {
            const auto v = p.order[pos];
            if (!explored.empty() && !automorphisms_.empty()) {
                auto orbit = orbits(prefix);
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](auto u) { return orbit[u] == orbit[v]; });
                if (equivalent)
                    continue;
            }
            Partition child = p;
            std::swap(child.order[b], child.order[pos]);
            child.starts |= 1u << (b + 1);
            refine(child);
            prefix.push_back(v);
            descend(child, prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    static constexpr std::size_t kMaxStored = 64;

    const BitGraph& g_;
    const std::uint32_t full_;
    CanonicalLabeling best_{};
    Perm best_inverse_{};
    bool have_best_ = false;
    std::vector<Perm> automorphisms_;
};

Partition unit_partition(int n)
{
    Partition p;
    for (int v = 0; v < n; ++v)
        p.order[v] = static_cast<std::uint8_t>(v);
    return p;
}

}  // namespace

CanonicalLabeling canonical_labeling(const BitGraph& g)
{
    return Search(g).run(unit_partition(g.n));
}

CanonicalCode marked_canonical_code(const BitGraph& g, int v)
{
    Partition p = unit_partition(g.n);
    std::swap(p.order[0], p.order[v]);
    if (g.n > 1)
        p.starts |= 2u;
    return Search(g).run(p).code;
}

std::string canonical_key(const MolecularGraph& g)
{
    const auto bits = BitGraph::from(g);
    const auto lab = canonical_labeling(bits);
    std::vector<Vertex> perm(g.order());
    for (int v = 0; v < g.order(); ++v)
        perm[v] = lab.label[v];
    return to_graph6(relabel(g, perm));
}

}  // namespace molex
