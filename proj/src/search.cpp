#include "molex/search.hpp"

#include "molex/error.hpp"
#include "molex/graph_io.hpp"
#include "molex/indices.hpp"
#include "molex/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace molex {

namespace {

using Row = BitGraph::Row;

constexpr int kSeedOrder = 6;

Row vertex_mask(int n) { return (Row{1} << n) - 1; }

bool connected_without(const BitGraph& g, int removed)
{
    const Row all = vertex_mask(g.n) & ~(Row{1} << removed);
    if (all == 0)
        return true;
    Row seen = all & (~all + 1);
    Row frontier = seen;
    while (frontier) {
        Row next = 0;
        for (Row f = frontier; f; f &= f - 1)
            next |= g.adj[__builtin_ctz(f)];
        next &= all & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

// Degree plus the multiset of neighbor degrees, then the same for each
// neighbor. Packed without collisions into 64 bits.
std::array<std::uint64_t, kMaxCanonicalOrder> vertex_invariants(const BitGraph& g)
{
    std::array<int, kMaxCanonicalOrder> deg{};
    for (int v = 0; v < g.n; ++v)
        deg[v] = g.degree(v);
    static constexpr int kPow5[] = {1, 5, 25, 125};
    std::array<std::uint64_t, kMaxCanonicalOrder> l1{};
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t code = static_cast<std::uint64_t>(deg[v]) * 625;
        for (Row r = g.adj[v]; r; r &= r - 1)
            code += kPow5[deg[__builtin_ctz(r)] - 1];
        l1[v] = code;
    }
    std::array<std::uint64_t, kMaxCanonicalOrder> l2{};
    for (int v = 0; v < g.n; ++v) {
        std::array<std::uint64_t, kMaxDegree> around{};
        int k = 0;
        for (Row r = g.adj[v]; r; r &= r - 1)
            around[k++] = l1[__builtin_ctz(r)];
        std::sort(around.begin(), around.begin() + k);
        std::uint64_t code = l1[v];
        for (int i = 0; i < k; ++i)
            code = code * 3126 + around[i] + 1;
        l2[v] = code;
    }
    return l2;
}

class Augmenter {
public:
    Augmenter(int n, int min_edges, int max_edges) : n_(n), lo_(min_edges), hi_(max_edges) {}

    template <class F>
    void run(const BitGraph& g, int stop_order, F&& emit) const
    {
        extend(g, g.edge_count(), stop_order, emit);
    }

    bool feasible(int order, int edges) const
    {
        const int rest = n_ - order;
        return edges + rest <= hi_ && edges + 4 * rest >= lo_;
    }

private:
    template <class F>
    void extend(const BitGraph& g, int edges, int stop_order, F& emit) const
    {
        if (g.n == stop_order) {
            if (g.n < n_ || (edges >= lo_ && edges <= hi_))
                emit(g);
            return;
        }
        Row open = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) < kMaxDegree)
                open |= Row{1} << v;
        std::vector<CanonicalCode> seen;
        for (Row s = (Row{0} - open) & open; s != 0; s = (s - open) & open) {
            const int k = __builtin_popcount(s);
            if (k > kMaxDegree || !feasible(g.n + 1, edges + k))
                continue;
            BitGraph h = g;
            const int v = h.n++;
            for (Row r = s; r; r &= r - 1)
                h.add_edge(v, __builtin_ctz(r));
            CanonicalCode code;
            if (!accept(h, v, code))
                continue;
            if (std::find(seen.begin(), seen.end(), code) != seen.end())
                continue;
            seen.push_back(code);
            extend(h, edges + k, stop_order, emit);
        }
    }

    // v is the last vertex added. Keep h iff v lies in the orbit of the
    // canonical deletion vertex: the non-cut vertex with the largest
    // (invariant, marked code).
    static bool accept(const BitGraph& h, int v, CanonicalCode& code)
    {
        const auto inv = vertex_invariants(h);
        std::vector<int> ties;
        for (int u = 0; u < h.n; ++u) {
            if (u == v || inv[u] < inv[v])
                continue;
            if (!connected_without(h, u))
                continue;
            if (inv[u] > inv[v])
                return false;
            ties.push_back(u);
        }
        code = marked_canonical_code(h, v);
        for (int u : ties)
            if (marked_canonical_code(h, u) > code)
                return false;
        return true;
    }

    int n_;
    int lo_;
    int hi_;
};

void check_enumeration(int n, int lo, int hi)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error(ErrorCode::PreconditionFailed, "enumeration needs 1 <= n <= 12");
    if (lo < 0 || hi > 2 * n || lo > hi)
        throw Error(ErrorCode::PreconditionFailed, "edge range must lie in [0, 2n]");
}

int resolved_max(const EnumerationOptions& o) { return o.max_edges < 0 ? 2 * o.n : o.max_edges; }

BitGraph single_vertex()
{
    BitGraph g;
    g.n = 1;
    return g;
}

void for_each_connected(int n, int lo, int hi, int jobs, const std::function<void(const BitGraph&)>& visit)
{
    EnumerationOptions o{n, lo, hi, true, jobs};
    const auto seeds = partition_seeds(o);
    if (jobs <= 1) {
        for (const auto& s : seeds)
            for_each_in_partition(s, o, visit);
        return;
    }
    std::deque<std::future<std::vector<BitGraph>>> pending;
    std::size_t next = 0;
    auto launch = [&] {
        const BitGraph seed = seeds[next++];
        pending.push_back(std::async(std::launch::async, [seed, o] {
            std::vector<BitGraph> out;
            for_each_in_partition(seed, o, [&](const BitGraph& g) { out.push_back(g); });
            return out;
        }));
    };
    while (next < seeds.size() && pending.size() < static_cast<std::size_t>(2 * jobs))
        launch();
    while (!pending.empty()) {
        auto batch = pending.front().get();
        pending.pop_front();
        if (next < seeds.size())
            launch();
        for (const auto& g : batch)
            visit(g);
    }
}

std::vector<BitGraph> connected_list(int k)
{
    std::vector<BitGraph> out;
    for_each_connected(k, 0, 2 * k, 1, [&](const BitGraph& g) { out.push_back(g); });
    return out;
}

using Part = std::pair<int, int>;  // (order, index into the list of that order)

// Multisets of components with total order `remaining`, as non-increasing
// part sequences bounded above by `bound`.
void component_multisets(int remaining, Part bound, const std::vector<std::vector<BitGraph>>& lists,
                         std::vector<Part>& current, std::vector<std::vector<Part>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int order = std::min(remaining, bound.first); order >= 1; --order) {
        const int count = static_cast<int>(lists[order].size());
        const int top = order == bound.first ? std::min(bound.second, count - 1) : count - 1;
        for (int i = top; i >= 0; --i) {
            current.emplace_back(order, i);
            component_multisets(remaining - order, {order, i}, lists, current, out);
            current.pop_back();
        }
    }
}

void append_component(BitGraph& g, const BitGraph& part)
{
    const int offset = g.n;
    for (int v = 0; v < part.n; ++v)
        g.adj[offset + v] = part.adj[v] << offset;
    g.n += part.n;
}

void for_each_any(int n, int lo, int hi, int jobs, const GraphVisitor& visit)
{
    auto emit_if = [&](const BitGraph& g) {
        const int e = g.edge_count();
        if (e >= lo && e <= hi)
            visit(g.to_graph());
    };
    std::vector<std::vector<BitGraph>> lists(n / 2 + 1);
    for (int k = 1; k <= n / 2; ++k)
        lists[k] = connected_list(k);

    for (int largest = n; largest >= 1; --largest) {
        if (largest == n) {
            for_each_connected(n, lo, hi, jobs, [&](const BitGraph& g) { visit(g.to_graph()); });
            continue;
        }
        std::vector<std::vector<Part>> rests;
        std::vector<Part> current;
        if (2 * largest > n) {
            component_multisets(n - largest, {n - largest, 1 << 30}, lists, current, rests);
            for_each_connected(largest, 0, std::min(hi, 2 * largest), 1, [&](const BitGraph& head) {
                for (const auto& rest : rests) {
                    BitGraph g = head;
                    for (auto [order, i] : rest)
                        append_component(g, lists[order][i]);
                    emit_if(g);
                }
            });
            continue;
        }
        for (int i = static_cast<int>(lists[largest].size()) - 1; i >= 0; --i) {
            rests.clear();
            component_multisets(n - largest, {largest, i}, lists, current, rests);
            for (const auto& rest : rests) {
                BitGraph g = lists[largest][i];
                for (auto [order, j] : rest)
                    append_component(g, lists[order][j]);
                emit_if(g);
            }
        }
    }
}

}  // namespace

std::vector<BitGraph> partition_seeds(const EnumerationOptions& options)
{
    const int hi = resolved_max(options);
    check_enumeration(options.n, options.min_edges, hi);
    const Augmenter aug(options.n, options.min_edges, hi);
    std::vector<BitGraph> seeds;
    const BitGraph root = single_vertex();
    if (!aug.feasible(1, 0))
        return seeds;
    aug.run(root, std::min(options.n, kSeedOrder), [&](const BitGraph& g) { seeds.push_back(g); });
    return seeds;
}

void for_each_in_partition(const BitGraph& seed, const EnumerationOptions& options,
                           const std::function<void(const BitGraph&)>& visit)
{
    const int hi = resolved_max(options);
    check_enumeration(options.n, options.min_edges, hi);
    const Augmenter aug(options.n, options.min_edges, hi);
    aug.run(seed, options.n, visit);
}

void for_each_graph(const EnumerationOptions& options, const GraphVisitor& visit)
{
    const int hi = resolved_max(options);
    check_enumeration(options.n, options.min_edges, hi);
    if (options.connected)
        for_each_connected(options.n, options.min_edges, hi, options.jobs,
                           [&](const BitGraph& g) { visit(g.to_graph()); });
    else
        for_each_any(options.n, options.min_edges, hi, options.jobs, visit);
}

std::vector<MolecularGraph> enumerate(int n, int m, bool connected)
{
    std::vector<MolecularGraph> out;
    for_each_graph({n, m, m, connected, 1}, [&](const MolecularGraph& g) { out.push_back(g); });
    return out;
}

std::size_t count_graphs(int n, int m, bool connected)
{
    std::size_t count = 0;
    for_each_graph({n, m, m, connected, 1}, [&](const MolecularGraph&) { ++count; });
    return count;
}

// --- exhaustive verification -------------------------------------------

namespace {

struct Entry {
    BoundKind kind;
    Variant variant;
    double parameter;
    IndexSpec spec;
    WeightTable table;
};

struct Slot {
    BoundCase bound_case;
    double bound_value;
    std::optional<Rational> exact_bound;
};

Regime leading_regime(double alpha)
{
    if (alpha < 0)
        return Regime::NegAlpha;
    return alpha < 1 ? Regime::MidAlpha : Regime::HighAlpha;
}

std::vector<Entry> verify_entries(const VerifyOptions& o)
{
    std::vector<Entry> entries;
    for (const auto& c : o.cases) {
        const auto spec = index_for(c.variant, c.parameter);
        const bool alpha_one = c.variant != Variant::Oga && c.parameter == 1.0;
        if (alpha_one && c.variant == Variant::Platt)
            throw Error(ErrorCode::UnsupportedCase, "the Platt bounds exclude alpha = 1");
        if (!alpha_one) {
            regime_of(c.variant, c.parameter);
            entries.push_back({BoundKind::Refined, c.variant, c.parameter, spec, WeightTable(spec)});
        }
        if (o.leading && c.variant != Variant::Oga)
            entries.push_back({BoundKind::Leading, c.variant, c.parameter, spec, WeightTable(spec)});
    }
    if (o.named_indices) {
        const std::array<std::pair<BoundKind, IndexSpec>, 3> cor{
            std::pair{BoundKind::FirstZagreb, IndexSpec(IndexKind::FirstZagreb)},
            std::pair{BoundKind::Harmonic, IndexSpec(IndexKind::Harmonic)},
            std::pair{BoundKind::SumConnectivity, IndexSpec(IndexKind::SumConnectivity)}};
        const std::array<double, 3> alphas{1.0, -1.0, -0.5};
        for (int k = 0; k < 3; ++k)
            entries.push_back({cor[k].first, Variant::Chi, alphas[k], cor[k].second, WeightTable(cor[k].second)});
    }
    return entries;
}

Slot make_slot(const Entry& e, int n, int m)
{
    const int residue = (n + m) % 3;
    switch (e.kind) {
    case BoundKind::Refined: {
        const auto c = BoundCase::make(e.variant, e.parameter, residue);
        return {c, refined_bound(c, n, m), exact_refined_bound(c, n, m)};
    }
    case BoundKind::Leading: {
        const auto b = leading_bound(e.variant, n, m, e.parameter);
        return {{e.variant, e.parameter, residue, leading_regime(e.parameter), b.direction},
                b.value,
                exact_leading_bound(e.variant, n, m, e.parameter)};
    }
    default: break;
    }
    const auto b = named_index_bounds(n, m);
    const BoundCase c{Variant::Chi, e.parameter, residue, leading_regime(e.parameter),
                      e.kind == BoundKind::FirstZagreb ? Direction::Upper : Direction::Lower};
    switch (e.kind) {
    case BoundKind::FirstZagreb: return {c, static_cast<double>(b.m1_upper), Rational(b.m1_upper)};
    case BoundKind::Harmonic: return {c, b.harmonic_lower, std::nullopt};
    default: return {c, b.sum_connectivity_lower, std::nullopt};
    }
}

BoundReport make_report(const MolecularGraph& g, const Entry& e, const Slot& s, double value, const Comparison& cmp,
                        bool condition)
{
    BoundReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.kind = e.kind;
    r.bound_case = s.bound_case;
    r.index = e.spec.name();
    r.index_value = value;
    r.bound_value = s.bound_value;
    r.gap = cmp.gap;
    r.equality = cmp.equality;
    r.extremal_condition_met = condition;
    return r;
}

class NVerifier {
public:
    NVerifier(int n, const std::vector<Entry>& entries, const VerifyOptions& o) : n_(n), entries_(entries), opt_(o)
    {
        for (int m = n - 1; m <= 2 * n; ++m)
            for (const auto& e : entries)
                slots_.push_back(make_slot(e, n, m));
    }

    std::vector<EnumerationSummary> blank() const
    {
        std::vector<EnumerationSummary> out(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            auto& s = out[i];
            s.n = n_;
            s.m = n_ - 1 + static_cast<int>(i / entries_.size());
            s.kind = entries_[i % entries_.size()].kind;
            s.bound_case = slots_[i].bound_case;
            s.bound_value = slots_[i].bound_value;
        }
        return out;
    }

    void visit(const MolecularGraph& g, std::vector<EnumerationSummary>& out) const
    {
        const auto dc = degree_census(g);
        const auto ec = edge_census(g);
        const bool leading = leading_condition(dc);
        const std::size_t base = static_cast<std::size_t>(g.size() - (n_ - 1)) * entries_.size();
        std::optional<std::string> key;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            const auto& e = entries_[k];
            const auto& slot = slots_[base + k];
            auto& sum = out[base + k];
            const double value = e.table.evaluate(g);
            const auto exact_index = slot.exact_bound ? evaluate_exact(g, e.spec) : std::nullopt;
            const auto cmp = compare_to_bound(slot.bound_case.direction, value, slot.bound_value, opt_.tol,
                                              exact_index, slot.exact_bound);
            const bool condition =
                e.kind == BoundKind::Refined ? extremal_condition(dc, ec, slot.bound_case) : leading;
            if (sum.graph_count == 0) {
                sum.min_index = sum.max_index = value;
            } else {
                sum.min_index = std::min(sum.min_index, value);
                sum.max_index = std::max(sum.max_index, value);
            }
            ++sum.graph_count;
            if (condition)
                ++sum.condition_count;
            if (cmp.equality) {
                if (!key)
                    key = canonical_key(g);
                sum.equality_holders.push_back({*key, dc, ec});
            }
            if (cmp.gap < -opt_.tol) {
                ++sum.violation_count;
                if (sum.violations.size() < opt_.max_reports)
                    sum.violations.push_back(make_report(g, e, slot, value, cmp, condition));
            }
            if (cmp.equality != condition) {
                ++sum.mismatch_count;
                if (sum.mismatches.size() < opt_.max_reports)
                    sum.mismatches.push_back(make_report(g, e, slot, value, cmp, condition));
            }
        }
    }

    void merge(std::vector<EnumerationSummary>& into, std::vector<EnumerationSummary>&& part) const
    {
        for (std::size_t i = 0; i < into.size(); ++i) {
            auto& a = into[i];
            auto& b = part[i];
            if (b.graph_count == 0)
                continue;
            if (a.graph_count == 0) {
                a.min_index = b.min_index;
                a.max_index = b.max_index;
            } else {
                a.min_index = std::min(a.min_index, b.min_index);
                a.max_index = std::max(a.max_index, b.max_index);
            }
            a.graph_count += b.graph_count;
            a.condition_count += b.condition_count;
            a.violation_count += b.violation_count;
            a.mismatch_count += b.mismatch_count;
            std::move(b.equality_holders.begin(), b.equality_holders.end(), std::back_inserter(a.equality_holders));
            for (auto& r : b.violations)
                if (a.violations.size() < opt_.max_reports)
                    a.violations.push_back(std::move(r));
            for (auto& r : b.mismatches)
                if (a.mismatches.size() < opt_.max_reports)
                    a.mismatches.push_back(std::move(r));
        }
    }

private:
    int n_;
    const std::vector<Entry>& entries_;
    const VerifyOptions& opt_;
    std::vector<Slot> slots_;
};

}  // namespace

std::vector<EnumerationSummary> exhaustive_verify(const VerifyOptions& options)
{
    if (options.n_min < 5 || options.n_max > kMaxEnumerationOrder || options.n_min > options.n_max)
        throw Error(ErrorCode::PreconditionFailed, "verification needs 5 <= n_min <= n_max <= 12");
    const auto entries = verify_entries(options);
    std::vector<EnumerationSummary> out;
    if (entries.empty())
        return out;
    for (int n = options.n_min; n <= options.n_max; ++n) {
        const NVerifier verifier(n, entries, options);
        const EnumerationOptions eo{n, n - 1, 2 * n, true, options.jobs};
        auto parts = map_partitions<std::vector<EnumerationSummary>>(eo, [&](const BitGraph& seed) {
            auto local = verifier.blank();
            for_each_in_partition(seed, eo, [&](const BitGraph& g) { verifier.visit(g.to_graph(), local); });
            return local;
        });
        auto merged = verifier.blank();
        for (auto& p : parts)
            verifier.merge(merged, std::move(p));
        std::move(merged.begin(), merged.end(), std::back_inserter(out));
    }
    return out;
}

// --- graph-level lemma sweeps -----------------------------------------

std::vector<GraphLemmaReport> graph_lemma_sweep(int n_min, int n_max, std::span<const double> alphas,
                                                std::span<const double> ks, bool include_disconnected,
                                                std::size_t max_examples)
{
    if (n_min < 5 || n_max > kMaxEnumerationOrder || n_min > n_max)
        throw Error(ErrorCode::PreconditionFailed, "lemma sweeps need 5 <= n_min <= n_max <= 12");
    std::vector<CoefficientTable> chi;
    std::vector<CoefficientTable> platt;
    std::vector<CoefficientTable> oga;
    for (double a : alphas) {
        if (a == 1.0 || a == 0.0 || a < -1.0 || a > 2.0)
            throw Error(ErrorCode::DomainError, "alpha outside [-1,0) u (0,1) u (1,2]");
        chi.push_back(CoefficientTable::build(Variant::Chi, a));
        platt.push_back(CoefficientTable::build(Variant::Platt, a));
    }
    for (double k : ks) {
        if (!(k > 0.0 && k <= 1.0))
            throw Error(ErrorCode::DomainError, "k outside (0,1]");
        oga.push_back(CoefficientTable::build(Variant::Oga, k));
    }

    std::vector<GraphLemmaReport> out;
    for (bool connected : {true, false}) {
        if (!connected && !include_disconnected)
            break;
        const std::size_t base = out.size();
        for (const char* name : {"residual-chi", "residual-platt", "residual-oga", "structural"})
            out.push_back({name, connected});
        auto record = [&](GraphLemmaReport& r, bool ok, const MolecularGraph& g, double p) {
            ++r.evaluations;
            if (ok)
                return;
            ++r.failures;
            if (r.examples.size() < max_examples)
                r.examples.push_back({to_graph6(g), p});
        };
        for (int n = n_min; n <= n_max; ++n) {
            for_each_graph({n, 0, 2 * n, connected, 1}, [&](const MolecularGraph& g) {
                if (!connected && is_connected(g))
                    return;
                const auto dc = degree_census(g);
                const auto ec = edge_census(g);
                auto& structural = out[base + 3];
                ++structural.graphs;
                record(structural, structural_inequality(ec), g, std::numeric_limits<double>::quiet_NaN());
                if (dc.n(2) + dc.n(3) < 2)
                    return;
                const std::array<const std::vector<CoefficientTable>*, 3> tables{&chi, &platt, &oga};
                for (int c = 0; c < 3; ++c) {
                    auto& r = out[base + c];
                    ++r.graphs;
                    for (const auto& t : *tables[c])
                        record(r, c < 2 ? residual_check(dc, ec, t) : oga_residual_check(dc, ec, t), g, t.parameter);
                }
            });
        }
    }
    return out;
}

// --- constructions -----------------------------------------------------

namespace {

using EdgeList = std::vector<Edge>;

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool erdos_gallai(std::vector<int> d)
{
    std::sort(d.rbegin(), d.rend());
    const long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0)
        return false;
    long long left = 0;
    const int n = static_cast<int>(d.size());
    for (int k = 1; k <= n; ++k) {
        left += d[k - 1];
        long long right = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i)
            right += std::min(d[i], k);
        if (left > right)
            return false;
    }
    return true;
}

EdgeList havel_hakimi(const std::vector<int>& degrees)
{
    const int n = static_cast<int>(degrees.size());
    std::vector<int> residual = degrees;
    EdgeList edges;
    for (;;) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residual[a] > residual[b]; });
        const int u = order[0];
        const int r = residual[u];
        if (r == 0)
            return edges;
        residual[u] = 0;
        for (int i = 1; i <= r; ++i) {
            const int v = order[i];
            --residual[v];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
}

std::vector<int> component_labels(int n, const EdgeList& edges)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges)
        parent[find(u)] = find(v);
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v)
        label[v] = find(v);
    return label;
}

bool connected_after_removal(int n, const EdgeList& edges, std::size_t skip, int a, int b)
{
    EdgeList rest;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (i != skip)
            rest.push_back(edges[i]);
    const auto label = component_labels(n, rest);
    return label[a] == label[b];
}

// Degree-preserving 2-switches that merge components until one remains.
// Needs every degree >= 1 and at least n - 1 edges.
void connect_by_switches(int n, EdgeList& edges)
{
    for (;;) {
        const auto label = component_labels(n, edges);
        std::map<int, std::pair<int, int>> size;  // root -> (vertices, edges)
        for (int v = 0; v < n; ++v)
            ++size[label[v]].first;
        for (auto [u, v] : edges)
            ++size[label[u]].second;
        if (size.size() <= 1)
            return;
        int cyclic = -1;
        for (auto [root, ve] : size)
            if (ve.second >= ve.first) {
                cyclic = root;
                break;
            }
        if (cyclic < 0)
            throw std::logic_error("no component with a cycle");
        std::size_t ab = edges.size();
        for (std::size_t i = 0; i < edges.size() && ab == edges.size(); ++i)
            if (label[edges[i].first] == cyclic &&
                connected_after_removal(n, edges, i, edges[i].first, edges[i].second))
                ab = i;
        std::size_t cd = edges.size();
        for (std::size_t i = 0; i < edges.size() && cd == edges.size(); ++i)
            if (label[edges[i].first] != cyclic)
                cd = i;
        const auto [a, b] = edges[ab];
        const auto [c, d] = edges[cd];
        edges[ab] = {std::min(a, c), std::max(a, c)};
        edges[cd] = {std::min(b, d), std::max(b, d)};
    }
}

struct Constraints {
    std::array<std::array<int, kMaxDegree + 1>, kMaxDegree + 1> limit;

    Constraints()
    {
        for (auto& row : limit)
            row.fill(-1);
    }

    std::optional<int> get(int i, int j) const
    {
        const int v = limit[i][j];
        return v < 0 ? std::nullopt : std::optional<int>(v);
    }

    bool satisfied_by(const EdgeCensus& x) const
    {
        for (int i = 1; i <= kMaxDegree; ++i)
            for (int j = i; j <= kMaxDegree; ++j)
                if (limit[i][j] >= 0 && x.x(i, j) != limit[i][j])
                    return false;
        return true;
    }

    bool only_on(std::initializer_list<std::pair<int, int>> allowed) const
    {
        for (int i = 1; i <= kMaxDegree; ++i)
            for (int j = i; j <= kMaxDegree; ++j) {
                if (limit[i][j] < 0)
                    continue;
                if (std::none_of(allowed.begin(), allowed.end(), [&](auto p) {
                        return ordered(p.first, p.second) == std::pair{i, j};
                    }))
                    return false;
            }
        return true;
    }
};

Realization infeasible(std::string reason) { return {RealizationStatus::Infeasible, std::nullopt, std::move(reason)}; }

void add_reason(std::vector<std::string>& reasons, std::string r)
{
    if (std::find(reasons.begin(), reasons.end(), r) == reasons.end())
        reasons.push_back(std::move(r));
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out;
}

// Non-increasing sequences in [1, 4] of the given length and sum, largest first.
void core_sequences(int length, int sum, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (length == 0) {
        if (sum == 0)
            out.push_back(cur);
        return;
    }
    for (int d = std::min(cap, sum - (length - 1)); d >= 1; --d) {
        if (d * length < sum)
            break;
        cur.push_back(d);
        core_sequences(length - 1, sum - d, d, cur, out);
        cur.pop_back();
    }
}

// Degree-4 vertices plus at most one vertex of degree 2 or 3, the rest leaves.
// Strip the leaves; what remains is the degree-4 core J plus the special
// vertex, and the census holds iff a connected J with matching degrees exists.
Realization realize_pattern(const DegreeCensus& d, const Constraints& cons)
{
    const int n1 = d.n(1);
    const int n4 = d.n(4);
    const int s_deg = d.n(2) ? 2 : d.n(3) ? 3 : 0;
    const bool has_s = s_deg > 0;
    std::vector<std::string> reasons;

    for (int s_core = s_deg; s_core >= (has_s ? 1 : 0); --s_core) {
        const int ls = s_deg - s_core;
        if (has_s) {
            if (auto need = cons.get(1, s_deg); need && *need != ls)
                continue;
            if (auto need = cons.get(s_deg, 4); need && *need != s_core)
                continue;
        }
        std::ostringstream what;
        if (s_core > n4) {
            what << "the degree-" << s_deg << " vertex needs " << s_core << " degree-4 neighbours but only " << n4
                 << (n4 == 1 ? " exists" : " exist");
            add_reason(reasons, what.str());
            continue;
        }
        const int leaves = n1 - ls;
        if (leaves < 0) {
            what << "the degree-" << s_deg << " vertex needs " << ls << " leaves but only " << n1 << " exist";
            add_reason(reasons, what.str());
            continue;
        }
        const int j = n4 + (has_s ? 1 : 0);
        const int core_sum = 4 * n4 - leaves;
        if (j == 1) {
            if (core_sum != 0) {
                add_reason(reasons, "a single degree-4 vertex needs exactly four leaves");
                continue;
            }
            EdgeList edges;
            for (int v = 1; v <= 4; ++v)
                edges.emplace_back(0, v);
            return {RealizationStatus::Realized, build(5, edges), {}};
        }
        const int total = core_sum + s_core;
        const long long max_edges = static_cast<long long>(j) * (j - 1) / 2;
        if (total % 2 != 0 || core_sum < n4 || core_sum > 4 * n4) {
            what << "the " << leaves << " leaves cannot be spread over " << n4
                 << " degree-4 vertices that each keep a non-leaf neighbour";
            add_reason(reasons, what.str());
            continue;
        }
        const int e_j = total / 2;
        if (e_j > max_edges) {
            what << "after removing the leaves, " << j << " vertices must carry " << e_j
                 << " edges but a simple graph allows at most " << max_edges;
            add_reason(reasons, what.str());
            continue;
        }
        if (e_j < j - 1) {
            what << "after removing the leaves, " << e_j << " edges cannot connect " << j << " vertices";
            add_reason(reasons, what.str());
            continue;
        }
        std::vector<std::vector<int>> sequences;
        std::vector<int> cur;
        core_sequences(n4, core_sum, kMaxDegree, cur, sequences);
        for (const auto& seq : sequences) {
            std::vector<int> degrees = seq;
            if (has_s)
                degrees.push_back(s_core);
            if (!erdos_gallai(degrees))
                continue;
            EdgeList edges = havel_hakimi(degrees);
            connect_by_switches(j, edges);
            int next = j;
            for (int v = 0; v < n4; ++v)
                for (int k = seq[v]; k < kMaxDegree; ++k)
                    edges.emplace_back(v, next++);
            if (has_s)
                for (int k = 0; k < ls; ++k)
                    edges.emplace_back(n4, next++);
            auto g = build(next, edges);
            if (degree_census(g) == d && cons.satisfied_by(edge_census(g)) && is_connected(g))
                return {RealizationStatus::Realized, std::move(g), {}};
            throw std::logic_error("pattern construction produced the wrong census");
        }
        add_reason(reasons, "no simple graph on the non-leaf vertices has the required degrees");
    }
    if (reasons.empty())
        reasons.push_back("the pair constraints contradict the degree of the special vertex");
    return infeasible(join(reasons));
}

class Backtracker {
public:
    static constexpr long long kBudget = 2'000'000;

    Backtracker(const DegreeCensus& d, const Constraints& cons) : cons_(cons)
    {
        for (int deg = kMaxDegree; deg >= 1; --deg)
            for (int k = 0; k < d.n(deg); ++k)
                target_.push_back(deg);
        n_ = static_cast<int>(target_.size());
        residual_ = target_;
        adj_.assign(n_, 0);
    }

    Realization run()
    {
        if (n_ > 64)
            return {RealizationStatus::Undetermined, std::nullopt, "census too large for backtracking"};
        if (solve()) {
            EdgeList edges;
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v)
                    if (adj_[u] >> v & 1)
                        edges.emplace_back(u, v);
            return {RealizationStatus::Realized, build(n_, edges), {}};
        }
        if (exhausted_)
            return {RealizationStatus::Undetermined, std::nullopt, "backtracking budget exhausted"};
        return infeasible("no connected graph has this census and these pair counts (exhaustive search)");
    }

private:
    using Mask = std::uint64_t;

    bool solve()
    {
        if (++nodes_ > kBudget) {
            exhausted_ = true;
            return false;
        }
        int u = 0;
        while (u < n_ && residual_[u] == 0)
            ++u;
        if (u == n_)
            return complete();
        std::vector<int> candidates;
        for (int v = u + 1; v < n_; ++v)
            if (residual_[v] > 0 && !(adj_[u] >> v & 1))
                candidates.push_back(v);
        if (static_cast<int>(candidates.size()) < residual_[u])
            return false;
        std::vector<bool> fresh(n_);
        for (int v = 0; v < n_; ++v)
            fresh[v] = adj_[v] == 0;
        std::vector<int> chosen;
        return choose(u, candidates, 0, fresh, 0, chosen);
    }

    // Picks residual(u) neighbors; fresh vertices of one degree class are
    // interchangeable, so only prefixes of each class are tried.
    bool choose(int u, const std::vector<int>& cand, std::size_t from, const std::vector<bool>& fresh,
                unsigned blocked, std::vector<int>& chosen)
    {
        if (static_cast<int>(chosen.size()) == residual_[u]) {
            const int r = residual_[u];
            residual_[u] = 0;
            for (int v : chosen)
                link(u, v, +1);
            if (closed_component_ok(u) && solve())
                return true;
            for (int v : chosen)
                link(u, v, -1);
            residual_[u] = r;
            return false;
        }
        const std::size_t need = residual_[u] - chosen.size();
        for (std::size_t i = from; i + need <= cand.size(); ++i) {
            const int v = cand[i];
            const unsigned cls = 1u << target_[v];
            if (fresh[v] && (blocked & cls))
                continue;
            if (!pair_allowed(target_[u], target_[v], chosen))
                continue;
            chosen.push_back(v);
            const bool ok = choose(u, cand, i + 1, fresh, blocked, chosen);
            chosen.pop_back();
            if (ok || exhausted_)
                return ok;
            if (fresh[v])
                blocked |= cls;
        }
        return false;
    }

    bool pair_allowed(int du, int dv, const std::vector<int>& chosen) const
    {
        const auto [i, j] = ordered(du, dv);
        const int limit = cons_.limit[i][j];
        if (limit < 0)
            return true;
        int extra = 1;
        for (int w : chosen)
            if (ordered(du, target_[w]) == std::pair{i, j})
                ++extra;
        return count_[i][j] + extra <= limit;
    }

    void link(int u, int v, int sign)
    {
        if (sign > 0) {
            adj_[u] |= Mask{1} << v;
            adj_[v] |= Mask{1} << u;
            --residual_[v];
        } else {
            adj_[u] &= ~(Mask{1} << v);
            adj_[v] &= ~(Mask{1} << u);
            ++residual_[v];
        }
        const auto [i, j] = ordered(target_[u], target_[v]);
        count_[i][j] += sign;
    }

    Mask component_of(int u) const
    {
        Mask seen = Mask{1} << u;
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj_[__builtin_ctzll(f)];
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool closed_component_ok(int u) const
    {
        const Mask comp = component_of(u);
        if (std::popcount(comp) == n_)
            return true;
        for (Mask f = comp; f; f &= f - 1)
            if (residual_[__builtin_ctzll(f)] > 0)
                return true;
        return false;
    }

    bool complete() const
    {
        if (std::popcount(component_of(0)) != n_)
            return false;
        for (int i = 1; i <= kMaxDegree; ++i)
            for (int j = i; j <= kMaxDegree; ++j)
                if (cons_.limit[i][j] >= 0 && count_[i][j] != cons_.limit[i][j])
                    return false;
        return true;
    }

    const Constraints& cons_;
    int n_ = 0;
    std::vector<int> target_;
    std::vector<int> residual_;
    std::vector<Mask> adj_;
    std::array<std::array<int, kMaxDegree + 1>, kMaxDegree + 1> count_{};
    long long nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

Realization realize_census(const DegreeCensus& degrees, std::span<const PairCount> constraints)
{
    for (int c : degrees.count)
        if (c < 0)
            throw Error(ErrorCode::PreconditionFailed, "census counts must be non-negative");
    const int n = degrees.order();
    if (n < 1)
        throw Error(ErrorCode::PreconditionFailed, "census must have at least one vertex");
    if (degrees.degree_sum() % 2 != 0)
        throw Error(ErrorCode::PreconditionFailed, "degree sum must be even");
    Constraints cons;
    for (const auto& p : constraints) {
        if (p.i < 1 || p.j < 1 || p.i > kMaxDegree || p.j > kMaxDegree)
            throw Error(ErrorCode::UnknownPair, "pair degrees must lie in 1..4");
        if (p.count < 0)
            throw Error(ErrorCode::InvalidParameter, "pair counts must be non-negative");
        const auto [i, j] = ordered(p.i, p.j);
        if (cons.limit[i][j] >= 0 && cons.limit[i][j] != p.count)
            return infeasible("conflicting constraints on one degree pair");
        cons.limit[i][j] = p.count;
    }
    if (n == 1) {
        if (cons.only_on({}))
            return {RealizationStatus::Realized, build(1, {}), {}};
        return infeasible("a single vertex has no edges");
    }
    if (degrees.n(0) > 0)
        return infeasible("a connected graph on two or more vertices has no isolated vertex");
    if (degrees.degree_sum() / 2 < n - 1)
        return infeasible("too few edges to connect the vertices");

    const int s_deg = degrees.n(2) ? 2 : degrees.n(3) ? 3 : 0;
    const bool pattern = degrees.n(2) + degrees.n(3) <= 1 && degrees.n(4) >= 1 &&
                         (s_deg ? cons.only_on({{1, s_deg}, {s_deg, 4}}) : cons.only_on({}));
    if (pattern)
        return realize_pattern(degrees, cons);
    return Backtracker(degrees, cons).run();
}

std::optional<ExtremalTarget> extremal_target(long long n, long long m, const BoundCase& c)
{
    if (n < 5 || n > (1LL << 20))
        throw Error(ErrorCode::DomainError, "extremal constructions need 5 <= n <= 2^20");
    if (m < n - 1 || m > 2 * n)
        throw Error(ErrorCode::DomainError, "extremal constructions need n - 1 <= m <= 2n");
    if ((n + m) % 3 != c.residue)
        throw Error(ErrorCode::DomainError, "residue does not match (m + n) mod 3");
    ExtremalTarget t;
    const bool high = c.regime == Regime::HighAlpha;
    long long n4 = 0;
    long long n1 = 0;
    switch (c.residue) {
    case 0:
        n4 = (2 * m - n) / 3;
        n1 = n - n4;
        break;
    case 1:
        n4 = (2 * m - n - 2) / 3;
        n1 = n - 1 - n4;
        t.degrees.count[3] = 1;
        t.constraints = {{1, 3, high ? 2 : 0}, {3, 4, high ? 1 : 3}};
        break;
    default:
        n4 = (2 * m - n - 1) / 3;
        n1 = n - 1 - n4;
        t.degrees.count[2] = 1;
        t.constraints = {{1, 2, high ? 1 : 0}, {2, 4, high ? 1 : 2}};
        break;
    }
    if (n4 < 0 || n1 < 0)
        return std::nullopt;
    t.degrees.count[1] = static_cast<int>(n1);
    t.degrees.count[4] = static_cast<int>(n4);
    return t;
}

ExtremalResult build_extremal(long long n, long long m, const BoundCase& c, double tol)
{
    const auto target = extremal_target(n, m, c);
    if (!target)
        return {std::nullopt, std::nullopt, "no degree census with these counts has non-negative entries"};
    const auto r = realize_census(target->degrees, target->constraints);
    std::ostringstream census;
    census << "census (n1,n2,n3,n4) = (" << target->degrees.n(1) << "," << target->degrees.n(2) << ","
           << target->degrees.n(3) << "," << target->degrees.n(4) << ")";
    for (const auto& p : target->constraints)
        census << ", x" << p.i << p.j << " = " << p.count;
    if (!r.graph)
        return {std::nullopt, std::nullopt, census.str() + ": " + r.reason};
    auto report = verdict(*r.graph, c, tol);
    if (!report.equality || !report.extremal_condition_met || std::abs(report.gap) > tol)
        throw std::logic_error("constructed graph does not attain the bound: " + report.graph6);
    return {r.graph, std::move(report), {}};
}

}  // namespace molex
