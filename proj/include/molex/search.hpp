#pragma once

#include "molex/bounds.hpp"
#include "molex/canonical.hpp"
#include "molex/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace molex {

inline constexpr int kMaxEnumerationOrder = 12;

struct EnumerationOptions {
    int n = 1;
    int min_edges = 0;
    int max_edges = -1;  ///< negative means 2n
    bool connected = true;
    int jobs = 1;        ///< worker threads for connected enumeration
};

using GraphVisitor = std::function<void(const MolecularGraph&)>;

/// Streams exactly one graph per isomorphism class of simple graphs on n
/// vertices with max degree 4 and an edge count in range, in a deterministic
/// order. Connected graphs come from canonical augmentation by one vertex at
/// a time; disconnected ones are assembled from multisets of components.
/// The visitor runs on the calling thread.
void for_each_graph(const EnumerationOptions& options, const GraphVisitor& visit);

std::vector<MolecularGraph> enumerate(int n, int m, bool connected = true);
std::size_t count_graphs(int n, int m, bool connected = true);

/// Connected enumeration is split on the graphs of a fixed small order; each
/// seed's subtree is independent. Concatenating the seeds' outputs in order
/// reproduces the serial order.
std::vector<BitGraph> partition_seeds(const EnumerationOptions& options);
void for_each_in_partition(const BitGraph& seed, const EnumerationOptions& options,
                           const std::function<void(const BitGraph&)>& visit);

/// Runs `work` once per seed on up to `jobs` threads and returns the results
/// in seed order.
template <class Result>
std::vector<Result> map_partitions(const EnumerationOptions& options,
                                   const std::function<Result(const BitGraph& seed)>& work)
{
    const auto seeds = partition_seeds(options);
    std::vector<Result> results(seeds.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            results[i] = work(seeds[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < seeds.size(); i = next++)
                results[i] = work(seeds[i]);
        });
    for (auto& w : workers)
        w.join();
    return results;
}

// --- exhaustive verification -------------------------------------------

struct VerifyCase {
    Variant variant;
    double parameter;
};

struct VerifyOptions {
    int n_min = 5;
    int n_max = 8;
    std::vector<VerifyCase> cases;
    bool leading = true;      ///< also check the leading-term bound (chi, platt)
    bool named_indices = true; ///< also check M1, H and chi bounds
    double tol = 1e-9;
    int jobs = 1;
    std::size_t max_reports = 20;  ///< cap on stored violation reports per summary
};

struct EqualityHolder {
    std::string canonical_key;
    DegreeCensus degrees;
    EdgeCensus edges;
};

/// Aggregate over all connected graphs of one (n, m) for one bound.
struct EnumerationSummary {
    int n = 0;
    int m = 0;
    BoundKind kind = BoundKind::Refined;
    BoundCase bound_case{};
    double bound_value = 0;
    std::size_t graph_count = 0;
    double min_index = 0;
    double max_index = 0;
    std::size_t condition_count = 0;
    std::vector<EqualityHolder> equality_holders;
    std::size_t violation_count = 0;  ///< graphs with gap < -tol
    std::size_t mismatch_count = 0;   ///< equality without the condition or the reverse
    std::vector<BoundReport> violations;
    std::vector<BoundReport> mismatches;

    bool attained() const { return !equality_holders.empty(); }
    bool clean() const { return violation_count == 0 && mismatch_count == 0; }
};

/// Checks every requested bound on every connected molecular (n, m)-graph with
/// n_min <= n <= n_max and n - 1 <= m <= 2n. Chi at alpha = 1 gets only the
/// leading-term bound; Platt at alpha = 1 throws UnsupportedCase.
std::vector<EnumerationSummary> exhaustive_verify(const VerifyOptions& options);

// --- graph-level lemma sweeps -----------------------------------------

struct LemmaCounterexample {
    std::string graph6;
    double parameter;  ///< NaN for the parameter-free structural inequality
};

struct GraphLemmaReport {
    std::string check;  ///< "residual-chi", "residual-platt", "residual-oga" or "structural"
    bool connected;     ///< false for the sweep over disconnected graphs
    std::size_t graphs = 0;
    std::size_t evaluations = 0;
    std::size_t failures = 0;
    std::vector<LemmaCounterexample> examples;  ///< first few failures
};

/// Runs the per-graph lemmas on every graph with n2 + n3 >= 2 (all graphs
/// for the structural inequality) and n_min <= n <= n_max, at every alpha and
/// k of the grids. Disconnected graphs are swept separately when asked;
/// their failures are counterexamples to an unstated connectivity
/// assumption rather than defects.
std::vector<GraphLemmaReport> graph_lemma_sweep(int n_min, int n_max, std::span<const double> alphas,
                                                std::span<const double> ks, bool include_disconnected,
                                                std::size_t max_examples = 20);

// --- constructions -----------------------------------------------------

struct PairCount {
    int i;
    int j;
    int count;
};

enum class RealizationStatus { Realized, Infeasible, Undetermined };

struct Realization {
    RealizationStatus status = RealizationStatus::Infeasible;
    std::optional<MolecularGraph> graph;
    std::string reason;  ///< why no graph exists, when infeasible
};

/// Finds a connected graph with the given degree census and, optionally,
/// exact counts for some degree pairs. Censuses with only degrees 1 and 4 plus
/// at most one vertex of degree 2 or 3 are decided exactly by construction;
/// others by backtracking with a node budget (Undetermined if exhausted).
Realization realize_census(const DegreeCensus& degrees, std::span<const PairCount> constraints = {});

/// Degree census and pair constraints of the equality configuration of a case.
struct ExtremalTarget {
    DegreeCensus degrees;
    std::vector<PairCount> constraints;
};

/// Throws DomainError when n, m or the residue are out of range; returns
/// nullopt with no census (negative counts) possible.
std::optional<ExtremalTarget> extremal_target(long long n, long long m, const BoundCase& c);

struct ExtremalResult {
    std::optional<MolecularGraph> graph;
    std::optional<BoundReport> report;
    std::string reason;
};

/// Builds a graph meeting the equality configuration of the case and checks
/// it with `verdict` (|gap| <= tol and condition met) before returning it.
ExtremalResult build_extremal(long long n, long long m, const BoundCase& c, double tol = 1e-9);

}  // namespace molex
