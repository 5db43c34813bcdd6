// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "molex/canonical.hpp"
#include "molex/graph_io.hpp"
#include "molex/lemmas.hpp"
#include "molex/reduction.hpp"
#include "molex/search.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace molex;

namespace {

const std::vector<double> kAlphas{-1, -0.7, -0.5, -0.3, -0.1, 0.3, 0.5, 0.7, 1.3, 1.5, 1.7, 2};
const std::vector<double> kKs{0.1, 0.25, 0.5, 0.75, 1};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs);
    if (!o.detail.empty())
        std::printf("     %s\n", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

std::vector<EnumerationSummary> full_sweep()
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 9;
    for (Variant v : {Variant::Chi, Variant::Platt})
        for (double a : kAlphas)
            o.cases.push_back({v, a});
    for (double k : kKs)
        o.cases.push_back({Variant::Oga, k});
    o.jobs = jobs();
    return exhaustive_verify(o);
}

Outcome reconstruction()
{
    std::size_t graphs = 0, checks = 0, bad = 0;
    for (int n = 5; n <= 8; ++n) {
        EnumerationOptions o;
        o.n = n;
        for_each_graph(o, [&](const MolecularGraph& g) {
            ++graphs;
            const auto test = [&](Variant v, double p) {
                const double direct = evaluate(g, index_for(v, p));
                ++checks;
                if (std::abs(reconstruct(g, v, p) - direct) > 1e-10 * (1 + std::abs(direct)))
                    ++bad;
            };
            for (double a : kAlphas) {
                test(Variant::Chi, a);
                test(Variant::Platt, a);
            }
            for (double k : kKs)
                test(Variant::Oga, k);
        });
    }
    std::ostringstream s;
    s << graphs << " graphs, " << checks << " comparisons, " << bad << " outside 1e-10";
    return {bad == 0, s.str()};
}

Outcome soundness(const std::vector<EnumerationSummary>& sweep)
{
    std::size_t graphs = 0, violations = 0;
    std::string witness;
    for (const auto& s : sweep) {
        graphs += s.graph_count;
        violations += s.violation_count;
        if (!s.violations.empty() && witness.empty())
            witness = " first witness " + s.violations.front().graph6;
    }
    std::ostringstream out;
    out << sweep.size() << " (n, m, bound) summaries, " << graphs << " verdicts, " << violations << " violations"
        << witness;
    return {violations == 0, out.str()};
}

Outcome equality(const std::vector<EnumerationSummary>& sweep)
{
    std::size_t mismatches = 0, holders = 0;
    for (const auto& s : sweep) {
        mismatches += s.mismatch_count;
        holders += s.equality_holders.size();
    }
    bool star_only = false;
    const auto star = canonical_key(build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    for (const auto& s : sweep)
        if (s.n == 5 && s.m == 4 && s.kind == BoundKind::Refined && s.bound_case.variant == Variant::Chi &&
            s.bound_case.parameter == -0.5)
            star_only = s.equality_holders.size() == 1 && s.equality_holders[0].canonical_key == star;
    std::ostringstream out;
    out << holders << " equality holders, " << mismatches << " equality/condition mismatches, K1,4 unique at (5,4): "
        << (star_only ? "yes" : "no");
    return {mismatches == 0 && star_only, out.str()};
}

Outcome congruence_check()
{
    std::size_t graphs = 0, bad = 0;
    for (int n = 2; n <= 8; ++n) {
        EnumerationOptions o;
        o.n = n;
        o.connected = false;
        for_each_graph(o, [&](const MolecularGraph& g) {
            const auto d = degree_census(g);
            if (d.n(0) > 0)
                return;
            ++graphs;
            if (!congruence(n, g.size(), d).consistent)
                ++bad;
        });
    }
    std::ostringstream out;
    out << graphs << " graphs without isolated vertices (connected or not), " << bad << " inconsistent";
    return {bad == 0, out.str()};
}

Outcome lemma_suites()
{
    const auto alphas = alpha_grid(1e-3);
    const auto ks = k_grid(1e-3);
    std::size_t coefficient_violations = coefficient_orderings(Variant::Chi, alphas).size() +
                                         coefficient_orderings(Variant::Platt, alphas).size() +
                                         sign_chart_check(Variant::Platt, alphas).size() +
                                         phi_chain_check(ks).size();
    std::size_t graph_failures = 0, evaluations = 0;
    for (const auto& r : graph_lemma_sweep(5, 8, alphas, ks, false)) {
        graph_failures += r.failures;
        evaluations += r.evaluations;
    }
    std::ostringstream out;
    out << "coefficient clauses: " << coefficient_violations << " violations; per-graph lemmas: " << evaluations
        << " evaluations, " << graph_failures << " failures";
    return {coefficient_violations == 0 && graph_failures == 0, out.str()};
}

Outcome x0_root()
{
    const double x0 = find_x0();
    std::ostringstream out;
    out.precision(10);
    out << "x0 = " << x0;
    return {x0 >= 1.8504 && x0 <= 1.8514 && std::abs(x0 - 1.8509) <= 5e-4, out.str()};
}

Outcome enumerator()
{
    bool ok = true;
    std::ostringstream out;
    for (int n = 1; n <= 7; ++n) {
        for (bool connected : {true, false}) {
            std::vector<long long> mine(n * (n - 1) / 2 + 1, 0);
            EnumerationOptions o;
            o.n = n;
            o.connected = connected;
            for_each_graph(o, [&](const MolecularGraph& g) { ++mine[g.size()]; });
            if (mine != oracle::labeled_bucket_counts(n, connected)) {
                ok = false;
                out << "mismatch at n=" << n << (connected ? " connected; " : " all; ");
            }
            if (!connected && mine != oracle::burnside_counts(n)) {
                ok = false;
                out << "Burnside mismatch at n=" << n << "; ";
            }
        }
    }
    const std::vector<long long> expected{3, 5, 9, 18, 35};
    out << "trees n=5..9:";
    for (int n = 5; n <= 9; ++n) {
        const auto c = static_cast<long long>(count_graphs(n, n - 1));
        out << ' ' << c;
        ok = ok && c == expected[n - 5] && c == oracle::pruefer_tree_classes(n);
    }
    return {ok, out.str()};
}

struct ExtremalCase {
    std::string label;
    int n, m;
    Variant variant;
    double parameter;
};

Outcome extremal()
{
    const std::vector<ExtremalCase> required{
        {"(5,4,res 0) chi a=-0.5", 5, 4, Variant::Chi, -0.5},
        {"(5,4,res 0) chi a=0.5", 5, 4, Variant::Chi, 0.5},
        {"(5,4,res 0) chi a=1.5", 5, 4, Variant::Chi, 1.5},
        {"(5,4,res 0) platt a=1.5", 5, 4, Variant::Platt, 1.5},
        {"(5,4,res 0) oga k=1", 5, 4, Variant::Oga, 1},
        {"(6,5,res 2) chi high a=2", 6, 5, Variant::Chi, 2},
        {"(6,5,res 2) platt high a=1.5", 6, 5, Variant::Platt, 1.5},
        {"(6,5,res 2) chi mid a=0.5", 6, 5, Variant::Chi, 0.5},
        {"(6,5,res 2) chi neg a=-0.5", 6, 5, Variant::Chi, -0.5},
        {"(6,6,res 0) chi a=0.5", 6, 6, Variant::Chi, 0.5},
        {"(13,12,res 1) chi neg a=-0.5", 13, 12, Variant::Chi, -0.5},
    };
    bool ok = true;
    int built = 0;
    std::ostringstream out;
    for (const auto& c : required) {
        const auto bc = BoundCase::make(c.variant, c.parameter, (c.n + c.m) % 3);
        const auto r = build_extremal(c.n, c.m, bc);
        if (r.graph && r.report && std::abs(r.report->gap) <= 1e-9 && r.report->extremal_condition_met) {
            ++built;
            out << "\n       ok      " << c.label << " -> " << to_graph6(*r.graph);
            continue;
        }
        ok = false;
        out << "\n       missing " << c.label << ": " << r.reason;
        if (c.n <= 9) {
            VerifyOptions v;
            v.n_min = v.n_max = c.n;
            v.cases = {{c.variant, c.parameter}};
            v.leading = v.named_indices = false;
            for (const auto& s : exhaustive_verify(v))
                if (s.m == c.m)
                    out << " (exhaustive search: bound " << (s.attained() ? "attained" : "unattained") << " over "
                        << s.graph_count << " graphs)";
        }
    }

    // (7,6,res 1) must be infeasible and the bound unattained by every graph.
    const auto neg = BoundCase::make(Variant::Chi, -0.5, 1);
    const bool infeasible = !build_extremal(7, 6, neg).graph.has_value();
    VerifyOptions v;
    v.n_min = v.n_max = 7;
    v.cases = {{Variant::Chi, -0.5}, {Variant::Chi, 0.5}, {Variant::Platt, -0.5}, {Variant::Oga, 0.5}};
    v.leading = v.named_indices = false;
    bool unattained = true;
    for (const auto& s : exhaustive_verify(v))
        if (s.m == 6)
            unattained = unattained && !s.attained();
    out << "\n       (7,6,res 1) neg: construction " << (infeasible ? "infeasible" : "found a graph")
        << ", exhaustive n=7: " << (unattained ? "unattained" : "attained");
    ok = ok && infeasible && unattained;
    std::ostringstream head;
    head << built << " of " << required.size() << " required cases constructed" << out.str();
    return {ok, head.str()};
}

}  // namespace

int main()
{
    criterion(1, "reconstruction identity, connected graphs 5 <= n <= 8, default grids", reconstruction);
    std::vector<EnumerationSummary> sweep;
    const auto start = std::chrono::steady_clock::now();
    sweep = full_sweep();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("     exhaustive sweep 5 <= n <= 9 over all variants took %.1fs\n", secs);
    criterion(2, "bound soundness, 5 <= n <= 9, all variants, tol 1e-9", [&] { return soundness(sweep); });
    criterion(3, "equality iff extremal condition over the same sweep", [&] { return equality(sweep); });
    criterion(4, "congruence m + n = n3 - n2 (mod 3), n <= 8", congruence_check);
    criterion(5, "lemma suites at grid step 1e-3, per-graph lemmas n <= 8", lemma_suites);
    criterion(6, "x0 root within 5e-4 of 1.8509", x0_root);
    criterion(7, "enumerator against independent oracles", enumerator);
    criterion(8, "extremal constructions", extremal);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
