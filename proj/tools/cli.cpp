#include "cli.hpp"

#include "molex/bounds.hpp"
#include "molex/error.hpp"
#include "molex/graph_io.hpp"
#include "molex/indices.hpp"
#include "molex/lemmas.hpp"
#include "molex/reduction.hpp"
#include "molex/report.hpp"
#include "molex/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace molex::cli {

namespace {

const std::vector<double> kDefaultAlphas{-1, -0.7, -0.5, -0.3, -0.1, 0.3, 0.5, 0.7, 1.3, 1.5, 1.7, 2};
const std::vector<double> kDefaultKs{0.1, 0.25, 0.5, 0.75, 1};
constexpr double kDefaultTol = 1e-9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size())
                throw UsageError("bad range: " + text);
            return {v, v};
        }
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size())
            throw UsageError("bad range: " + text);
        const int hi = std::stoi(b, &used);
        if (used != b.size() || lo > hi)
            throw UsageError("bad range: " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range: " + text);
    }
}

double parse_double(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && std::isfinite(v))
            return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("bad " + what + ": " + text);
}

/// "default" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text, const std::vector<double>& fallback, const std::string& what)
{
    if (text == "default")
        return fallback;
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(item, what));
    if (out.empty())
        throw UsageError("empty " + what + " grid");
    return out;
}

double tolerance(const std::optional<double>& flag)
{
    if (flag) {
        if (!(*flag >= 0))
            throw UsageError("--tol must be non-negative");
        return *flag;
    }
    if (const char* env = std::getenv("MOLEX_TOL")) {
        const double v = parse_double(env, "MOLEX_TOL");
        if (v < 0)
            throw UsageError("MOLEX_TOL must be non-negative");
        return v;
    }
    return kDefaultTol;
}

Variant parse_variant(const std::string& name)
{
    if (name == "chi")
        return Variant::Chi;
    if (name == "platt")
        return Variant::Platt;
    if (name == "oga")
        return Variant::Oga;
    throw UsageError("unknown variant: " + name);
}

IndexSpec parse_index(const std::string& name, std::optional<double> alpha, std::optional<double> k)
{
    static const std::map<std::string, IndexKind> plain{
        {"m1", IndexKind::FirstZagreb},          {"harmonic", IndexKind::Harmonic},
        {"sum-connectivity", IndexKind::SumConnectivity}, {"randic", IndexKind::Randic},
        {"hyper-zagreb", IndexKind::HyperZagreb}, {"em1", IndexKind::ReformulatedZagreb}};
    if (name == "chi")
        return alpha ? IndexSpec(IndexKind::GeneralSumConnectivity, alpha) : IndexSpec(IndexKind::SumConnectivity);
    if (name == "platt")
        return alpha ? IndexSpec(IndexKind::GeneralPlatt, alpha) : IndexSpec(IndexKind::Platt);
    if (name == "general-platt")
        return IndexSpec(IndexKind::GeneralPlatt, alpha);
    if (name == "oga")
        return IndexSpec(IndexKind::Oga, k);
    const auto it = plain.find(name);
    if (it == plain.end())
        throw UsageError("unknown index: " + name);
    if (alpha || k)
        throw UsageError("index " + name + " takes no parameter");
    return IndexSpec(it->second);
}

std::vector<ParsedGraph> read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return read_graphs(in);
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open " + path);
    return read_graphs(file);
}

void write_report_header(std::ostream& out)
{
    out << "n,m,residue,variant,parameter,regime,direction,bound,index,index_value,bound_value,gap,equality,"
           "condition_met,graph6\n";
}

void write_report_row(std::ostream& out, const BoundReport& r)
{
    out << r.n << ',' << r.m << ',' << r.bound_case.residue << ',' << to_string(r.bound_case.variant) << ','
        << csv_number(r.bound_case.parameter) << ',' << to_string(r.bound_case.regime) << ','
        << to_string(r.bound_case.direction) << ',' << to_string(r.kind) << ',' << r.index << ','
        << csv_number(r.index_value) << ',' << csv_number(r.bound_value) << ',' << csv_number(r.gap) << ','
        << (r.equality ? "true" : "false") << ',' << (r.extremal_condition_met ? "true" : "false") << ','
        << r.graph6 << '\n';
}

// --- compute -----------------------------------------------------------

struct ComputeArgs {
    std::string index;
    std::optional<double> alpha;
    std::optional<double> k;
    std::string input = "-";
};

int cmd_compute(const ComputeArgs& a, std::istream& in, std::ostream& out)
{
    const IndexSpec spec = parse_index(a.index, a.alpha, a.k);
    const auto graphs = read_input(a.input, in);
    std::ostringstream body;
    body << "graph6,n,m,index,parameter,value\n";
    for (const auto& pg : graphs) {
        double value = 0;
        try {
            value = evaluate(pg.graph, spec);
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(pg.line) + ": " + e.detail());
        }
        body << to_graph6(pg.graph) << ',' << pg.graph.order() << ',' << pg.graph.size() << ','
             << to_string(spec.kind()) << ',' << (spec.parameter() ? csv_number(*spec.parameter()) : "") << ','
             << csv_number(value) << '\n';
    }
    out << body.str();
    return kOk;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string n = "5..8";
    std::vector<std::string> variants;
    std::vector<std::string> alphas;
    std::string alpha_grid;
    std::vector<std::string> ks;
    std::string k_grid;
    std::optional<double> tol;
    int jobs = 1;
    bool no_leading = false;
    bool no_named = false;
    bool brief = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    const Range n = parse_range(a.n);
    VerifyOptions o;
    o.n_min = n.lo;
    o.n_max = n.hi;
    o.tol = tolerance(a.tol);
    o.jobs = a.jobs;
    o.leading = !a.no_leading;
    o.named_indices = !a.no_named;

    std::vector<double> alphas;
    for (const auto& s : a.alphas)
        alphas.push_back(parse_double(s, "alpha"));
    if (!a.alpha_grid.empty())
        for (double v : parse_grid(a.alpha_grid, kDefaultAlphas, "alpha"))
            alphas.push_back(v);
    std::vector<double> ks;
    for (const auto& s : a.ks)
        ks.push_back(parse_double(s, "k"));
    if (!a.k_grid.empty())
        for (double v : parse_grid(a.k_grid, kDefaultKs, "k"))
            ks.push_back(v);

    std::vector<std::string> variants = a.variants;
    if (variants.empty())
        variants = {"chi", "platt", "oga"};
    for (const auto& name : variants) {
        const Variant v = parse_variant(name);
        if (v == Variant::Oga) {
            for (double k : ks.empty() ? kDefaultKs : ks)
                o.cases.push_back({v, k});
        } else {
            for (double al : alphas.empty() ? kDefaultAlphas : alphas)
                o.cases.push_back({v, al});
        }
    }

    const auto summaries = exhaustive_verify(o);
    std::size_t violations = 0;
    std::size_t mismatches = 0;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : summaries) {
        violations += s.violation_count;
        mismatches += s.mismatch_count;
        auto j = to_json(s);
        if (a.brief)
            j["equality_holders"] = j["equality_holders"].size();
        list.push_back(std::move(j));
        for (const auto& r : s.violations)
            err << "violation: " << to_string(r.kind) << ' ' << r.index << " n=" << r.n << " m=" << r.m
                << " gap=" << csv_number(r.gap) << " graph6=" << r.graph6 << '\n';
        for (const auto& r : s.mismatches)
            err << "equality/condition mismatch: " << to_string(r.kind) << ' ' << r.index << " n=" << r.n
                << " m=" << r.m << " equality=" << r.equality << " condition=" << r.extremal_condition_met
                << " graph6=" << r.graph6 << '\n';
    }
    const bool ok = violations == 0 && mismatches == 0;
    nlohmann::json doc{{"n_min", o.n_min},         {"n_max", o.n_max},       {"tol", o.tol},
                       {"violation_count", violations}, {"mismatch_count", mismatches}, {"ok", ok},
                       {"summaries", std::move(list)}};
    out << doc.dump(2) << '\n';
    return ok ? kOk : kVerificationFailed;
}

// --- lemmas ------------------------------------------------------------

struct LemmaArgs {
    double step = 1e-3;
    std::string chart;
    std::string graphs;
    bool include_disconnected = false;
};

std::vector<double> chart_grid(Variant v, double step)
{
    if (v == Variant::Oga)
        return parameter_grid(0, 1, step, false, true);
    auto grid = parameter_grid(-1, 0, step, true, false);
    const auto upper = parameter_grid(0, 2, step, false, true);
    grid.insert(grid.end(), upper.begin(), upper.end());
    return grid;
}

int cmd_lemmas(const LemmaArgs& a, std::ostream& out)
{
    if (!(a.step > 0 && a.step <= 0.5))
        throw UsageError("--step must lie in (0, 0.5]");
    if (!a.chart.empty()) {
        const Variant v = parse_variant(a.chart);
        const auto grid = chart_grid(v, a.step);
        write_coefficient_csv(out, v, grid);
        return kOk;
    }

    const auto alphas = alpha_grid(a.step);
    const auto ks = k_grid(a.step);
    struct Row {
        std::string check;
        std::string scope;
        std::size_t evaluated;
        std::vector<Violation> violations;
        bool auxiliary = false;
    };
    std::vector<Row> rows;
    for (Variant v : {Variant::Chi, Variant::Platt}) {
        const std::string name(to_string(v));
        rows.push_back({"orderings", name, alphas.size(), coefficient_orderings(v, alphas)});
        rows.push_back({"sign-chart", name, alphas.size(), sign_chart_check(v, alphas)});
        rows.push_back({"proof-chains", name, alphas.size(), proof_chain_check(v, alphas), true});
    }
    rows.push_back({"phi-chains", "oga", ks.size(), phi_chain_check(ks)});

    std::vector<GraphLemmaReport> graph_rows;
    if (!a.graphs.empty()) {
        const Range r = parse_range(a.graphs);
        graph_rows = graph_lemma_sweep(r.lo, r.hi, alphas, ks, a.include_disconnected);
    }

    bool ok = true;
    out << "x0," << csv_number(find_x0()) << '\n';
    out << "check,scope,evaluated,violations\n";
    for (const auto& r : rows) {
        out << r.check << ',' << r.scope << ',' << r.evaluated << ',' << r.violations.size() << '\n';
        if (!r.auxiliary)
            ok = ok && r.violations.empty();
    }
    for (const auto& r : graph_rows) {
        out << r.check << ',' << (r.connected ? "connected" : "disconnected") << ',' << r.evaluations << ','
            << r.failures << '\n';
        if (r.connected)
            ok = ok && r.failures == 0;
    }
    std::vector<Violation> all;
    for (const auto& r : rows)
        all.insert(all.end(), r.violations.begin(), r.violations.end());
    if (!all.empty()) {
        out << '\n';
        write_violations_csv(out, all);
    }
    bool header = false;
    for (const auto& r : graph_rows) {
        for (const auto& c : r.examples) {
            if (!header) {
                out << "\ncheck,scope,graph6,parameter\n";
                header = true;
            }
            out << r.check << ',' << (r.connected ? "connected" : "disconnected") << ',' << c.graph6 << ','
                << (std::isnan(c.parameter) ? "" : csv_number(c.parameter)) << '\n';
        }
    }
    return ok ? kOk : kVerificationFailed;
}

// --- extremal ----------------------------------------------------------

struct ExtremalArgs {
    long long n = 0;
    long long m = 0;
    std::string variant = "chi";
    std::optional<int> residue;
    std::string regime;
    std::optional<double> alpha;
    std::optional<double> k;
    std::optional<double> tol;
};

double representative_parameter(Variant v, const std::string& regime)
{
    if (v == Variant::Oga) {
        if (!regime.empty() && regime != "oga")
            throw UsageError("the oga variant has only the oga regime");
        return 1.0;
    }
    if (regime.empty() || regime == "neg")
        return -0.5;
    if (regime == "mid")
        return 0.5;
    if (regime == "high")
        return 1.5;
    throw UsageError("unknown regime: " + regime);
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out)
{
    const Variant v = parse_variant(a.variant);
    if (v == Variant::Oga && a.alpha)
        throw UsageError("the oga variant takes --k");
    if (v != Variant::Oga && a.k)
        throw UsageError("chi and platt take --alpha");
    double p = 0;
    if (a.alpha || a.k) {
        p = a.alpha ? *a.alpha : *a.k;
        if (!a.regime.empty() && to_string(regime_of(v, p)) != a.regime)
            throw UsageError("--regime does not match the parameter");
    } else {
        p = representative_parameter(v, a.regime);
    }
    const int residue = static_cast<int>(((a.n + a.m) % 3 + 3) % 3);
    if (a.residue && *a.residue != residue)
        throw UsageError("--residue " + std::to_string(*a.residue) + " does not match (m + n) mod 3 = " +
                         std::to_string(residue));
    const auto c = BoundCase::make(v, p, residue);
    const auto result = build_extremal(a.n, a.m, c, tolerance(a.tol));
    if (!result.graph) {
        out << "INFEASIBLE: " << result.reason << '\n';
        return kOk;
    }
    out << to_graph6(*result.graph) << '\n';
    write_report_header(out);
    write_report_row(out, *result.report);
    return kOk;
}

// --- enumerate ---------------------------------------------------------

struct EnumerateArgs {
    int n = 0;
    std::optional<int> m;
    bool all = false;
    int jobs = 1;
    bool count = false;
    std::string output;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out)
{
    if (a.n < 1 || a.n > kMaxEnumerationOrder)
        throw UsageError("--n must lie in 1..12");
    if (a.m && (*a.m < 0 || *a.m > 2 * a.n))
        throw UsageError("--m must lie in 0..2n");
    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file)
            throw UsageError("cannot open " + a.output);
    }
    std::ostream& sink = a.output.empty() ? out : file;
    EnumerationOptions o{a.n, a.m.value_or(0), a.m.value_or(2 * a.n), !a.all, a.jobs};
    std::size_t count = 0;
    for_each_graph(o, [&](const MolecularGraph& g) {
        ++count;
        if (!a.count)
            sink << to_graph6(g) << '\n';
    });
    if (a.count)
        sink << count << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Molecular descriptors and their sharp bounds on max-degree-4 graphs", "molex"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Evaluate an index on every graph of a file");
    c->add_option("--index", compute.index, "chi, platt, general-platt, oga, m1, harmonic, sum-connectivity, "
                                            "randic, hyper-zagreb, em1")
        ->required();
    c->add_option("--alpha", compute.alpha, "alpha for chi and platt");
    c->add_option("--k", compute.k, "k for oga");
    c->add_option("--in", compute.input, "graph6 or adjacency-list file, - for stdin");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check the bounds on every connected molecular graph");
    v->add_option("--n", verify.n, "order or range lo..hi");
    v->add_option("--variant", verify.variants, "chi, platt or oga (repeatable)");
    v->add_option("--alpha", verify.alphas, "alpha values (repeatable)");
    v->add_option("--alpha-grid", verify.alpha_grid, "default or a comma list");
    v->add_option("--k", verify.ks, "k values (repeatable)");
    v->add_option("--k-grid", verify.k_grid, "default or a comma list");
    v->add_option("--tol", verify.tol, "equality tolerance");
    v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::Range(1, 256));
    v->add_flag("--no-leading", verify.no_leading, "skip the leading-term bound");
    v->add_flag("--no-named", verify.no_named, "skip the M1, H and chi bounds");
    v->add_flag("--brief", verify.brief, "report only the number of equality holders");

    LemmaArgs lemmas;
    auto* l = app.add_subcommand("lemmas", "Check the coefficient lemmas on parameter grids");
    l->add_option("--step", lemmas.step, "grid step");
    l->add_option("--chart", lemmas.chart, "emit the coefficient curves of chi, platt or oga as CSV");
    l->add_option("--graphs", lemmas.graphs, "also run the per-graph lemmas on n in lo..hi");
    l->add_flag("--include-disconnected", lemmas.include_disconnected,
                "report counterexamples among disconnected graphs");

    ExtremalArgs extremal;
    auto* x = app.add_subcommand("extremal", "Construct a graph attaining a refined bound");
    x->add_option("--n", extremal.n)->required();
    x->add_option("--m", extremal.m)->required();
    x->add_option("--variant", extremal.variant, "chi, platt or oga");
    x->add_option("--residue", extremal.residue, "(m + n) mod 3, checked");
    x->add_option("--regime", extremal.regime, "neg, mid, high or oga");
    x->add_option("--alpha", extremal.alpha);
    x->add_option("--k", extremal.k);
    x->add_option("--tol", extremal.tol);

    EnumerateArgs enumerate;
    auto* e = app.add_subcommand("enumerate", "List molecular graphs as graph6, one per isomorphism class");
    e->add_option("--n", enumerate.n)->required();
    e->add_option("--m", enumerate.m, "edge count (all counts when omitted)");
    e->add_flag("--all", enumerate.all, "include disconnected graphs");
    e->add_option("--jobs", enumerate.jobs, "worker threads")->check(CLI::Range(1, 256));
    e->add_flag("--count", enumerate.count, "print only the number of graphs");
    e->add_option("--out", enumerate.output, "output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex, out, err) == 0 ? kOk : kUsageError;
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, out, err);
        return kUsageError;
    }

    try {
        if (c->parsed())
            return cmd_compute(compute, in, out);
        if (v->parsed())
            return cmd_verify(verify, out, err);
        if (l->parsed())
            return cmd_lemmas(lemmas, out);
        if (x->parsed())
            return cmd_extremal(extremal, out);
        if (e->parsed())
            return cmd_enumerate(enumerate, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace molex::cli
