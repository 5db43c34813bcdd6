#include <doctest.h>

#include "molex/canonical.hpp"
#include "molex/error.hpp"
#include "molex/graph_io.hpp"
#include "molex/report.hpp"
#include "molex/search.hpp"

#include <cmath>
#include <set>

using namespace molex;

namespace {

const EnumerationSummary* find(const std::vector<EnumerationSummary>& s, int n, int m, BoundKind kind, double p)
{
    for (const auto& x : s)
        if (x.n == n && x.m == m && x.kind == kind && x.bound_case.parameter == p)
            return &x;
    return nullptr;
}

int pair_count(const MolecularGraph& g, int i, int j) { return edge_census(g).x(i, j); }

}  // namespace

TEST_CASE("exhaustive verification of chi over n = 5..8")
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 8;
    for (double a : {-1.0, -0.5, -0.1, 0.5, 1.5, 2.0})
        o.cases.push_back({Variant::Chi, a});
    const auto summaries = exhaustive_verify(o);
    REQUIRE_FALSE(summaries.empty());
    for (const auto& s : summaries) {
        CAPTURE(s.n);
        CAPTURE(s.m);
        CHECK(s.clean());
        CHECK(s.violations.empty());
        for (const auto& h : s.equality_holders)
            CHECK(extremal_condition(h.degrees, h.edges, s.bound_case));
    }

    const auto* k14 = find(summaries, 5, 4, BoundKind::Refined, -0.5);
    REQUIRE(k14 != nullptr);
    CHECK(k14->graph_count == 3);
    REQUIRE(k14->equality_holders.size() == 1);
    CHECK(k14->equality_holders[0].canonical_key == canonical_key(build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
    CHECK(k14->attained());
}

TEST_CASE("equality holders at (6, 5), chi alpha = 2")
{
    VerifyOptions o;
    o.n_min = 6;
    o.n_max = 6;
    o.cases = {{Variant::Chi, 2.0}};
    const auto summaries = exhaustive_verify(o);
    const auto* s = find(summaries, 6, 5, BoundKind::Refined, 2.0);
    REQUIRE(s != nullptr);
    CHECK(s->bound_case.residue == 2);
    CHECK(s->bound_case.regime == Regime::HighAlpha);
    REQUIRE_FALSE(s->equality_holders.empty());
    for (const auto& h : s->equality_holders) {
        CHECK(h.edges.x(1, 2) == 1);
        CHECK(h.edges.x(2, 4) == 1);
    }
    // (6, 6) has residue 0 but no graph avoids degrees 2 and 3.
    const auto* t = find(summaries, 6, 6, BoundKind::Refined, 2.0);
    REQUIRE(t != nullptr);
    CHECK_FALSE(t->attained());
}

TEST_CASE("exhaustive verification of platt and oga")
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 7;
    for (double a : {-1.0, -0.5, 0.5, 1.5, 2.0})
        o.cases.push_back({Variant::Platt, a});
    for (double k : {0.1, 0.5, 1.0})
        o.cases.push_back({Variant::Oga, k});
    o.jobs = 2;
    for (const auto& s : exhaustive_verify(o))
        CHECK(s.clean());
}

TEST_CASE("exhaustive verification covers the leading and named bounds")
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 6;
    o.cases = {{Variant::Chi, 1.0}};
    const auto s = exhaustive_verify(o);
    bool leading = false, refined = false, m1 = false, harmonic = false, sc = false;
    for (const auto& x : s) {
        CHECK(x.clean());
        leading |= x.kind == BoundKind::Leading;
        refined |= x.kind == BoundKind::Refined;
        m1 |= x.kind == BoundKind::FirstZagreb;
        harmonic |= x.kind == BoundKind::Harmonic;
        sc |= x.kind == BoundKind::SumConnectivity;
    }
    CHECK(leading);
    CHECK_FALSE(refined);
    CHECK(m1);
    CHECK(harmonic);
    CHECK(sc);

    VerifyOptions bad;
    bad.n_min = 5;
    bad.n_max = 5;
    bad.cases = {{Variant::Platt, 1.0}};
    try {
        exhaustive_verify(bad);
        FAIL("expected UnsupportedCase");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCase);
    }
}

TEST_CASE("serial and parallel verification agree")
{
    VerifyOptions o;
    o.n_min = 7;
    o.n_max = 8;
    o.cases = {{Variant::Chi, -0.5}, {Variant::Oga, 0.5}};
    const auto serial = exhaustive_verify(o);
    o.jobs = 4;
    const auto parallel = exhaustive_verify(o);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(to_json(serial[i]) == to_json(parallel[i]));
    }
}

TEST_CASE("realize_census examples")
{
    DegreeCensus star{};
    star.count = {0, 4, 0, 0, 1};
    const auto a = realize_census(star);
    REQUIRE(a.status == RealizationStatus::Realized);
    CHECK(canonical_key(*a.graph) == canonical_key(build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));

    DegreeCensus hub{};
    hub.count = {0, 9, 0, 1, 3};
    const std::vector<PairCount> c{{3, 4, 3}, {1, 3, 0}};
    const auto b = realize_census(hub, c);
    REQUIRE(b.status == RealizationStatus::Realized);
    CHECK(b.graph->order() == 13);
    CHECK(is_connected(*b.graph));
    CHECK(degree_census(*b.graph) == hub);
    CHECK(pair_count(*b.graph, 3, 4) == 3);
    CHECK(pair_count(*b.graph, 1, 3) == 0);

    DegreeCensus small{};
    small.count = {0, 5, 0, 1, 1};
    const std::vector<PairCount> d{{3, 4, 3}};
    const auto e = realize_census(small, d);
    CHECK(e.status == RealizationStatus::Infeasible);
    CHECK_FALSE(e.reason.empty());

    DegreeCensus odd{};
    odd.count = {0, 1, 0, 0, 0};
    CHECK_THROWS_AS(realize_census(odd), Error);
}

TEST_CASE("realize_census through the general search")
{
    DegreeCensus path{};
    path.count = {0, 2, 3, 0, 0};
    const auto p = realize_census(path);
    REQUIRE(p.status == RealizationStatus::Realized);
    CHECK(degree_census(*p.graph) == path);
    CHECK(is_connected(*p.graph));

    DegreeCensus k4{};
    k4.count = {0, 0, 0, 4, 0};
    const auto k = realize_census(k4);
    REQUIRE(k.status == RealizationStatus::Realized);
    CHECK(k.graph->size() == 6);

    DegreeCensus mixed{};
    mixed.count = {0, 0, 2, 2, 0};
    const auto m = realize_census(mixed);
    REQUIRE(m.status == RealizationStatus::Realized);
    CHECK(m.graph->size() == 5);

    DegreeCensus cyc{};
    cyc.count = {0, 0, 6, 0, 0};
    const std::vector<PairCount> ring{{2, 2, 6}};
    const auto r = realize_census(cyc, ring);
    REQUIRE(r.status == RealizationStatus::Realized);
    CHECK(is_connected(*r.graph));

    // Two degree-3 vertices cannot both meet four leaves in a connected graph.
    DegreeCensus split{};
    split.count = {0, 6, 0, 2, 0};
    const std::vector<PairCount> none{{3, 3, 0}};
    CHECK(realize_census(split, none).status == RealizationStatus::Infeasible);
}

TEST_CASE("realize_census agrees with enumeration on small censuses")
{
    // For every census of a connected graph with n <= 7 the realizer must succeed,
    // and for censuses no connected graph has it must not return a graph.
    for (int n = 5; n <= 7; ++n) {
        std::set<std::array<int, 5>> seen;
        EnumerationOptions o;
        o.n = n;
        for_each_graph(o, [&](const MolecularGraph& g) { seen.insert(degree_census(g).count); });
        for (int n1 = 0; n1 <= n; ++n1)
            for (int n2 = 0; n1 + n2 <= n; ++n2)
                for (int n3 = 0; n1 + n2 + n3 <= n; ++n3) {
                    DegreeCensus d{};
                    d.count = {0, n1, n2, n3, n - n1 - n2 - n3};
                    if (d.degree_sum() % 2)
                        continue;
                    const auto r = realize_census(d);
                    CAPTURE(n1);
                    CAPTURE(n2);
                    CAPTURE(n3);
                    if (seen.count(d.count)) {
                        REQUIRE(r.status == RealizationStatus::Realized);
                        CHECK(degree_census(*r.graph) == d);
                        CHECK(is_connected(*r.graph));
                    } else {
                        CHECK(r.status == RealizationStatus::Infeasible);
                    }
                }
    }
}

TEST_CASE("extremal targets")
{
    const auto t = extremal_target(5, 4, BoundCase::make(Variant::Chi, -0.5, 0));
    REQUIRE(t.has_value());
    CHECK(t->degrees.count == std::array<int, 5>{0, 4, 0, 0, 1});

    const auto u = extremal_target(13, 12, BoundCase::make(Variant::Chi, -0.5, 1));
    REQUIRE(u.has_value());
    CHECK(u->degrees.count == std::array<int, 5>{0, 9, 0, 1, 3});

    CHECK_THROWS_AS(extremal_target(13, 12, BoundCase::make(Variant::Chi, -0.5, 0)), Error);
    CHECK_THROWS_AS(extremal_target(4, 3, BoundCase::make(Variant::Chi, -0.5, 1)), Error);
}

TEST_CASE("build_extremal")
{
    const auto a = build_extremal(5, 4, BoundCase::make(Variant::Chi, -0.5, 0));
    REQUIRE(a.graph.has_value());
    CHECK(to_graph6(*a.graph) == "Ds_");
    REQUIRE(a.report.has_value());
    CHECK(std::abs(a.report->gap) <= 1e-9);

    const auto b = build_extremal(13, 12, BoundCase::make(Variant::Chi, -0.5, 1));
    REQUIRE(b.graph.has_value());
    CHECK(std::abs(b.report->gap) <= 1e-10);
    CHECK(extremal_condition(*b.graph, b.report->bound_case));

    const auto c = build_extremal(7, 6, BoundCase::make(Variant::Chi, -0.5, 1));
    CHECK_FALSE(c.graph.has_value());
    CHECK(c.reason.find("degree-4") != std::string::npos);

    for (Variant v : {Variant::Chi, Variant::Platt}) {
        const auto d = build_extremal(6, 5, BoundCase::make(v, 1.5, 2));
        REQUIRE(d.graph.has_value());
        CHECK(d.report->equality);
    }

    CHECK_FALSE(build_extremal(6, 6, BoundCase::make(Variant::Chi, 0.5, 0)).graph.has_value());
    CHECK_FALSE(build_extremal(6, 5, BoundCase::make(Variant::Chi, 0.5, 2)).graph.has_value());
}

TEST_CASE("constructed graphs agree with exhaustive attainment, n <= 8")
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 8;
    o.leading = false;
    o.named_indices = false;
    o.cases = {{Variant::Chi, -0.5}, {Variant::Chi, 0.5}, {Variant::Chi, 1.5}, {Variant::Platt, 1.5},
               {Variant::Oga, 0.5}};
    for (const auto& s : exhaustive_verify(o)) {
        const auto built = build_extremal(s.n, s.m, s.bound_case);
        CAPTURE(s.n);
        CAPTURE(s.m);
        CAPTURE(s.bound_case.parameter);
        CHECK(built.graph.has_value() == s.attained());
        if (built.graph) {
            CHECK(built.report->equality);
            CHECK(built.report->extremal_condition_met);
        }
    }
}

TEST_CASE("larger constructions")
{
    for (auto [n, m] : std::vector<std::pair<int, int>>{{20, 30}, {20, 31}, {20, 32}, {12, 24}, {40, 39}}) {
        const int residue = (n + m) % 3;
        for (double a : {-0.5, 0.5, 1.5}) {
            const auto r = build_extremal(n, m, BoundCase::make(Variant::Chi, a, residue));
            CAPTURE(n);
            CAPTURE(m);
            CAPTURE(a);
            if (r.graph) {
                CHECK(is_connected(*r.graph));
                CHECK(r.graph->size() == m);
                CHECK(std::abs(r.report->gap) <= 1e-9);
            }
        }
    }
    CHECK(build_extremal(20, 30, BoundCase::make(Variant::Chi, 0.5, 2)).graph.has_value());
}

TEST_CASE("summary json")
{
    VerifyOptions o;
    o.n_min = 5;
    o.n_max = 5;
    o.cases = {{Variant::Chi, -0.5}};
    o.leading = false;
    o.named_indices = false;
    const auto s = exhaustive_verify(o);
    const auto j = to_json(s.front());
    CHECK(j["n"] == 5);
    CHECK(j["attained"].is_boolean());
    CHECK(j["case"]["variant"] == "chi");
    CHECK(csv_number(1.0 / 3) == "0.333333333");
    CHECK(csv_number(-5.0 / 3) == "-1.66666667");
    CHECK(csv_number(20) == "20");
}
