#include <doctest.h>

#include <random>

#include "edgemap/named.hpp"
#include "edgemap/solver.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

PatternFamily fam(const std::string& spec) { return PatternFamily::parse({spec}); }

} // namespace

TEST_CASE("avoider existence on the matching examples") {
    CHECK(exists_avoider(named(GraphKind::Complete, {4}), fam("2K2"), 1, Mode::Free).kind ==
          VerdictKind::Avoider);
    CHECK(exists_avoider(named(GraphKind::Matching, {4}), fam("2K2"), 1, Mode::Free).kind ==
          VerdictKind::Unavoidable);
    // no copies at all: trivially avoidable
    CHECK(exists_avoider(named(GraphKind::Path, {3}), fam("2K2"), 1, Mode::Free).kind ==
          VerdictKind::Avoider);
    CHECK(exists_avoider(named(GraphKind::Star, {4}), fam("P3"), 1, Mode::Free).kind ==
          VerdictKind::Unavoidable);
}

TEST_CASE("emptyF verdicts are distinct from unavoidable") {
    CHECK(exists_avoider(named(GraphKind::Path, {2}), fam("2K2"), 1, Mode::Free).kind ==
          VerdictKind::NoLegalMapping);
    // star: no edge has a disjoint partner
    CHECK(exists_avoider(named(GraphKind::Star, {4}), fam("K1,2"), 0, Mode::Exclusive).kind ==
          VerdictKind::NoLegalMapping);
    CHECK_FALSE(is_unavoidable(named(GraphKind::Path, {2}), fam("2K2"), 1, Mode::Free));
    // zero edges: the empty mapping avoids everything
    CHECK(exists_avoider(Graph(3), fam("P3"), 1, Mode::Free).kind == VerdictKind::Avoider);
}

TEST_CASE("mode and distance validation") {
    CHECK_THROWS_AS(exists_avoider(named(GraphKind::Complete, {4}), fam("P3"), 1, Mode::Exclusive),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_avoider(named(GraphKind::Complete, {4}), fam("P3"), 2, Mode::Free),
                    std::invalid_argument);
}

TEST_CASE("unavoidability of specific hosts") {
    CHECK(is_unavoidable(named(GraphKind::W4Minus), fam("2K2"), 1, Mode::Free));
    CHECK_FALSE(is_unavoidable(named(GraphKind::Path, {5}), fam("2K2"), 1, Mode::Free));
    Graph k6_minus = named(GraphKind::Complete, {6});
    k6_minus = k6_minus.without_edge(0);
    CHECK(is_unavoidable(k6_minus, fam("K3"), 1, Mode::Free));
}

TEST_CASE("minimal unavoidability") {
    CHECK(is_minimal_unavoidable(named(GraphKind::Path, {6}), fam("2K2"), 1, Mode::Free));
    CHECK(is_unavoidable(named(GraphKind::Complete, {6}), fam("2K2"), 1, Mode::Free));
    CHECK_FALSE(is_minimal_unavoidable(named(GraphKind::Complete, {6}), fam("2K2"), 1, Mode::Free));
    for (int t : {2, 3})
        CHECK(is_minimal_unavoidable(named(GraphKind::Matching, {3 * t - 2}),
                                     fam(std::to_string(t) + "K2"), 1, Mode::Free));
    // avoidable hosts are never minimal
    CHECK_FALSE(is_minimal_unavoidable(named(GraphKind::Path, {5}), fam("2K2"), 1, Mode::Free));
}

TEST_CASE("counting shortcut") {
    Graph k5 = named(GraphKind::Complete, {5});
    auto proof = counting_shortcut(k5, named(GraphKind::Matching, {2}));
    REQUIRE(proof.has_value());
    CHECK(proof->copies == 15);
    CHECK(proof->budget == 10);

    Graph k6_minus = named(GraphKind::Complete, {6}).without_edge(0);
    auto tri = counting_shortcut(k6_minus, named(GraphKind::Complete, {3}));
    REQUIRE(tri.has_value());
    CHECK(tri->copies == 16);
    CHECK(tri->budget == 14);

    // P6 has six 2K2 copies on five usable edges, so the bound fires
    auto p6 = counting_shortcut(named(GraphKind::Path, {6}), named(GraphKind::Matching, {2}));
    REQUIRE(p6.has_value());
    CHECK(p6->copies == 6);
    CHECK(p6->budget == 5);

    // incompleteness: an avoidable host where the count stays below the bound
    Graph near_star = disjoint_union(named(GraphKind::Star, {4}), named(GraphKind::Matching, {1}));
    CHECK_FALSE(counting_shortcut(near_star, named(GraphKind::Matching, {2})).has_value());
    CHECK_THROWS_AS(counting_shortcut(k5, named(GraphKind::Path, {4})), std::invalid_argument);
}

TEST_CASE("shortcut agrees with the solver on small graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    es.emplace_back(u, v);
        Graph host = Graph::from_edges(n, es);
        for (const char* pat : {"2K2", "K3"}) {
            if (counting_shortcut(host, fam(pat).members.front()))
                CHECK(is_unavoidable(host, fam(pat), 1, Mode::Free));
        }
    }
}

TEST_CASE("avoider certificates re-verify") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 < 1)
                    es.emplace_back(u, v);
        Graph host = Graph::from_edges(n, es);
        AvoidanceVerdict v = exists_avoider(host, fam("2K2"), 1, Mode::Free);
        if (v.kind == VerdictKind::Avoider)
            CHECK(verify_avoider(host, fam("2K2"), *v.mapping, Mode::Free));
    }
}

TEST_CASE("node budget raises") {
    SolveOptions opts;
    opts.node_limit = 1;
    Graph k6 = named(GraphKind::Complete, {6});
    // exclusive star kills touch four copies each, so the matching bound
    // does not apply and the search actually runs
    CHECK_THROWS_AS(exists_avoider(k6, fam("K1,2"), 0, Mode::Exclusive, opts), budget_error);
    // triangle instances now collapse at the root without any nodes
    AvoidanceVerdict v = exists_avoider(k6, fam("K3"), 1, Mode::Free, opts);
    CHECK(v.kind == VerdictKind::Unavoidable);
    CHECK(v.stats.nodes == 0);
}

TEST_CASE("K_n mapping search with fixed points") {
    auto q46 = exists_q_mapping(4, fam("2K2"), 1, 6);
    REQUIRE(q46.has_value());
    CHECK(q46->free_count == 6);
    CHECK(q46->is_consistent());
    CHECK_FALSE(exists_q_mapping(4, fam("2K2"), 1, 7).has_value());
    CHECK_FALSE(exists_q_mapping(5, fam("2K2"), 1, 8).has_value());
    CHECK(exists_q_mapping(5, fam("2K2"), 1, 7).has_value());
    CHECK_THROWS_AS(exists_q_mapping(6, fam("2K2"), 1, 3), budget_error);

    // exclusive variant: opposite-edge mapping realizes all six edges at n = 4
    auto p4 = exists_p_mapping(4, fam("K1,2"), 6);
    CHECK(p4.has_value());
    // and n = 3 admits no distance-0 edge at all
    CHECK_FALSE(exists_p_mapping(3, fam("K3"), 1).has_value());
    CHECK(exists_p_mapping(3, fam("K3"), 0).has_value());
}

TEST_CASE("unavoidability is monotone under supergraphs") {
    std::mt19937 rng(31);
    int checked = 0;
    while (checked < 60) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> qes, hes;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    qes.emplace_back(u, v);
        for (auto e : qes)
            if (rng() % 5 < 3)
                hes.push_back(e);
        Graph q = Graph::from_edges(n, qes);
        Graph h = Graph::from_edges(n, hes);
        PatternFamily f = fam(checked % 2 ? "P3" : "2K2");
        ++checked;
        if (is_unavoidable(h, f, 1, Mode::Free))
            CHECK(is_unavoidable(q, f, 1, Mode::Free));
    }
}

TEST_CASE("decide routing keeps answers identical") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    es.emplace_back(u, v);
        Graph host = Graph::from_edges(n, es);
        DecideOptions with_routes;
        with_routes.fastpath_2k2 = true;
        DecideOptions plain;
        plain.counting_shortcut = false;
        CHECK(decide_avoidance(host, fam("2K2"), 1, Mode::Free, with_routes).kind ==
              decide_avoidance(host, fam("2K2"), 1, Mode::Free, plain).kind);
    }
}
