#include <doctest.h>

#include <random>

#include "edgemap/census.hpp"
#include "edgemap/fastpath.hpp"
#include "edgemap/named.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

PatternFamily two_k2() { return PatternFamily::parse({"2K2"}); }

} // namespace

TEST_CASE("line complement structure") {
    // L(P5) is P4, so its complement is a 4-vertex tree
    Graph p5 = named(GraphKind::Path, {5});
    LineComplement lc = line_complement(p5);
    CHECK(lc.edge_count == 3);
    // P6: five edges, six disjoint pairs
    CHECK(line_complement(named(GraphKind::Path, {6})).edge_count == 6);
}

TEST_CASE("fast decision on the paper hosts") {
    CHECK(fast_2k2_decide(named(GraphKind::Path, {6})).kind == VerdictKind::Unavoidable);
    auto p5 = fast_2k2_decide(named(GraphKind::Path, {5}));
    CHECK(p5.kind == VerdictKind::Avoider);
    auto m3 = fast_2k2_decide(named(GraphKind::Matching, {3})); // complement of L is a triangle
    CHECK(m3.kind == VerdictKind::Avoider);
    CHECK(fast_2k2_decide(named(GraphKind::Path, {2})).kind == VerdictKind::NoLegalMapping);
    CHECK(fast_2k2_decide(Graph(4)).kind == VerdictKind::Avoider);
}

TEST_CASE("fast mappings re-verify against every copy") {
    for (auto spec : {std::pair{GraphKind::Path, 5}, {GraphKind::Matching, 3}, {GraphKind::Cycle, 5},
                      {GraphKind::Star, 6}}) {
        Graph host = named(spec.first, {spec.second});
        auto v = fast_2k2_decide(host);
        if (v.kind == VerdictKind::Avoider)
            CHECK(verify_avoider(host, two_k2(), *v.mapping, Mode::Free));
    }
}

TEST_CASE("agreement with the generic solver on every class of order <= 5") {
    auto levels = enumerate_levels(5, 10);
    int total = 0;
    for (const auto& level : levels)
        for (const Graph& g : level) {
            ++total;
            CHECK(fast_2k2_decide(g).kind == exists_avoider(g, two_k2(), 1, Mode::Free).kind);
        }
    CHECK(total == 34); // isomorphism classes with no isolated vertices, order <= 5
}

TEST_CASE("agreement with the generic solver on 500 random 7-vertex graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (rng() % 100 < 35)
                    es.emplace_back(u, v);
        Graph host = Graph::from_edges(7, es);
        CHECK(fast_2k2_decide(host).kind == exists_avoider(host, two_k2(), 1, Mode::Free).kind);
    }
}
