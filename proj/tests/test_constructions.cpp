#include <doctest.h>

#include <set>

#include "edgemap/canonical.hpp"
#include "edgemap/constructions.hpp"
#include "edgemap/named.hpp"
#include "edgemap/solver.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

long long triangles(const Graph& g) {
    long long t = 0;
    for (const Edge& e : g.edges())
        for (int w = e.v + 1; w < g.order(); ++w)
            if (g.has_edge(e.u, w) && g.has_edge(e.v, w))
                ++t;
    return t;
}

} // namespace

TEST_CASE("delta system") {
    Construction c = delta_system(2, 2);
    CHECK(is_isomorphic(c.host, named(GraphKind::Star, {3})));
    CHECK(verify_construction(c));
    CHECK(verify_construction(delta_system(3, 3)));
    CHECK_THROWS_AS(delta_system(1, 2), std::invalid_argument);
}

TEST_CASE("plus edge") {
    Construction c = build_construction("plusedge:host=S4,pattern=2K2");
    CHECK(c.host.size() == 5);
    CHECK(verify_construction(c));
    CHECK_THROWS_AS(build_construction("plusedge:host=K4,pattern=K2"), std::invalid_argument);
}

TEST_CASE("independent-set matching") {
    Construction c = build_construction("indmatching:host=3K2,pattern=P3");
    CHECK(c.host.size() == 4); // ex(6,P3) + floor(3/2)
    CHECK(verify_construction(c));
    CHECK(verify_construction(build_construction("indmatching:host=KB3-3,pattern=K3")));
    CHECK_THROWS_AS(build_construction("indmatching:host=S4,pattern=2K2"), std::invalid_argument);
}

TEST_CASE("tree blowup") {
    Construction c = build_construction("treeblowup:block=KB3-5,tree=P8,n=9");
    CHECK(c.host.size() == 20); // K_{4,5}
    CHECK(verify_construction(c));
}

TEST_CASE("Eulerian regular hosts") {
    for (int n = 6; n <= 10; ++n) {
        Construction c = euler_regular(named(GraphKind::Path, {4}), "P4", n);
        CHECK(c.host.size() == n); // 2-regular
        CHECK(verify_construction(c));
    }
    Construction star = build_construction("eulerreg:tree=S3,n=8");
    CHECK(star.host.size() == 16); // 4-regular on 8 vertices
    CHECK(verify_construction(star));
    CHECK_THROWS_AS(euler_regular(named(GraphKind::Star, {3}), "S3", 4), std::invalid_argument);
}

TEST_CASE("cyclic bipartite hosts realize the double-star bound") {
    for (int n : {8, 10, 12}) {
        Construction c = bipartite_cyclic(named(GraphKind::Path, {4}), "P4", n);
        CHECK(c.host.size() == 3 * (n - 3)); // 3kn - 9k^2 at k = 1
        CHECK(verify_construction(c));
    }
    CHECK(verify_construction(build_construction("bipcyclic:tree=D2-2,n=10")));
}

TEST_CASE("triangle join kills five-vertex paths") {
    Construction c = k3_join(8);
    CHECK(c.host.size() == 3 * 8 - 6);
    CHECK(verify_construction(c));
}

TEST_CASE("split graph with embedded star") {
    Construction c = build_construction("split:t=3,n=12");
    CHECK(c.host.size() == 23); // (t-1)(n-t+1) + C(t-1,2) + (t-1)
    CHECK(verify_construction(c));
    CHECK(verify_construction(build_construction("split:t=2,n=6")));
    CHECK(verify_construction(build_construction("split:t=4,n=10")));
    CHECK_THROWS_AS(split_matching(3, 4), std::invalid_argument);
}

TEST_CASE("star plus edge and pendant K4") {
    for (int n : {4, 6, 8}) {
        Construction c = star_plus_edge(n);
        CHECK(c.host.size() == n);
        CHECK(verify_construction(c));
    }
    Construction k4p = k4_pendant();
    CHECK(k4p.host.order() == 5);
    CHECK(k4p.host.size() == 7);
    CHECK(verify_construction(k4p));
}

TEST_CASE("cyclic triple matchings") {
    for (int t : {2, 3, 4})
        CHECK(verify_construction(matching_3t(t)));
    // deliberate mutation must be caught
    Construction c = matching_3t(2);
    std::vector<int> broken = c.mapping->image;
    broken[0] = 2; // 3-cycle becomes 0 -> 2 -> 0, leaving {e0,e1} free
    EdgeMapping bad(c.host, broken, 1);
    CHECK_FALSE(verify_construction(c.host, bad, c.family, c.mode));
}

TEST_CASE("double-star family coincides with the B_k catalog at r = 2") {
    for (int k = 1; k <= 3; ++k) {
        Graph d = named(GraphKind::DLeaf, {3 * 2 - 4, k, 3 * 2 - 6});
        CHECK(is_isomorphic(d, named(GraphKind::BGraph, {k})));
    }
}

TEST_CASE("double-star deletion mappings across all cases") {
    // r=2: B_k hosts for P3; r=3: D_{5,k,3} hosts for K_{1,3}
    for (int r : {2, 3}) {
        for (int k : {1, 2, 3}) {
            Graph full = named(GraphKind::DLeaf, {3 * r - 4, k, 3 * r - 6});
            for (int e = 0; e < full.size(); ++e) {
                Construction c = dstar_deleted(r, k, e);
                CHECK(verify_construction(c));
            }
        }
    }
    CHECK_THROWS_AS(dstar_deleted(2, 1, 99), std::invalid_argument);
}

TEST_CASE("the full double-star hosts are unavoidable") {
    // deletion mappings are the minimality half; the hosts themselves
    // must stay unavoidable
    for (int r : {2, 3})
        for (int k : {1, 2}) {
            Graph d = named(GraphKind::DLeaf, {3 * r - 4, k, 3 * r - 6});
            PatternFamily fam = PatternFamily::parse({"K1," + std::to_string(r)});
            CHECK(is_unavoidable(d, fam, 1, Mode::Free));
        }
}

TEST_CASE("five-matching decomposition of K6") {
    Construction c = k6_five_3k2();
    CHECK(c.mode == Mode::Exclusive);
    CHECK(c.d == 0);
    REQUIRE(c.mapping.has_value());
    CHECK(c.mapping->is_legal());
    // the factor-cyclic mapping is legal but cannot reach all 60 copies:
    // each assignment hits exactly 4 of 60, 15*4 = 60 forces an exact
    // cover, and cross-factor overlaps make one impossible (so does any
    // other distance-0 mapping on K6; see the s-value tests)
    CHECK_FALSE(verify_construction(c));
}

TEST_CASE("triangle chain counts and proof") {
    Construction c2 = mk3_chain(2);
    CHECK(c2.host.order() == 10);
    CHECK(c2.host.size() == 25);
    CHECK(triangles(c2.host) == 26);
    REQUIRE(c2.proof.has_value());
    CHECK(c2.proof->copies == 26);
    CHECK(c2.proof->budget == 25);
    CHECK(verify_construction(c2));

    for (int k : {3, 4}) {
        Construction c = mk3_chain(k);
        CHECK(c.host.order() == 4 * k + 2);
        CHECK(c.host.size() == 12 * k + 1);
        CHECK(triangles(c.host) == 12 * k + 2);
        CHECK(verify_construction(c));
    }
}

TEST_CASE("triangle chain deletion mappings via matching") {
    // The killer injection exists for every deletion except the three
    // edges at the degree-3 vertex of either end piece: the triangles
    // avoiding that vertex outnumber their available edges, so Hall's
    // condition fails and the infeasibility is surfaced, not patched.
    // (Those deleted graphs are in fact still unavoidable.)
    const std::set<int> infeasible{4, 5, 6, 13, 18, 23};
    Construction base = mk3_chain(2);
    for (int e = 0; e < base.host.size(); ++e) {
        if (infeasible.count(e)) {
            CHECK_THROWS_AS(mk3_chain(2, e), std::runtime_error);
        } else {
            Construction c = mk3_chain(2, e);
            CHECK(c.mapping.has_value());
            CHECK(verify_construction(c));
        }
    }
    // longer chain: deletions inside the middle piece are all feasible
    for (int e : {0, 13, 16, 20, 22, 28})
        CHECK(verify_construction(mk3_chain(3, e)));
    CHECK_THROWS_AS(mk3_chain(3, 4), std::runtime_error);

    // the solver confirms the infeasible deletions leave the chain
    // unavoidable, so the full chain is not minimal
    PatternFamily k3 = PatternFamily::parse({"K3"});
    Graph sub = base.host.without_edge(4).without_isolated_vertices();
    CHECK(is_unavoidable(sub, k3, 1, Mode::Free));
    CHECK_FALSE(is_minimal_unavoidable(base.host, k3, 1, Mode::Free));
}

TEST_CASE("construction spec strings round-trip through the parser") {
    for (const std::string& spec :
         {std::string("delta:r=2,t=2"), std::string("split:t=3,n=12"), std::string("k4pendant"),
          std::string("mk3chain:k=2,delete=7")}) {
        Construction c = build_construction(spec);
        CHECK(c.name == spec);
    }
    CHECK_THROWS_AS(build_construction("nosuch:x=1"), std::invalid_argument);
    CHECK_THROWS_AS(build_construction("split:t=3"), std::invalid_argument);
}

TEST_CASE("the documented grid verifies except for the known-defective instances") {
    // k6five admits no full kill cover, and six chain deletions have no
    // killer injection; both are surfaced rather than patched
    const std::set<std::string> defective{
        "k6five",
        "mk3chain:k=2,delete=4",  "mk3chain:k=2,delete=5",  "mk3chain:k=2,delete=6",
        "mk3chain:k=2,delete=13", "mk3chain:k=2,delete=18", "mk3chain:k=2,delete=23",
    };
    auto grid = construction_grid();
    CHECK(grid.size() >= 25);
    for (const std::string& spec : grid) {
        if (defective.count(spec)) {
            bool surfaced = false;
            try {
                surfaced = !verify_construction(build_construction(spec));
            } catch (const std::runtime_error&) {
                surfaced = true;
            }
            CHECK_MESSAGE(surfaced, spec);
        } else {
            Construction c = build_construction(spec);
            CHECK_MESSAGE(verify_construction(c), spec);
        }
    }
}
