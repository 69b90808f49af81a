#include <doctest.h>

#include <random>
#include <set>

#include "edgemap/canonical.hpp"
#include "edgemap/named.hpp"
#include "edgemap/patterns.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

// independent count of tK2 copies: n! / (t! 2^t (n-2t)!)
long long matching_copy_count(int n, int t) {
    auto fact = [](int x) {
        long long f = 1;
        for (int i = 2; i <= x; ++i)
            f *= i;
        return f;
    };
    if (2 * t > n)
        return 0;
    long long denom = fact(t) * (1ll << t) * fact(n - 2 * t);
    return fact(n) / denom;
}

} // namespace

TEST_CASE("copy counts in complete hosts") {
    Graph k4 = named(GraphKind::Complete, {4});
    Graph k6 = named(GraphKind::Complete, {6});

    // brute-force oracle for 2K2 in K4: disjoint edge pairs
    int disjoint_pairs = 0;
    for (int e1 = 0; e1 < k4.size(); ++e1)
        for (int e2 = e1 + 1; e2 < k4.size(); ++e2)
            if (k4.edges_disjoint(e1, e2))
                ++disjoint_pairs;
    CHECK(disjoint_pairs == 3);
    CHECK(enumerate_copies(k4, named(GraphKind::Matching, {2})).size() == 3);

    CHECK(enumerate_copies(k6, named(GraphKind::Complete, {3})).size() == 20);
    CHECK(enumerate_copies(k6, named(GraphKind::Star, {2})).size() == 60);
}

TEST_CASE("matching copy counts match the closed form") {
    for (int n = 2; n <= 8; ++n) {
        Graph kn = named(GraphKind::Complete, {n});
        for (int t = 1; t <= 3; ++t) {
            if (2 * t > n)
                continue;
            CHECK(static_cast<long long>(enumerate_copies(kn, named(GraphKind::Matching, {t})).size()) ==
                  matching_copy_count(n, t));
        }
    }
}

TEST_CASE("copies deduplicate automorphic embeddings and carry exact endpoints") {
    Graph host = named(GraphKind::Complete, {4});
    auto copies = enumerate_copies(host, named(GraphKind::Complete, {3}));
    CHECK(copies.size() == 4);
    for (const PatternCopy& c : copies) {
        CHECK(c.edges.size() == 3);
        CHECK(c.vertices.size() == 3);
    }
}

TEST_CASE("copy enumeration is invariant under host relabeling") {
    std::mt19937 rng(5);
    Graph pattern = named(GraphKind::Path, {4});
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    es.emplace_back(u, v);
        Graph host = Graph::from_edges(n, es);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<size_t>(i)] = (i + 3) % n;
        Graph relabeled = host.relabeled(perm);
        CHECK(enumerate_copies(host, pattern).size() == enumerate_copies(relabeled, pattern).size());
    }
}

TEST_CASE("f-free predicate") {
    // cyclic mapping on 3K2 kills every pair inside a triple
    Graph m3 = named(GraphKind::Matching, {3});
    EdgeMapping f(m3, {1, 2, 0}, 1);
    auto copies = enumerate_copies(m3, named(GraphKind::Matching, {2}));
    CHECK(copies.size() == 3);
    for (const PatternCopy& c : copies)
        CHECK_FALSE(is_f_free(c, f));

    // opposite-edge mapping on K4 kills each perfect matching
    Graph k4 = named(GraphKind::Complete, {4});
    std::vector<int> opp(static_cast<size_t>(k4.size()));
    for (int e = 0; e < k4.size(); ++e) {
        for (int e2 = 0; e2 < k4.size(); ++e2)
            if (k4.edges_disjoint(e, e2))
                opp[static_cast<size_t>(e)] = e2;
    }
    EdgeMapping fk4(k4, opp, 0);
    for (const PatternCopy& c : enumerate_copies(k4, named(GraphKind::Matching, {2})))
        CHECK_FALSE(is_f_free(c, fk4));

    // a mapping sending everything far away leaves copies free
    Graph two_paths = disjoint_union(named(GraphKind::Path, {3}), named(GraphKind::Path, {3}));
    EdgeMapping g(two_paths, {2, 3, 0, 1}, 1);
    for (const PatternCopy& c : enumerate_copies(two_paths, named(GraphKind::Path, {3})))
        CHECK(is_f_free(c, g));
}

TEST_CASE("f-exclusive predicate") {
    Graph k4 = named(GraphKind::Complete, {4});
    std::vector<int> opp(static_cast<size_t>(k4.size()));
    for (int e = 0; e < k4.size(); ++e)
        for (int e2 = 0; e2 < k4.size(); ++e2)
            if (k4.edges_disjoint(e, e2))
                opp[static_cast<size_t>(e)] = e2;
    EdgeMapping f(k4, opp, 0);
    // the image of any path edge meets the third path vertex
    for (const PatternCopy& c : enumerate_copies(k4, named(GraphKind::Star, {2})))
        CHECK_FALSE(is_f_exclusive(c, f));

    // far-apart pattern is exclusive
    Graph host = disjoint_union(named(GraphKind::Path, {3}), named(GraphKind::Matching, {1}));
    EdgeMapping g(host, {2, 2, 0}, 0);
    auto copies = enumerate_copies(host, named(GraphKind::Path, {3}));
    REQUIRE(copies.size() == 1);
    CHECK(is_f_exclusive(copies[0], g));
    CHECK(is_f_free(copies[0], g));
}

TEST_CASE("exclusive implies free") {
    std::mt19937 rng(17);
    Graph host = named(GraphKind::Complete, {5});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> image(static_cast<size_t>(host.size()));
        for (int e = 0; e < host.size(); ++e) {
            std::vector<int> disjoint;
            for (int t = 0; t < host.size(); ++t)
                if (host.edges_disjoint(e, t))
                    disjoint.push_back(t);
            image[static_cast<size_t>(e)] = disjoint[rng() % disjoint.size()];
        }
        EdgeMapping f(host, image, 0);
        for (const PatternCopy& c : enumerate_copies(host, named(GraphKind::Path, {3})))
            if (is_f_exclusive(c, f))
                CHECK(is_f_free(c, f));
    }
}

TEST_CASE("family parsing and membership") {
    PatternFamily delta = PatternFamily::parse({"Delta:3,2"});
    CHECK(delta.members.size() == 2);
    CHECK(is_isomorphic(delta.members[0], named(GraphKind::Star, {3})));
    CHECK(is_isomorphic(delta.members[1], named(GraphKind::Matching, {2})));
    CHECK_THROWS_AS(PatternFamily::of(Graph(3), "empty"), std::invalid_argument);

    Graph host = named(GraphKind::Complete, {4});
    auto tagged = enumerate_family_copies(host, delta);
    std::set<int> members;
    for (const PatternCopy& c : tagged)
        members.insert(c.member);
    CHECK(members == std::set<int>{0, 1});
}

TEST_CASE("subgraph containment") {
    CHECK(contains_subgraph(named(GraphKind::Complete, {5}), named(GraphKind::Cycle, {5})));
    CHECK_FALSE(contains_subgraph(named(GraphKind::Star, {5}), named(GraphKind::Matching, {2})));
    CHECK(contains_subgraph(named(GraphKind::W4Minus), named(GraphKind::Cycle, {4})));
}
