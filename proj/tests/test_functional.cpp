#include <doctest.h>

#include <random>
#include <set>

#include "edgemap/functional.hpp"
#include "edgemap/named.hpp"
#include "edgemap/patterns.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

bool set_independent(const FunctionalDigraph& g, const std::vector<int>& ind) {
    std::set<int> inset(ind.begin(), ind.end());
    for (int v : ind)
        for (int w : g.out[static_cast<size_t>(v)])
            if (v != w && inset.count(w))
                return false;
    return true;
}

// exact independence number of the underlying graph, brute force
int alpha_oracle(const FunctionalDigraph& g) {
    int n = g.order;
    std::vector<unsigned> adj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.out[static_cast<size_t>(v)])
            if (v != w) {
                adj[static_cast<size_t>(v)] |= 1u << w;
                adj[static_cast<size_t>(w)] |= 1u << v;
            }
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (mask >> v & 1u)
                if (adj[static_cast<size_t>(v)] & mask)
                    ok = false;
        if (ok)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace

TEST_CASE("mapping digraph construction") {
    Graph m3 = named(GraphKind::Matching, {3});
    EdgeMapping f(m3, {1, 2, 0}, 1);
    FunctionalDigraph gamma = build_gamma(f);
    CHECK(gamma.order == 3);
    CHECK(gamma.out[0] == std::vector<int>{1});
    CHECK(gamma.out[1] == std::vector<int>{2});
    CHECK(gamma.out[2] == std::vector<int>{0});

    // single-part partition: self-arc dropped, independence trivial
    FunctionalDigraph whole = build_gamma(f, std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(whole.order == 1);
    CHECK(whole.out[0].empty());
    CHECK(independent_set(whole) == std::vector<int>{0});

    CHECK_THROWS_AS(build_gamma(f, std::vector<std::vector<int>>{{0, 1}, {1, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_gamma(f, std::vector<std::vector<int>>{{0, 1}}), std::invalid_argument);

    // star whose edges map around a 4-cycle
    Graph star = named(GraphKind::Star, {4});
    EdgeMapping fs(star, {1, 2, 3, 0}, 1);
    FunctionalDigraph cyc = build_gamma(fs);
    CHECK(independent_set(cyc).size() == 2);
}

TEST_CASE("independent set bounds, directed triangle equality cases") {
    FunctionalDigraph tri = FunctionalDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(independent_set(tri).size() == 1);
    FunctionalDigraph six = FunctionalDigraph::from_arcs(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(independent_set(six).size() == 2);
    FunctionalDigraph isolated = FunctionalDigraph::from_arcs(6, {});
    CHECK(independent_set(isolated).size() == 6);
}

TEST_CASE("out-degree-1 equality holds exactly for unions of directed triangles") {
    // n = 3: all f with f(v) != v
    for (int f0 = 0; f0 < 3; ++f0)
        for (int f1 = 0; f1 < 3; ++f1)
            for (int f2 = 0; f2 < 3; ++f2) {
                if (f0 == 0 || f1 == 1 || f2 == 2)
                    continue;
                FunctionalDigraph g =
                    FunctionalDigraph::from_arcs(3, {{0, f0}, {1, f1}, {2, f2}});
                bool cyclic = (f0 == 1 && f1 == 2 && f2 == 0) || (f0 == 2 && f1 == 0 && f2 == 1);
                CHECK((alpha_oracle(g) == 1) == cyclic);
                CHECK(static_cast<int>(independent_set(g).size()) >= (3 + 2) / 3);
            }
    // n = 6: exhaustive over all 5^6 zero-fixed-point maps
    int equality_cases = 0;
    for (int code = 0; code < 5 * 5 * 5 * 5 * 5 * 5; ++code) {
        int c = code;
        std::vector<std::pair<int, int>> arcs;
        std::vector<int> img(6);
        for (int v = 0; v < 6; ++v) {
            int t = c % 5;
            c /= 5;
            img[static_cast<size_t>(v)] = t >= v ? t + 1 : t;
            arcs.emplace_back(v, img[static_cast<size_t>(v)]);
        }
        FunctionalDigraph g = FunctionalDigraph::from_arcs(6, arcs);
        int alpha = alpha_oracle(g);
        CHECK(static_cast<int>(independent_set(g).size()) >= 2);
        if (alpha == 2) {
            ++equality_cases;
            // must be two disjoint cyclically directed triangles
            std::set<std::set<int>> comps;
            for (int v = 0; v < 6; ++v)
                comps.insert({v, img[static_cast<size_t>(v)],
                              img[static_cast<size_t>(img[static_cast<size_t>(v)])]});
            CHECK(comps.size() == 2);
            for (const auto& comp : comps)
                CHECK(comp.size() == 3);
        }
    }
    CHECK(equality_cases > 0);
}

TEST_CASE("random digraphs meet the chromatic independence bound") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> arcs;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < d && n > 1; ++j) {
                if (rng() % 2)
                    continue;
                int w = static_cast<int>(rng() % static_cast<unsigned>(n));
                if (w != v)
                    arcs.emplace_back(v, w);
            }
        FunctionalDigraph g = FunctionalDigraph::from_arcs(n, arcs);
        auto ind = independent_set(g);
        CHECK(set_independent(g, ind));
        CHECK(static_cast<int>(ind.size()) >= (n + 2 * g.d) / (2 * g.d + 1));
    }
}

TEST_CASE("forced exclusive star") {
    // K_{1,6} plus a far edge: every center edge must map to the far edge
    Graph host = disjoint_union(named(GraphKind::Star, {6}), named(GraphKind::Matching, {1}));
    const int far = host.edge_index(7, 8);
    REQUIRE(far >= 0);
    std::vector<int> image(static_cast<size_t>(host.size()), far);
    image[static_cast<size_t>(far)] = 0;
    EdgeMapping f(host, image, 0);
    auto star = find_exclusive_star(host, f, 2);
    REQUIRE(star.has_value());
    CHECK(star->edges.size() == 2);
    CHECK(is_f_exclusive(*star, f));

    // r = 1: a single edge with any disjoint image is always exclusive
    auto single = find_exclusive_star(host, f, 1);
    REQUIRE(single.has_value());
    CHECK(single->edges.size() == 1);

    // degree hypothesis unmet: None allowed
    Graph small = disjoint_union(named(GraphKind::Star, {3}), named(GraphKind::Matching, {1}));
    std::vector<int> simg(static_cast<size_t>(small.size()), small.edge_index(4, 5));
    simg[static_cast<size_t>(small.edge_index(4, 5))] = 0;
    EdgeMapping sf(small, simg, 0);
    CHECK_FALSE(find_exclusive_star(small, sf, 2).has_value());

    EdgeMapping wrong_d(host, image, 1);
    CHECK_THROWS_AS(find_exclusive_star(host, wrong_d, 2), std::invalid_argument);
}

TEST_CASE("adversarial exclusive stars at the degree threshold") {
    // Delta = 5r-4 = 6 with r = 2: random distance-0 mappings, outputs re-verified
    Graph host = disjoint_union(named(GraphKind::Star, {6}), named(GraphKind::Complete, {4}));
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> image(static_cast<size_t>(host.size()));
        for (int e = 0; e < host.size(); ++e) {
            std::vector<int> choices;
            for (int t = 0; t < host.size(); ++t)
                if (host.edges_disjoint(e, t))
                    choices.push_back(t);
            REQUIRE(!choices.empty());
            image[static_cast<size_t>(e)] = choices[rng() % choices.size()];
        }
        EdgeMapping f(host, image, 0);
        auto star = find_exclusive_star(host, f, 2);
        REQUIRE(star.has_value());
        CHECK(is_f_exclusive(*star, f));
    }
}

TEST_CASE("exclusive star forests") {
    // r = 1, t = 2 over 6K2: exhaust every distance-0 mapping
    Graph host = named(GraphKind::Matching, {6});
    std::vector<std::vector<int>> choices(6);
    for (int e = 0; e < 6; ++e)
        for (int t = 0; t < 6; ++t)
            if (t != e)
                choices[static_cast<size_t>(e)].push_back(t);
    std::vector<int> image(6, 0);
    long long tried = 0;
    auto rec = [&](auto&& self, int e) -> void {
        if (e == 6) {
            ++tried;
            EdgeMapping f(host, image, 0);
            auto forest = find_exclusive_star_forest(host, f, 1, 2);
            REQUIRE(forest.has_value());
            CHECK(forest->edges.size() == 2);
            CHECK(is_f_exclusive(*forest, f));
            return;
        }
        for (int t : choices[static_cast<size_t>(e)]) {
            image[static_cast<size_t>(e)] = t;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    CHECK(tried == 15625);
}

TEST_CASE("exclusive star forests at r = 2") {
    Graph host = k_copies(named(GraphKind::Star, {6}), 11);
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> image(static_cast<size_t>(host.size()));
        for (int e = 0; e < host.size(); ++e) {
            while (true) {
                int t = static_cast<int>(rng() % static_cast<unsigned>(host.size()));
                if (host.edges_disjoint(e, t)) {
                    image[static_cast<size_t>(e)] = t;
                    break;
                }
            }
        }
        EdgeMapping f(host, image, 0);
        auto forest = find_exclusive_star_forest(host, f, 2, 2);
        REQUIRE(forest.has_value());
        CHECK(forest->edges.size() == 4);
        CHECK(is_f_exclusive(*forest, f));
    }
    // too few disjoint stars: None allowed
    Graph small_host = k_copies(named(GraphKind::Star, {6}), 3);
    std::vector<int> simg(static_cast<size_t>(small_host.size()));
    for (int e = 0; e < small_host.size(); ++e)
        for (int t = 0; t < small_host.size(); ++t)
            if (small_host.edges_disjoint(e, t)) {
                simg[static_cast<size_t>(e)] = t;
                break;
            }
    EdgeMapping sf(small_host, simg, 0);
    CHECK_FALSE(find_exclusive_star_forest(small_host, sf, 2, 3).has_value());
}
