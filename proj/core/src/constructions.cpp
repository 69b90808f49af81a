#include "edgemap/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "edgemap/named.hpp"

namespace edgemap {

bool verify_construction(const Graph& g, const EdgeMapping& f, const PatternFamily& patterns,
                         Mode mode) {
    return verify_avoider(g, patterns, f, mode);
}

bool verify_construction(const Construction& c) {
    if (c.mapping)
        return verify_construction(c.host, *c.mapping, c.family, c.mode);
    if (c.proof) {
        if (c.family.members.size() != 1)
            return false;
        auto again = counting_shortcut(c.host, c.family.members.front());
        return again && again->copies == c.proof->copies && again->budget == c.proof->budget;
    }
    return false;
}

namespace {

// f(e) for edges that never matter to any copy: smallest legal image.
void complete_mapping(const Graph& host, std::vector<int>& image, int d) {
    for (int e = 0; e < host.size(); ++e) {
        if (image[static_cast<size_t>(e)] != -1)
            continue;
        for (int t = 0; t < host.size(); ++t) {
            if (t == e)
                continue;
            if (d == 0 && !host.edges_disjoint(e, t))
                continue;
            image[static_cast<size_t>(e)] = t;
            break;
        }
        if (image[static_cast<size_t>(e)] == -1)
            throw std::invalid_argument("host admits no legal mapping");
    }
}

void map_cyclic_triples(std::vector<int>& image, const std::vector<int>& edges) {
    if (edges.size() % 3 != 0)
        throw std::logic_error("triple grouping on a non-multiple of three");
    for (size_t i = 0; i < edges.size(); i += 3) {
        image[static_cast<size_t>(edges[i])] = edges[i + 1];
        image[static_cast<size_t>(edges[i + 1])] = edges[i + 2];
        image[static_cast<size_t>(edges[i + 2])] = edges[i];
    }
}

/// Exact maximum independent set; the include-first ascending search
/// returns the lexicographically smallest maximum.
std::vector<int> max_independent_set(const Graph& g) {
    std::vector<int> best, cur;
    std::vector<bool> blocked(static_cast<size_t>(g.order()), false);
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == g.order()) {
            if (cur.size() > best.size())
                best = cur;
            return;
        }
        if (static_cast<int>(cur.size()) + g.order() - v <= static_cast<int>(best.size()))
            return;
        if (!blocked[static_cast<size_t>(v)]) {
            std::vector<int> newly;
            for (int w : g.neighbors(v))
                if (w > v && !blocked[static_cast<size_t>(w)]) {
                    blocked[static_cast<size_t>(w)] = true;
                    newly.push_back(w);
                }
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
            for (int w : newly)
                blocked[static_cast<size_t>(w)] = false;
        }
        self(self, v + 1);
    };
    dfs(dfs, 0);
    return best;
}

std::string fmt(const std::string& kind, std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    os << kind;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? ":" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

Construction delta_system(int r, int t) {
    if (r < 2 || t < 2)
        throw std::invalid_argument("delta system needs r >= 2 and t >= 2");
    Graph star = build_named({GraphKind::Star, {3 * (r - 1)}});
    Graph host = k_copies(star, t - 1);
    std::vector<int> image(static_cast<size_t>(host.size()), -1);
    std::vector<int> all(static_cast<size_t>(host.size()));
    for (int e = 0; e < host.size(); ++e)
        all[static_cast<size_t>(e)] = e;
    map_cyclic_triples(image, all); // each star's edges are contiguous triples
    Construction c;
    c.name = fmt("delta", {{"r", std::to_string(r)}, {"t", std::to_string(t)}});
    c.host = host;
    c.family = PatternFamily::delta(r, t);
    c.mapping = EdgeMapping(std::move(host), std::move(image), 1);
    return c;
}

Construction plus_edge(const Graph& host, const std::string& host_name, const Graph& pattern,
                       const std::string& pattern_name) {
    if (pattern.size() < 2)
        throw std::invalid_argument("plus-edge construction needs a pattern with >= 2 edges");
    if (host.size() < 1)
        throw std::invalid_argument("plus-edge construction needs a host with >= 1 edge");
    int au = -1, av = -1;
    for (int u = 0; u < host.order() && au < 0; ++u)
        for (int v = u + 1; v < host.order(); ++v)
            if (!host.has_edge(u, v)) {
                au = u;
                av = v;
                break;
            }
    if (au < 0)
        throw std::invalid_argument("plus-edge construction needs a missing edge");
    Graph g = host.with_edge(au, av);
    const int estar = g.edge_index(au, av);
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e)
        if (e != estar)
            image[static_cast<size_t>(e)] = estar;
    image[static_cast<size_t>(estar)] = estar == 0 ? 1 : 0;
    Construction c;
    c.name = fmt("plusedge", {{"host", host_name}, {"pattern", pattern_name}});
    c.host = g;
    c.family = PatternFamily::of(pattern, pattern_name);
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction ind_matching(const Graph& host, const std::string& host_name, const Graph& pattern,
                          const std::string& pattern_name) {
    Graph pat = pattern.without_isolated_vertices();
    for (const auto& comp : connected_components(pat))
        if (comp.size() == 2)
            throw std::invalid_argument("independent-matching construction needs a pattern with no isolated edges");
    auto ind = max_independent_set(host);
    Graph g = host;
    std::vector<int> matching; // edge ids in g, filled as we add
    for (size_t i = 0; i + 1 < ind.size(); i += 2)
        g = g.with_edge(ind[i], ind[i + 1]);
    for (size_t i = 0; i + 1 < ind.size(); i += 2)
        matching.push_back(g.edge_index(ind[i], ind[i + 1]));
    std::vector<bool> in_matching(static_cast<size_t>(g.size()), false);
    for (int e : matching)
        in_matching[static_cast<size_t>(e)] = true;
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e) {
        if (in_matching[static_cast<size_t>(e)])
            continue;
        for (int me : matching)
            if (!g.edges_disjoint(e, me)) {
                image[static_cast<size_t>(e)] = me; // unique: matched ends are independent in the host
                break;
            }
    }
    Construction c;
    c.name = fmt("indmatching", {{"host", host_name}, {"pattern", pattern_name}});
    complete_mapping(g, image, 1);
    c.host = g;
    c.family = PatternFamily::of(pattern, pattern_name);
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction tree_blowup(const Graph& block, const std::string& block_name, const Graph& tree,
                         const std::string& tree_name, int n) {
    const int k = block.order();
    if (k < 1 || n < k + 1)
        throw std::invalid_argument("tree blowup needs n >= |V(block)| + 1");
    const int copies = (n - 1) / k;
    auto ind = max_independent_set(block);
    std::vector<std::pair<int, int>> es;
    auto global = [&](int copy, int local) { return 1 + copy * k + local; };
    for (int c = 0; c < copies; ++c)
        for (const Edge& e : block.edges())
            es.emplace_back(global(c, e.u), global(c, e.v));
    for (int c = 0; c < copies; ++c)
        for (int v : ind)
            es.emplace_back(0, global(c, v));
    Graph g = Graph::from_edges(n, es);
    std::vector<bool> in_ind(static_cast<size_t>(n), false);
    for (int c = 0; c < copies; ++c)
        for (int v : ind)
            in_ind[static_cast<size_t>(global(c, v))] = true;
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u == 0)
            continue; // apex spoke
        int x = in_ind[static_cast<size_t>(ed.u)] ? ed.u : (in_ind[static_cast<size_t>(ed.v)] ? ed.v : -1);
        if (x >= 0)
            image[static_cast<size_t>(e)] = g.edge_index(0, x);
    }
    complete_mapping(g, image, 1);
    Construction c;
    c.name = fmt("treeblowup", {{"block", block_name}, {"tree", tree_name}, {"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(tree, tree_name);
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction euler_regular(const Graph& tree, const std::string& tree_name, int n) {
    const int delta = degree_stats(tree).max_degree;
    if (delta < 2)
        throw std::invalid_argument("Eulerian construction needs a tree with maximum degree >= 2");
    if (n <= 2 * (delta - 1))
        throw std::invalid_argument("Eulerian construction needs n > 2(Delta - 1)");
    std::vector<int> params{n};
    for (int s = 1; s <= delta - 1; ++s)
        params.push_back(s);
    Graph g = build_named({GraphKind::Circulant, params});

    // Hierholzer, starting at vertex 0
    std::vector<bool> used(static_cast<size_t>(g.size()), false);
    std::vector<size_t> ptr(static_cast<size_t>(g.order()), 0);
    std::vector<int> stack{0}, circuit;
    while (!stack.empty()) {
        int v = stack.back();
        auto& p = ptr[static_cast<size_t>(v)];
        const auto& nb = g.neighbors(v);
        while (p < nb.size() && used[static_cast<size_t>(g.edge_index(v, nb[p]))])
            ++p;
        if (p == nb.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            used[static_cast<size_t>(g.edge_index(v, nb[p]))] = true;
            stack.push_back(nb[p]);
        }
    }
    if (static_cast<int>(circuit.size()) != g.size() + 1)
        throw std::logic_error("Eulerian circuit did not cover every edge");
    std::vector<int> trail;
    for (size_t i = 0; i + 1 < circuit.size(); ++i)
        trail.push_back(g.edge_index(circuit[i], circuit[i + 1]));
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (size_t i = 0; i < trail.size(); ++i)
        image[static_cast<size_t>(trail[i])] = trail[(i + 1) % trail.size()];
    Construction c;
    c.name = fmt("eulerreg", {{"tree", tree_name}, {"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(tree, tree_name);
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction bipartite_cyclic(const Graph& tree, const std::string& tree_name, int n) {
    const int dstar = delta_star(tree);
    if (dstar < 2)
        throw std::invalid_argument("cyclic bipartite construction needs Delta* >= 2");
    const int small = 3 * (dstar - 1);
    if (n <= small)
        throw std::invalid_argument("cyclic bipartite construction needs n > 3(Delta* - 1)");
    Graph g = build_named({GraphKind::CompleteBipartite, {small, n - small}});
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e); // ed.u in the small part
        int i = ed.u / 3, pos = ed.u % 3;
        int nxt = 3 * i + (pos + 1) % 3;
        image[static_cast<size_t>(e)] = g.edge_index(nxt, ed.v);
    }
    Construction c;
    c.name = fmt("bipcyclic", {{"tree", tree_name}, {"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(tree, tree_name);
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction k3_join(int n) {
    if (n < 3)
        throw std::invalid_argument("triangle join needs n >= 3");
    Graph g = join(build_named({GraphKind::Complete, {3}}), Graph(n - 3));
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    auto nxt = [](int a) { return (a + 1) % 3; };
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.v < 3) // triangle edge: ab -> bc -> ca -> ab
            image[static_cast<size_t>(e)] = ed.u == 0 && ed.v == 1   ? g.edge_index(1, 2)
                                            : ed.u == 1 && ed.v == 2 ? g.edge_index(0, 2)
                                                                     : g.edge_index(0, 1);
        else
            image[static_cast<size_t>(e)] = g.edge_index(nxt(ed.u), ed.v);
    }
    Construction c;
    c.name = fmt("k3join", {{"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Path, {5}}), "P5");
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction split_matching(int t, int n) {
    if (t < 2 || n < 2 * t - 1)
        throw std::invalid_argument("split-matching construction needs t >= 2 and n >= 2t - 1");
    Graph g = join(build_named({GraphKind::Complete, {t - 1}}), Graph(n - t + 1));
    const int v = t - 1; // star center in the independent part
    for (int i = 1; i <= t - 1; ++i)
        g = g.with_edge(v, v + i);
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u <= t - 2 && ed.v >= t - 1) // spoke u_i x
            image[static_cast<size_t>(e)] = g.edge_index(v, v + ed.u + 1);
    }
    complete_mapping(g, image, 1);
    Construction c;
    c.name = fmt("split", {{"t", std::to_string(t)}, {"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Matching, {t}}), std::to_string(t) + "K2");
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction star_plus_edge(int n) {
    if (n < 3)
        throw std::invalid_argument("star-plus-edge construction needs n >= 3");
    Graph g = build_named({GraphKind::Star, {n - 1}}).with_edge(1, 2);
    const int extra = g.edge_index(1, 2);
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e)
        if (e != extra)
            image[static_cast<size_t>(e)] = extra;
    image[static_cast<size_t>(extra)] = extra == 0 ? 1 : 0;
    Construction c;
    c.name = fmt("starplus", {{"n", std::to_string(n)}});
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Matching, {2}}), "2K2");
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction k4_pendant() {
    Graph g = build_named({GraphKind::Complete, {4}}).padded(5).with_edge(3, 4);
    const int pendant = g.edge_index(3, 4);
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int e = 0; e < g.size(); ++e) {
        if (e == pendant)
            continue;
        if (g.edges_disjoint(e, pendant)) {
            image[static_cast<size_t>(e)] = pendant;
        } else {
            const Edge& ed = g.edge(e); // opposite edge within the K4
            int a = -1, b = -1;
            for (int x = 0; x < 4; ++x)
                if (x != ed.u && x != ed.v)
                    (a < 0 ? a : b) = x;
            image[static_cast<size_t>(e)] = g.edge_index(a, b);
        }
    }
    image[static_cast<size_t>(pendant)] = pendant == 0 ? 1 : 0;
    Construction c;
    c.name = "k4pendant";
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Matching, {2}}), "2K2");
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction matching_3t(int t) {
    if (t < 2)
        throw std::invalid_argument("cyclic matching construction needs t >= 2");
    Graph g = build_named({GraphKind::Matching, {3 * t - 3}});
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    std::vector<int> all(static_cast<size_t>(g.size()));
    for (int e = 0; e < g.size(); ++e)
        all[static_cast<size_t>(e)] = e;
    map_cyclic_triples(image, all);
    Construction c;
    c.name = fmt("matching3t", {{"t", std::to_string(t)}});
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Matching, {t}}), std::to_string(t) + "K2");
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

namespace {

// View of D_{3r-4,k,3r-6} with the deletion-side center first; flipping
// mirrors the path so one code path serves both ends.
struct DView {
    const Graph& g;
    int k;
    bool flipped;

    int pv(int i) const { return flipped ? k - i : i; } // path vertex i (0 = near center)
    int pe(int i) const { return g.edge_index(pv(i - 1), pv(i)); }
    std::vector<int> leaf_edges(int path_index) const {
        std::vector<int> out;
        int v = pv(path_index);
        for (int w : g.neighbors(v)) {
            if (w <= k)
                continue; // path vertex
            out.push_back(g.edge_index(v, w));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Star component on its own: triples plus one swapped pair (the leaf
// count 3r-4 is always 2 mod 3).
void map_lone_star(std::vector<int>& image, const std::vector<int>& edges) {
    if (edges.size() % 3 != 2)
        throw std::logic_error("lone star grouping expects 2 mod 3 edges");
    std::vector<int> head(edges.begin(), edges.end() - 2);
    map_cyclic_triples(image, head);
    int a = edges[edges.size() - 2], b = edges[edges.size() - 1];
    image[static_cast<size_t>(a)] = b;
    image[static_cast<size_t>(b)] = a;
}

// Broom component: the center (path index 0 of the view) with its full
// leaf set, then interior path vertices up to index last; path edges
// point toward the center.
void map_broom(std::vector<int>& image, const DView& view, int last) {
    std::vector<int> center_edges = view.leaf_edges(0);
    if (last == 0) {
        map_lone_star(image, center_edges);
        return;
    }
    center_edges.push_back(view.pe(1));
    std::sort(center_edges.begin(), center_edges.end());
    map_cyclic_triples(image, center_edges);
    for (int h = 2; h <= last; ++h)
        image[static_cast<size_t>(view.pe(h))] = view.pe(h - 1);
    for (int h = 1; h <= last; ++h)
        map_cyclic_triples(image, view.leaf_edges(h));
}

} // namespace

Construction dstar_deleted(int r, int k, int delete_edge) {
    if (r < 2 || k < 1)
        throw std::invalid_argument("double-star family needs r >= 2 and k >= 1");
    Graph full = build_named({GraphKind::DLeaf, {3 * r - 4, k, 3 * r - 6}});
    if (delete_edge < 0 || delete_edge >= full.size())
        throw std::invalid_argument("deleted edge index out of range");
    const Edge del = full.edge(delete_edge);
    Graph g = full.without_edge(delete_edge);
    // edge is re-identified in the deleted graph by its endpoints
    std::vector<int> image(static_cast<size_t>(g.size()), -1);

    const bool is_path_edge = del.u <= k && del.v <= k;
    if (is_path_edge) {
        int j = std::max(del.u, del.v); // deleted edge is (j-1, j)
        DView uview{g, k, false};
        DView vview{g, k, true};
        map_broom(image, uview, j - 1);
        map_broom(image, vview, k - j);
    } else {
        int center = std::min(del.u, del.v);
        if (center == 0 || center == k) {
            // end-leaf deletion; normalize the deletion to the near center
            DView view{g, k, center == k};
            std::vector<int> u_leaves = view.leaf_edges(0);
            std::vector<int> head(u_leaves.begin(), u_leaves.end() - 1);
            map_cyclic_triples(image, head);
            image[static_cast<size_t>(u_leaves.back())] = view.pe(1);
            for (int i = 1; i <= k - 1; ++i)
                image[static_cast<size_t>(view.pe(i))] = view.pe(i + 1);
            for (int h = 1; h <= k - 1; ++h)
                map_cyclic_triples(image, view.leaf_edges(h));
            std::vector<int> v_edges = view.leaf_edges(k);
            v_edges.push_back(view.pe(k));
            std::sort(v_edges.begin(), v_edges.end());
            map_cyclic_triples(image, v_edges);
        } else {
            // path-leaf deletion at w_i
            int i = center;
            DView view{g, k, false};
            std::vector<int> u_edges = view.leaf_edges(0);
            u_edges.push_back(view.pe(1));
            std::sort(u_edges.begin(), u_edges.end());
            map_cyclic_triples(image, u_edges);
            std::vector<int> v_edges = view.leaf_edges(k);
            v_edges.push_back(view.pe(k));
            std::sort(v_edges.begin(), v_edges.end());
            map_cyclic_triples(image, v_edges);
            for (int h = 2; h <= i; ++h)
                image[static_cast<size_t>(view.pe(h))] = view.pe(h - 1);
            for (int h = i + 1; h <= k - 1; ++h)
                image[static_cast<size_t>(view.pe(h))] = view.pe(h + 1);
            for (int h = 1; h <= k - 1; ++h) {
                if (h == i)
                    continue;
                map_cyclic_triples(image, view.leaf_edges(h));
            }
            std::vector<int> wi = view.leaf_edges(i);
            if (wi.size() % 3 != 2)
                throw std::logic_error("path-leaf remainder is not 2 mod 3");
            std::vector<int> head(wi.begin(), wi.end() - 2);
            map_cyclic_triples(image, head);
            image[static_cast<size_t>(wi[wi.size() - 2])] = view.pe(i);
            image[static_cast<size_t>(wi[wi.size() - 1])] = view.pe(i + 1);
        }
    }

    Construction c;
    c.name = fmt("dstardel", {{"r", std::to_string(r)},
                              {"k", std::to_string(k)},
                              {"delete", std::to_string(delete_edge)}});
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Star, {r}}), "K1," + std::to_string(r));
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

Construction k6_five_3k2() {
    Graph g = build_named({GraphKind::Complete, {6}});
    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    // rotational one-factorization: factor i holds {i,5} and {i+j, i-j}
    for (int i = 0; i < 5; ++i) {
        std::vector<int> factor{g.edge_index(i, 5)};
        for (int j = 1; j <= 2; ++j)
            factor.push_back(g.edge_index((i + j) % 5, (i + 5 - j) % 5));
        std::sort(factor.begin(), factor.end());
        map_cyclic_triples(image, factor);
    }
    Construction c;
    c.name = "k6five";
    c.host = g;
    c.family = PatternFamily::of(build_named({GraphKind::Star, {2}}), "K1,2");
    c.mode = Mode::Exclusive;
    c.d = 0;
    c.mapping = EdgeMapping(std::move(g), std::move(image), 0);
    return c;
}

namespace {

struct ChainPiece {
    std::vector<int> vertex_of_local;        // local 0..5 -> global
    std::pair<int, int> left_pair{-1, -1};   // global endpoints of shared edges
    std::pair<int, int> right_pair{-1, -1};
    bool is_h1 = false;
};

struct ChainLayout {
    Graph host;
    std::vector<ChainPiece> pieces;
};

// H1 = K6 minus {01,12}, shared edge (3,4); H2 = K6 minus {01,23},
// left-shared (4,5), right-shared (0,2). Fresh vertices are assigned in
// local order.
ChainLayout assemble_chain(int k) {
    if (k < 2)
        throw std::invalid_argument("triangle chain needs k >= 2");
    std::vector<ChainPiece> pieces;
    int next_vertex = 0;
    auto fresh = [&]() { return next_vertex++; };
    for (int p = 0; p < k; ++p) {
        ChainPiece piece;
        piece.is_h1 = (p == 0 || p == k - 1);
        piece.vertex_of_local.assign(6, -1);
        if (p == 0) {
            for (int l = 0; l < 6; ++l)
                piece.vertex_of_local[static_cast<size_t>(l)] = fresh();
        } else {
            auto prev = pieces.back().right_pair;
            int la, lb; // locals glued onto the previous shared pair
            if (piece.is_h1) {
                la = 3;
                lb = 4;
            } else {
                la = 4;
                lb = 5;
            }
            piece.vertex_of_local[static_cast<size_t>(la)] = prev.first;
            piece.vertex_of_local[static_cast<size_t>(lb)] = prev.second;
            for (int l = 0; l < 6; ++l)
                if (piece.vertex_of_local[static_cast<size_t>(l)] == -1)
                    piece.vertex_of_local[static_cast<size_t>(l)] = fresh();
            piece.left_pair = prev;
        }
        auto glob = [&](int a, int b) {
            int ga = piece.vertex_of_local[static_cast<size_t>(a)];
            int gb = piece.vertex_of_local[static_cast<size_t>(b)];
            return std::pair(std::min(ga, gb), std::max(ga, gb));
        };
        piece.right_pair = piece.is_h1 ? glob(3, 4) : glob(0, 2);
        if (p == k - 1)
            piece.right_pair = {-1, -1};
        pieces.push_back(piece);
    }
    std::set<std::pair<int, int>> es;
    for (const ChainPiece& piece : pieces) {
        std::set<std::pair<int, int>> missing;
        if (piece.is_h1)
            missing = {{0, 1}, {1, 2}};
        else
            missing = {{0, 1}, {2, 3}};
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                if (missing.count({a, b}))
                    continue;
                int ga = piece.vertex_of_local[static_cast<size_t>(a)];
                int gb = piece.vertex_of_local[static_cast<size_t>(b)];
                es.insert({std::min(ga, gb), std::max(ga, gb)});
            }
    }
    ChainLayout layout;
    layout.host = Graph::from_edges(next_vertex, {es.begin(), es.end()});
    layout.pieces = std::move(pieces);
    return layout;
}

std::vector<std::array<int, 3>> host_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges())
        for (int w = e.v + 1; w < g.order(); ++w)
            if (g.has_edge(e.u, w) && g.has_edge(e.v, w))
                out.push_back({e.u, e.v, w});
    return out;
}

// Kuhn augmenting-path matching: returns right-match per left vertex,
// or nullopt if the left side cannot be saturated.
std::optional<std::vector<int>> saturating_matching(const std::vector<std::vector<int>>& adj,
                                                    int right_size) {
    std::vector<int> match_left(adj.size(), -1), match_right(static_cast<size_t>(right_size), -1);
    for (size_t u = 0; u < adj.size(); ++u) {
        std::vector<bool> seen(static_cast<size_t>(right_size), false);
        auto augment = [&](auto&& self, size_t x) -> bool {
            for (int y : adj[x]) {
                if (seen[static_cast<size_t>(y)])
                    continue;
                seen[static_cast<size_t>(y)] = true;
                if (match_right[static_cast<size_t>(y)] == -1 ||
                    self(self, static_cast<size_t>(match_right[static_cast<size_t>(y)]))) {
                    match_right[static_cast<size_t>(y)] = static_cast<int>(x);
                    match_left[x] = y;
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, u))
            return std::nullopt;
    }
    return match_left;
}

} // namespace

Construction mk3_chain(int k, std::optional<int> delete_edge) {
    ChainLayout layout = assemble_chain(k);
    PatternFamily fam = PatternFamily::of(build_named({GraphKind::Complete, {3}}), "K3");

    if (!delete_edge) {
        Construction c;
        c.name = fmt("mk3chain", {{"k", std::to_string(k)}});
        c.host = layout.host;
        c.family = fam;
        auto proof = counting_shortcut(layout.host, fam.members.front());
        if (!proof)
            throw std::logic_error("triangle chain lost its counting certificate");
        c.proof = *proof;
        return c;
    }

    if (*delete_edge < 0 || *delete_edge >= layout.host.size())
        throw std::invalid_argument("deleted edge index out of range");
    const Edge del = layout.host.edge(*delete_edge);
    Graph g = layout.host.without_edge(*delete_edge);

    const int np = static_cast<int>(layout.pieces.size());
    std::vector<std::set<int>> vset(static_cast<size_t>(np));
    for (int p = 0; p < np; ++p)
        vset[static_cast<size_t>(p)] = {layout.pieces[static_cast<size_t>(p)].vertex_of_local.begin(),
                                        layout.pieces[static_cast<size_t>(p)].vertex_of_local.end()};
    auto in_piece = [&](int p, int u, int v) {
        return vset[static_cast<size_t>(p)].count(u) && vset[static_cast<size_t>(p)].count(v);
    };

    int h_lo = -1, h_hi = -1;
    for (int p = 0; p < np; ++p)
        if (in_piece(p, del.u, del.v)) {
            if (h_lo < 0)
                h_lo = p;
            h_hi = p;
        }
    if (h_lo < 0)
        throw std::logic_error("deleted edge not in any chain piece");

    // per-piece killer edge sets
    std::vector<std::set<int>> killers(static_cast<size_t>(np));
    auto edge_id = [&](std::pair<int, int> pr) { return g.edge_index(pr.first, pr.second); };
    for (int p = 0; p < np; ++p) {
        const ChainPiece& piece = layout.pieces[static_cast<size_t>(p)];
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                int ga = piece.vertex_of_local[static_cast<size_t>(a)];
                int gb = piece.vertex_of_local[static_cast<size_t>(b)];
                int e = g.edge_index(ga, gb);
                if (e >= 0)
                    killers[static_cast<size_t>(p)].insert(e);
            }
        if (piece.left_pair.first >= 0) {
            int e = edge_id(piece.left_pair);
            if (e >= 0)
                killers[static_cast<size_t>(p)].erase(e);
        }
        if (piece.right_pair.first >= 0) {
            int e = edge_id(piece.right_pair);
            if (e >= 0)
                killers[static_cast<size_t>(p)].erase(e);
        }
        // a piece away from the deletion reclaims its deletion-side shared edge
        if (p < h_lo) {
            int e = edge_id(layout.pieces[static_cast<size_t>(p)].right_pair);
            if (e >= 0)
                killers[static_cast<size_t>(p)].insert(e);
        } else if (p > h_hi) {
            int e = edge_id(layout.pieces[static_cast<size_t>(p)].left_pair);
            if (e >= 0)
                killers[static_cast<size_t>(p)].insert(e);
        }
    }

    // assign triangles to their unique piece
    std::vector<std::vector<std::array<int, 3>>> tri(static_cast<size_t>(np));
    for (const auto& t : host_triangles(g)) {
        int owner = -1;
        for (int p = 0; p < np; ++p)
            if (vset[static_cast<size_t>(p)].count(t[0]) && vset[static_cast<size_t>(p)].count(t[1]) &&
                vset[static_cast<size_t>(p)].count(t[2])) {
                if (owner >= 0)
                    throw std::logic_error("triangle spans two chain pieces");
                owner = p;
            }
        if (owner < 0)
            throw std::logic_error("triangle outside every chain piece");
        tri[static_cast<size_t>(owner)].push_back(t);
    }

    std::vector<int> image(static_cast<size_t>(g.size()), -1);
    for (int p = 0; p < np; ++p) {
        const auto& triangles = tri[static_cast<size_t>(p)];
        std::vector<int> killer_list(killers[static_cast<size_t>(p)].begin(),
                                     killers[static_cast<size_t>(p)].end());
        std::map<int, int> killer_slot;
        for (size_t i = 0; i < killer_list.size(); ++i)
            killer_slot[killer_list[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(triangles.size());
        auto tri_edges = [&](const std::array<int, 3>& t) {
            return std::array<int, 3>{g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                                      g.edge_index(t[1], t[2])};
        };
        for (size_t ti = 0; ti < triangles.size(); ++ti)
            for (int e : tri_edges(triangles[ti]))
                if (auto it = killer_slot.find(e); it != killer_slot.end())
                    adj[ti].push_back(it->second);
        auto matching = saturating_matching(adj, static_cast<int>(killer_list.size()));
        if (!matching)
            throw std::runtime_error("no saturating triangle-killer injection in chain piece " +
                                     std::to_string(p));
        for (size_t ti = 0; ti < triangles.size(); ++ti) {
            int killer = killer_list[static_cast<size_t>((*matching)[ti])];
            int target = -1;
            for (int e : tri_edges(triangles[ti]))
                if (e != killer && (target == -1 || e < target))
                    target = e;
            image[static_cast<size_t>(killer)] = target;
        }
    }
    complete_mapping(g, image, 1);

    Construction c;
    c.name = fmt("mk3chain", {{"k", std::to_string(k)}, {"delete", std::to_string(*delete_edge)}});
    c.host = g;
    c.family = fam;
    c.mapping = EdgeMapping(std::move(g), std::move(image), 1);
    return c;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("construction parameter needs key=value: " + tok);
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

int get_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing construction parameter: " + key);
    return std::stoi(it->second);
}

std::string get_str(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing construction parameter: " + key);
    return it->second;
}

} // namespace

Construction build_construction(const std::string& spec) {
    std::string kind = spec;
    std::map<std::string, std::string> kv;
    if (auto c = spec.find(':'); c != std::string::npos) {
        kind = spec.substr(0, c);
        kv = parse_kv(spec.substr(c + 1));
    }
    if (kind == "delta")
        return delta_system(get_int(kv, "r"), get_int(kv, "t"));
    if (kind == "plusedge")
        return plus_edge(parse_graph_spec(get_str(kv, "host")), get_str(kv, "host"),
                         parse_graph_spec(get_str(kv, "pattern")), get_str(kv, "pattern"));
    if (kind == "indmatching")
        return ind_matching(parse_graph_spec(get_str(kv, "host")), get_str(kv, "host"),
                            parse_graph_spec(get_str(kv, "pattern")), get_str(kv, "pattern"));
    if (kind == "treeblowup")
        return tree_blowup(parse_graph_spec(get_str(kv, "block")), get_str(kv, "block"),
                           parse_graph_spec(get_str(kv, "tree")), get_str(kv, "tree"),
                           get_int(kv, "n"));
    if (kind == "eulerreg")
        return euler_regular(parse_graph_spec(get_str(kv, "tree")), get_str(kv, "tree"),
                             get_int(kv, "n"));
    if (kind == "bipcyclic")
        return bipartite_cyclic(parse_graph_spec(get_str(kv, "tree")), get_str(kv, "tree"),
                                get_int(kv, "n"));
    if (kind == "k3join")
        return k3_join(get_int(kv, "n"));
    if (kind == "split")
        return split_matching(get_int(kv, "t"), get_int(kv, "n"));
    if (kind == "starplus")
        return star_plus_edge(get_int(kv, "n"));
    if (kind == "k4pendant")
        return k4_pendant();
    if (kind == "matching3t")
        return matching_3t(get_int(kv, "t"));
    if (kind == "dstardel")
        return dstar_deleted(get_int(kv, "r"), get_int(kv, "k"), get_int(kv, "delete"));
    if (kind == "k6five")
        return k6_five_3k2();
    if (kind == "mk3chain") {
        std::optional<int> del;
        if (kv.count("delete"))
            del = get_int(kv, "delete");
        return mk3_chain(get_int(kv, "k"), del);
    }
    throw std::invalid_argument("unknown construction kind: " + kind);
}

std::vector<std::string> construction_grid() {
    std::vector<std::string> grid = {
        "delta:r=2,t=2", "delta:r=3,t=2", "delta:r=2,t=3", "delta:r=3,t=3", "delta:r=4,t=2",
        "plusedge:host=S4,pattern=2K2", "plusedge:host=4K2,pattern=P3", "plusedge:host=KB3-3,pattern=K3",
        "indmatching:host=3K2,pattern=P3", "indmatching:host=KB3-3,pattern=K3",
        "indmatching:host=C5,pattern=K3",
        "treeblowup:block=S3,tree=P4,n=5", "treeblowup:block=S3,tree=P4,n=9",
        "treeblowup:block=KB3-5,tree=P8,n=9",
        "eulerreg:tree=P4,n=6", "eulerreg:tree=P4,n=8", "eulerreg:tree=P4,n=10",
        "eulerreg:tree=S3,n=8",
        "bipcyclic:tree=P4,n=8", "bipcyclic:tree=P4,n=10", "bipcyclic:tree=P4,n=12",
        "bipcyclic:tree=D2-2,n=10",
        "k3join:n=6", "k3join:n=8", "k3join:n=10",
        "split:t=2,n=6", "split:t=3,n=8", "split:t=3,n=12", "split:t=4,n=10",
        "starplus:n=4", "starplus:n=6", "starplus:n=8",
        "k4pendant",
        "matching3t:t=2", "matching3t:t=3", "matching3t:t=4",
        "k6five",
        "mk3chain:k=2", "mk3chain:k=3", "mk3chain:k=4",
    };
    // every single-edge deletion of the k=2 triangle chain (25 edges)
    for (int e = 0; e < 25; ++e)
        grid.push_back("mk3chain:k=2,delete=" + std::to_string(e));
    // double-star family deletions: every edge at (r=2,k=1) and (r=2,k=2),
    // representative cases at r=3
    for (int e = 0; e < 5; ++e)
        grid.push_back("dstardel:r=2,k=1,delete=" + std::to_string(e));
    for (int e = 0; e < 6; ++e)
        grid.push_back("dstardel:r=2,k=2,delete=" + std::to_string(e));
    for (int e = 0; e < 11; ++e)
        grid.push_back("dstardel:r=3,k=1,delete=" + std::to_string(e));
    for (int e = 0; e < 15; ++e)
        grid.push_back("dstardel:r=3,k=2,delete=" + std::to_string(e));
    return grid;
}

} // namespace edgemap
