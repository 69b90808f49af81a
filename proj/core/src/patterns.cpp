#include "edgemap/patterns.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edgemap/named.hpp"

namespace edgemap {

PatternFamily PatternFamily::of(const Graph& g, std::string name) {
    return of(std::vector<Graph>{g}, {std::move(name)});
}

PatternFamily PatternFamily::of(std::vector<Graph> gs, std::vector<std::string> names) {
    if (gs.empty())
        throw std::invalid_argument("pattern family must be non-empty");
    PatternFamily fam;
    names.resize(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].size() == 0)
            throw std::invalid_argument("pattern family member needs at least one edge");
        fam.members.push_back(gs[i].without_isolated_vertices());
        fam.names.push_back(names[i].empty() ? "member" + std::to_string(i) : names[i]);
    }
    return fam;
}

PatternFamily PatternFamily::delta(int r, int t) {
    return of({build_named({GraphKind::Star, {r}}), build_named({GraphKind::Matching, {t}})},
              {"K1," + std::to_string(r), std::to_string(t) + "K2"});
}

PatternFamily PatternFamily::parse(const std::vector<std::string>& specs) {
    std::vector<Graph> gs;
    std::vector<std::string> names;
    for (const std::string& s : specs) {
        if (s.rfind("Delta:", 0) == 0 || s.rfind("delta:", 0) == 0) {
            std::istringstream is(s.substr(6));
            int r = 0, t = 0;
            char comma = 0;
            if (!(is >> r >> comma >> t) || comma != ',')
                throw std::invalid_argument("bad Delta family spec: " + s);
            PatternFamily d = delta(r, t);
            gs.insert(gs.end(), d.members.begin(), d.members.end());
            names.insert(names.end(), d.names.begin(), d.names.end());
        } else {
            gs.push_back(parse_graph_spec(s));
            names.push_back(s);
        }
    }
    return of(std::move(gs), std::move(names));
}

std::string PatternFamily::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < names.size(); ++i)
        os << (i ? ", " : "") << names[i];
    os << "}";
    return os.str();
}

bool PatternCopy::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool PatternCopy::contains_edge(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

// Backtracking injective embedding of pattern vertices into the host.
// Pattern vertices are visited component by component, each component
// ordered so every later vertex touches an earlier one; candidates for
// such vertices come from neighborhoods of already-placed images.
struct Embedder {
    const Graph& host;
    const Graph& pattern;
    bool first_only;

    std::vector<int> order;    // pattern vertices in placement order
    std::vector<int> anchor;   // index into order of a placed neighbor, or -1
    std::vector<int> map;      // pattern vertex -> host vertex
    std::vector<bool> used;    // host vertex used
    std::set<std::vector<int>> edge_sets;
    bool found = false;

    Embedder(const Graph& h, const Graph& p, bool first)
        : host(h), pattern(p), first_only(first) {
        map.assign(static_cast<size_t>(pattern.order()), -1);
        used.assign(static_cast<size_t>(host.order()), false);
        plan_order();
    }

    void plan_order() {
        std::vector<bool> placed(static_cast<size_t>(pattern.order()), false);
        auto comps = connected_components(pattern);
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (const auto& comp : comps) {
            // root: highest degree in the component
            int root = comp[0];
            for (int v : comp)
                if (pattern.degree(v) > pattern.degree(root))
                    root = v;
            order.push_back(root);
            anchor.push_back(-1);
            placed[static_cast<size_t>(root)] = true;
            while (true) {
                // extend by a neighbor of any placed vertex, highest degree first
                int next = -1, next_anchor = -1;
                for (size_t i = 0; i < order.size(); ++i) {
                    for (int w : pattern.neighbors(order[i])) {
                        if (placed[static_cast<size_t>(w)])
                            continue;
                        if (next == -1 || pattern.degree(w) > pattern.degree(next)) {
                            next = w;
                            next_anchor = static_cast<int>(i);
                        }
                    }
                }
                if (next == -1)
                    break;
                order.push_back(next);
                anchor.push_back(next_anchor);
                placed[static_cast<size_t>(next)] = true;
            }
        }
    }

    void record() {
        std::vector<int> es;
        es.reserve(static_cast<size_t>(pattern.size()));
        for (const Edge& pe : pattern.edges()) {
            int he = host.edge_index(map[static_cast<size_t>(pe.u)], map[static_cast<size_t>(pe.v)]);
            es.push_back(he);
        }
        std::sort(es.begin(), es.end());
        edge_sets.insert(std::move(es));
    }

    bool feasible(int pv, int hv) const {
        if (used[static_cast<size_t>(hv)])
            return false;
        if (host.degree(hv) < pattern.degree(pv))
            return false;
        for (int w : pattern.neighbors(pv)) {
            int hw = map[static_cast<size_t>(w)];
            if (hw != -1 && !host.has_edge(hv, hw))
                return false;
        }
        return true;
    }

    void dfs(size_t k) {
        if (found && first_only)
            return;
        if (k == order.size()) {
            found = true;
            if (!first_only)
                record();
            return;
        }
        int pv = order[k];
        if (anchor[k] >= 0) {
            int placed_host = map[static_cast<size_t>(order[static_cast<size_t>(anchor[k])])];
            for (int hv : host.neighbors(placed_host)) {
                if (!feasible(pv, hv))
                    continue;
                map[static_cast<size_t>(pv)] = hv;
                used[static_cast<size_t>(hv)] = true;
                dfs(k + 1);
                used[static_cast<size_t>(hv)] = false;
                map[static_cast<size_t>(pv)] = -1;
                if (found && first_only)
                    return;
            }
        } else {
            for (int hv = 0; hv < host.order(); ++hv) {
                if (!feasible(pv, hv))
                    continue;
                map[static_cast<size_t>(pv)] = hv;
                used[static_cast<size_t>(hv)] = true;
                dfs(k + 1);
                used[static_cast<size_t>(hv)] = false;
                map[static_cast<size_t>(pv)] = -1;
                if (found && first_only)
                    return;
            }
        }
    }
};

} // namespace

std::vector<PatternCopy> enumerate_copies(const Graph& host, const Graph& pattern) {
    Graph pat = pattern.without_isolated_vertices();
    if (pat.size() == 0)
        throw std::invalid_argument("pattern needs at least one edge");
    std::vector<PatternCopy> out;
    if (pat.order() > host.order() || pat.size() > host.size())
        return out;
    Embedder emb(host, pat, false);
    emb.dfs(0);
    for (const auto& es : emb.edge_sets) {
        PatternCopy c;
        c.edges = es;
        std::set<int> vs;
        for (int e : es) {
            vs.insert(host.edge(e).u);
            vs.insert(host.edge(e).v);
        }
        c.vertices.assign(vs.begin(), vs.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<PatternCopy> enumerate_family_copies(const Graph& host, const PatternFamily& family) {
    std::vector<PatternCopy> out;
    for (size_t m = 0; m < family.members.size(); ++m) {
        auto copies = enumerate_copies(host, family.members[m]);
        for (auto& c : copies) {
            c.member = static_cast<int>(m);
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    Graph pat = pattern.without_isolated_vertices();
    if (pat.size() == 0)
        return true;
    if (pat.order() > host.order() || pat.size() > host.size())
        return false;
    Embedder emb(host, pat, true);
    emb.dfs(0);
    return emb.found;
}

bool is_f_free(const PatternCopy& copy, const EdgeMapping& f) {
    for (int e : copy.edges)
        if (copy.contains_edge(f(e)))
            return false;
    return true;
}

bool is_f_exclusive(const PatternCopy& copy, const EdgeMapping& f) {
    for (int e : copy.edges) {
        const Edge& img = f.host.edge(f(e));
        if (copy.contains_vertex(img.u) || copy.contains_vertex(img.v))
            return false;
    }
    return true;
}

} // namespace edgemap
