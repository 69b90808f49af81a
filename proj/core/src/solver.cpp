#include "edgemap/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "edgemap/fastpath.hpp"
#include "edgemap/named.hpp"

namespace edgemap {

namespace {

struct KillOption {
    int edge;
    int target;
};

// One copy to kill, with every assignment f(edge)=target that kills it.
struct CopyTask {
    std::vector<KillOption> options;
};

// Backtracking search for an assignment killing every copy. Branches on
// the unkilled copy with the fewest consistent options; a trail undoes
// status updates on backtrack.
class KillSearch {
public:
    KillSearch(int num_edges, std::vector<CopyTask> tasks, const SolveOptions& opts)
        : opts_(opts), tasks_(std::move(tasks)) {
        assignment_.assign(static_cast<size_t>(num_edges), -1);
        killed_.assign(tasks_.size(), false);
        remaining_.reserve(tasks_.size());
        edge_watch_.assign(static_cast<size_t>(num_edges), {});
        for (size_t c = 0; c < tasks_.size(); ++c) {
            remaining_.push_back(static_cast<int>(tasks_[c].options.size()));
            for (size_t oi = 0; oi < tasks_[c].options.size(); ++oi)
                edge_watch_[static_cast<size_t>(tasks_[c].options[oi].edge)].push_back(
                    {static_cast<int>(c), static_cast<int>(oi)});
        }
    }

    // Returns the partial assignment (unconstrained edges left at -1),
    // or nullopt when every branch is exhausted.
    std::optional<std::vector<int>> run(uint64_t& nodes) {
        if (!matching_bound_ok()) {
            nodes = nodes_;
            return std::nullopt;
        }
        bool ok = dfs();
        nodes = nodes_;
        if (!ok)
            return std::nullopt;
        return assignment_;
    }

private:
    struct Watch {
        int copy;
        int option;
    };
    enum class TrailOp { Assign, Kill, Dec };
    struct TrailEntry {
        TrailOp op;
        int index;
    };

    const SolveOptions& opts_;
    std::vector<CopyTask> tasks_;
    std::vector<int> assignment_;
    std::vector<bool> killed_;
    std::vector<int> remaining_;
    std::vector<std::vector<Watch>> edge_watch_;
    std::vector<TrailEntry> trail_;
    uint64_t nodes_ = 0;

    void check_budget() {
        if (opts_.node_limit && nodes_ > opts_.node_limit)
            throw budget_error("solver node limit exceeded");
        if (opts_.deadline && (nodes_ & 0xff) == 0 &&
            std::chrono::steady_clock::now() > *opts_.deadline)
            throw budget_error("solver deadline exceeded");
    }

    // Applies f(e) = t. Returns false on an immediate dead end (some
    // alive copy loses its last option). Dead-end detection runs after
    // all updates, since a kill can arrive after the count hits zero.
    bool assign(int e, int t) {
        assignment_[static_cast<size_t>(e)] = t;
        trail_.push_back({TrailOp::Assign, e});
        for (const Watch& w : edge_watch_[static_cast<size_t>(e)]) {
            if (killed_[static_cast<size_t>(w.copy)])
                continue;
            const KillOption& opt = tasks_[static_cast<size_t>(w.copy)].options[static_cast<size_t>(w.option)];
            if (opt.target == t) {
                killed_[static_cast<size_t>(w.copy)] = true;
                trail_.push_back({TrailOp::Kill, w.copy});
            } else {
                --remaining_[static_cast<size_t>(w.copy)];
                trail_.push_back({TrailOp::Dec, w.copy});
            }
        }
        for (const Watch& w : edge_watch_[static_cast<size_t>(e)])
            if (!killed_[static_cast<size_t>(w.copy)] && remaining_[static_cast<size_t>(w.copy)] == 0)
                return false;
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry te = trail_.back();
            trail_.pop_back();
            switch (te.op) {
            case TrailOp::Assign:
                assignment_[static_cast<size_t>(te.index)] = -1;
                break;
            case TrailOp::Kill:
                killed_[static_cast<size_t>(te.index)] = false;
                break;
            case TrailOp::Dec:
                ++remaining_[static_cast<size_t>(te.index)];
                break;
            }
        }
    }

    int pick_copy() const {
        int best = -1;
        int best_remaining = std::numeric_limits<int>::max();
        for (size_t c = 0; c < tasks_.size(); ++c) {
            if (killed_[c])
                continue;
            if (remaining_[c] < best_remaining) {
                best_remaining = remaining_[c];
                best = static_cast<int>(c);
                if (best_remaining <= 1)
                    break;
            }
        }
        return best;
    }

    bool dfs() {
        int c = pick_copy();
        if (c < 0)
            return true; // everything killed
        for (const KillOption& opt : tasks_[static_cast<size_t>(c)].options) {
            if (assignment_[static_cast<size_t>(opt.edge)] != -1)
                continue;
            ++nodes_;
            check_budget();
            size_t mark = trail_.size();
            if (assign(opt.edge, opt.target) && dfs())
                return true;
            undo_to(mark);
        }
        return false;
    }

    // When every assignment f(e) = t kills at most one copy (true for
    // matchings, cherries and triangles), each copy needs its own
    // dedicated edge, so a deficient copies-to-edges matching refutes
    // the instance outright.
    bool matching_bound_ok() const {
        std::map<std::pair<int, int>, int> kill_count;
        for (const CopyTask& task : tasks_)
            for (const KillOption& opt : task.options)
                if (++kill_count[{opt.edge, opt.target}] > 1)
                    return true; // bound not applicable
        const int num_edges = static_cast<int>(assignment_.size());
        std::vector<std::vector<int>> adj(tasks_.size());
        for (size_t c = 0; c < tasks_.size(); ++c) {
            std::set<int> edges;
            for (const KillOption& opt : tasks_[c].options)
                edges.insert(opt.edge);
            adj[c].assign(edges.begin(), edges.end());
        }
        std::vector<int> match_edge(static_cast<size_t>(num_edges), -1);
        for (size_t c = 0; c < tasks_.size(); ++c) {
            std::vector<bool> seen(static_cast<size_t>(num_edges), false);
            auto augment = [&](auto&& self, size_t x) -> bool {
                for (int e : adj[x]) {
                    if (seen[static_cast<size_t>(e)])
                        continue;
                    seen[static_cast<size_t>(e)] = true;
                    if (match_edge[static_cast<size_t>(e)] == -1 ||
                        self(self, static_cast<size_t>(match_edge[static_cast<size_t>(e)]))) {
                        match_edge[static_cast<size_t>(e)] = static_cast<int>(c);
                        return true;
                    }
                }
                return false;
            };
            if (!augment(augment, c))
                return false;
        }
        return true;
    }
};

bool edge_touches(const Graph& g, int e, const std::vector<int>& vertices) {
    const Edge& ed = g.edge(e);
    return std::binary_search(vertices.begin(), vertices.end(), ed.u) ||
           std::binary_search(vertices.begin(), vertices.end(), ed.v);
}

int smallest_legal_image(const Graph& host, int e, int d) {
    for (int t = 0; t < host.size(); ++t) {
        if (t == e)
            continue;
        if (d == 0 && !host.edges_disjoint(e, t))
            continue;
        return t;
    }
    return -1;
}

bool legal_pair(const Graph& host, int e, int t, int d) {
    if (t == e)
        return false;
    return d == 1 || host.edges_disjoint(e, t);
}

std::vector<CopyTask> build_tasks(const Graph& host, const std::vector<PatternCopy>& copies, int d,
                                  Mode mode) {
    std::vector<CopyTask> tasks;
    tasks.reserve(copies.size());
    for (const PatternCopy& c : copies) {
        CopyTask task;
        if (mode == Mode::Free) {
            for (int e : c.edges)
                for (int t : c.edges)
                    if (legal_pair(host, e, t, d))
                        task.options.push_back({e, t});
        } else {
            for (int e : c.edges)
                for (int t = 0; t < host.size(); ++t)
                    if (legal_pair(host, e, t, 0) && edge_touches(host, t, c.vertices))
                        task.options.push_back({e, t});
        }
        tasks.push_back(std::move(task));
    }
    return tasks;
}

bool structurally_2k2(const Graph& g) {
    return g.order() == 4 && g.size() == 2 && g.degree(0) == 1 && g.edges_disjoint(0, 1);
}

bool structurally_k3(const Graph& g) { return g.order() == 3 && g.size() == 3; }

long long triangle_count(const Graph& g) {
    long long t = 0;
    for (const Edge& e : g.edges())
        for (int w = e.v + 1; w < g.order(); ++w)
            if (g.has_edge(e.u, w) && g.has_edge(e.v, w))
                ++t;
    return t;
}

} // namespace

AvoidanceVerdict exists_avoider(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                                const SolveOptions& opts) {
    if (d != 0 && d != 1)
        throw std::invalid_argument("distance class must be 0 or 1");
    if (mode == Mode::Exclusive && d != 0)
        throw std::invalid_argument("exclusive mode requires d = 0");
    if (host.size() > 64)
        throw budget_error("solver hosts are limited to 64 edges");

    AvoidanceVerdict verdict;
    if (host.size() == 0) {
        verdict.kind = VerdictKind::Avoider;
        verdict.mapping = EdgeMapping(host, {}, d);
        return verdict;
    }
    // F_{H,d} emptiness: d=1 needs a second edge, d=0 a disjoint partner per edge.
    if (d == 1 && host.size() < 2) {
        verdict.kind = VerdictKind::NoLegalMapping;
        return verdict;
    }
    if (d == 0) {
        for (int e = 0; e < host.size(); ++e) {
            if (smallest_legal_image(host, e, 0) < 0) {
                verdict.kind = VerdictKind::NoLegalMapping;
                return verdict;
            }
        }
    }

    auto copies = enumerate_family_copies(host, patterns);
    auto tasks = build_tasks(host, copies, d, mode);
    KillSearch search(host.size(), std::move(tasks), opts);
    auto assignment = search.run(verdict.stats.nodes);
    if (!assignment) {
        verdict.kind = VerdictKind::Unavoidable;
        return verdict;
    }
    for (int e = 0; e < host.size(); ++e)
        if ((*assignment)[static_cast<size_t>(e)] == -1)
            (*assignment)[static_cast<size_t>(e)] = smallest_legal_image(host, e, d);
    verdict.kind = VerdictKind::Avoider;
    verdict.mapping = EdgeMapping(host, std::move(*assignment), d);
    if (!verify_avoider(host, patterns, *verdict.mapping, mode))
        throw std::logic_error("avoider certificate failed re-verification");
    return verdict;
}

bool is_unavoidable(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                    const SolveOptions& opts) {
    return exists_avoider(host, patterns, d, mode, opts).kind == VerdictKind::Unavoidable;
}

AvoidanceVerdict decide_avoidance(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                                  const DecideOptions& opts) {
    const bool single = patterns.members.size() == 1;
    if (single && mode == Mode::Free && d == 1) {
        const Graph& member = patterns.members.front();
        if (opts.counting_shortcut && (structurally_2k2(member) || structurally_k3(member))) {
            if (auto proof = counting_shortcut(host, member)) {
                AvoidanceVerdict v;
                v.kind = VerdictKind::Unavoidable;
                v.stats.shortcut = "copy-count";
                v.stats.detail = proof->pattern + ": " + std::to_string(proof->copies) + " copies > " +
                                 std::to_string(proof->budget) + " usable edges";
                return v;
            }
        }
        if (opts.fastpath_2k2 && structurally_2k2(member))
            return fast_2k2_decide(host);
    }
    return exists_avoider(host, patterns, d, mode, opts.solve);
}

bool is_minimal_unavoidable(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                            const DecideOptions& opts) {
    if (decide_avoidance(host, patterns, d, mode, opts).kind != VerdictKind::Unavoidable)
        return false;
    for (int e = 0; e < host.size(); ++e) {
        Graph sub = host.without_edge(e).without_isolated_vertices();
        if (decide_avoidance(sub, patterns, d, mode, opts).kind == VerdictKind::Unavoidable)
            return false;
    }
    return true;
}

std::optional<CountingProof> counting_shortcut(const Graph& host, const Graph& pattern) {
    Graph pat = pattern.without_isolated_vertices();
    if (structurally_2k2(pat)) {
        long long copies = 0;
        std::vector<bool> covered(static_cast<size_t>(host.size()), false);
        for (int e1 = 0; e1 < host.size(); ++e1)
            for (int e2 = e1 + 1; e2 < host.size(); ++e2)
                if (host.edges_disjoint(e1, e2)) {
                    ++copies;
                    covered[static_cast<size_t>(e1)] = true;
                    covered[static_cast<size_t>(e2)] = true;
                }
        long long budget = std::count(covered.begin(), covered.end(), true);
        if (copies > budget)
            return CountingProof{"2K2", copies, budget};
        return std::nullopt;
    }
    if (structurally_k3(pat)) {
        long long copies = triangle_count(host);
        long long budget = host.size();
        if (copies > budget)
            return CountingProof{"K3", copies, budget};
        return std::nullopt;
    }
    throw std::invalid_argument("counting shortcut supports patterns 2K2 and K3 only");
}

namespace {

// Shared by the q- and p-searches: try every m-subset S of E(K_n) as the
// set of distance-compliant edges (everything else is a fixed point) and
// look for an assignment killing every copy that lies inside S.
std::optional<QMapping> search_fixed_point_mapping(int n, const PatternFamily& patterns, int d,
                                                   Mode mode, int m, const SolveOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 5)
        throw budget_error("raw K_n mapping search is limited to n <= 5");
    Graph kn = build_named({GraphKind::Complete, {n}});
    const int total = kn.size();
    if (m < 0 || m > total)
        return std::nullopt;
    // A compliant edge needs a legal image at all.
    if (m > 0) {
        if (d == 1 && total < 2)
            return std::nullopt;
        if (d == 0 && n < 4)
            return std::nullopt;
    }

    auto copies = enumerate_family_copies(kn, patterns);

    std::vector<int> subset(static_cast<size_t>(m));
    // lexicographically first m-subset
    for (int i = 0; i < m; ++i)
        subset[static_cast<size_t>(i)] = i;
    std::vector<bool> in_s(static_cast<size_t>(total), false);

    auto try_subset = [&](const std::vector<int>& s) -> std::optional<QMapping> {
        std::fill(in_s.begin(), in_s.end(), false);
        for (int e : s)
            in_s[static_cast<size_t>(e)] = true;
        std::vector<CopyTask> tasks;
        for (const PatternCopy& c : copies) {
            bool inside = true;
            for (int e : c.edges)
                if (!in_s[static_cast<size_t>(e)]) {
                    inside = false;
                    break;
                }
            if (!inside)
                continue; // a fixed-point edge already kills this copy
            CopyTask task;
            for (int e : c.edges) {
                if (mode == Mode::Free) {
                    for (int t : c.edges)
                        if (legal_pair(kn, e, t, d))
                            task.options.push_back({e, t});
                } else {
                    for (int t = 0; t < total; ++t)
                        if (legal_pair(kn, e, t, 0) && edge_touches(kn, t, c.vertices))
                            task.options.push_back({e, t});
                }
            }
            tasks.push_back(std::move(task));
        }
        KillSearch search(total, std::move(tasks), opts);
        uint64_t nodes = 0;
        auto assignment = search.run(nodes);
        if (!assignment)
            return std::nullopt;
        QMapping q;
        q.n = n;
        q.d = d;
        q.free_count = m;
        q.image.assign(static_cast<size_t>(total), -1);
        for (int e = 0; e < total; ++e) {
            if (!in_s[static_cast<size_t>(e)])
                q.image[static_cast<size_t>(e)] = e;
            else if ((*assignment)[static_cast<size_t>(e)] != -1)
                q.image[static_cast<size_t>(e)] = (*assignment)[static_cast<size_t>(e)];
            else
                q.image[static_cast<size_t>(e)] = smallest_legal_image(kn, e, d);
        }
        return q;
    };

    if (m == 0) {
        // all edges fixed: every copy is killed through any of its edges
        return try_subset({});
    }
    while (true) {
        if (auto q = try_subset(subset))
            return q;
        // next m-combination of {0..total-1}
        int i = m - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == total - m + i)
            --i;
        if (i < 0)
            break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

} // namespace

std::optional<QMapping> exists_q_mapping(int n, const PatternFamily& patterns, int d, int m,
                                         const SolveOptions& opts) {
    if (d != 0 && d != 1)
        throw std::invalid_argument("distance class must be 0 or 1");
    return search_fixed_point_mapping(n, patterns, d, Mode::Free, m, opts);
}

std::optional<QMapping> exists_p_mapping(int n, const PatternFamily& patterns, int m,
                                         const SolveOptions& opts) {
    return search_fixed_point_mapping(n, patterns, 0, Mode::Exclusive, m, opts);
}

bool verify_avoider(const Graph& host, const PatternFamily& patterns, const EdgeMapping& f,
                    Mode mode) {
    if (!f.is_legal() || f.host != host)
        return false;
    for (const PatternCopy& c : enumerate_family_copies(host, patterns)) {
        if (mode == Mode::Free ? is_f_free(c, f) : is_f_exclusive(c, f))
            return false;
    }
    return true;
}

} // namespace edgemap
