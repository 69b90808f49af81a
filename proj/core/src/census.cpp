#include "edgemap/census.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "edgemap/graph6.hpp"
#include "parallel.hpp"

namespace edgemap {

std::vector<std::vector<Graph>> enumerate_levels(int max_order, int max_edges) {
    if (max_order < 0 || max_order > 10)
        throw budget_error("census enumeration supports orders up to 10");
    if (max_edges < 0 || max_edges > 28)
        throw budget_error("census enumeration supports at most 28 edges");
    std::vector<std::vector<Graph>> levels(static_cast<size_t>(max_edges) + 1);
    levels[0].push_back(Graph(0));
    for (int m = 0; m < max_edges; ++m) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        auto add = [&](const Graph& child) {
            Graph canon = canonical_graph(child);
            std::string key = to_graph6(canon);
            if (seen.insert(key).second)
                next.push_back(std::move(canon));
        };
        for (const Graph& parent : levels[static_cast<size_t>(m)]) {
            const int p = parent.order();
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v)
                    if (!parent.has_edge(u, v))
                        add(parent.with_edge(u, v));
            if (p + 1 <= max_order) {
                Graph grown = parent.padded(p + 1);
                for (int u = 0; u < p; ++u)
                    add(grown.with_edge(u, p));
            }
            if (p + 2 <= max_order)
                add(parent.padded(p + 2).with_edge(p, p + 1));
        }
        std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
            return to_graph6(a) < to_graph6(b);
        });
        levels[static_cast<size_t>(m) + 1] = std::move(next);
    }
    return levels;
}

std::vector<Graph> enumerate_graphs(int max_order, int max_edges) {
    auto levels = enumerate_levels(max_order, max_edges);
    std::vector<Graph> out;
    for (size_t m = 1; m < levels.size(); ++m)
        for (Graph& g : levels[m])
            out.push_back(std::move(g));
    return out;
}

namespace {

nlohmann::ordered_json record_to_json(const CensusRecord& r) {
    return nlohmann::ordered_json{{"graph6", r.form.bytes},
                                  {"order", r.order},
                                  {"edges", r.edge_count},
                                  {"unavoidable", r.unavoidable},
                                  {"minimal", r.minimal},
                                  {"nodes", r.stats.nodes},
                                  {"shortcut", r.stats.shortcut}};
}

CensusRecord record_from_json(const nlohmann::json& j) {
    CensusRecord r;
    r.form.bytes = j.at("graph6").get<std::string>();
    r.order = j.at("order").get<int>();
    r.edge_count = j.at("edges").get<int>();
    r.unavoidable = j.at("unavoidable").get<bool>();
    r.minimal = j.at("minimal").get<bool>();
    r.stats.nodes = j.at("nodes").get<uint64_t>();
    r.stats.shortcut = j.at("shortcut").get<std::string>();
    return r;
}

std::string bounds_key(const CensusBounds& b) {
    std::string key = std::to_string(b.max_order) + "/" + std::to_string(b.max_edges) + "/d" +
                      std::to_string(b.d) + "/" + (b.mode == Mode::Free ? "free" : "exclusive");
    for (const Graph& g : b.family.members)
        key += "/" + to_graph6(canonical_graph(g));
    return key;
}

} // namespace

std::vector<CensusRecord> census_minimal(const CensusBounds& bounds, const CensusOptions& opts) {
    const int workers = detail::resolve_workers(opts.workers);
    auto levels = enumerate_levels(bounds.max_order, bounds.max_edges);

    std::set<int> completed;
    std::vector<CensusRecord> records;
    const std::string key = bounds_key(bounds);
    if (opts.checkpoint_path) {
        std::ifstream in(*opts.checkpoint_path);
        if (in) {
            nlohmann::json j;
            in >> j;
            if (j.at("bounds").get<std::string>() != key)
                throw std::invalid_argument("checkpoint belongs to different census bounds");
            for (int m : j.at("completed"))
                completed.insert(m);
            for (const auto& rj : j.at("records"))
                records.push_back(record_from_json(rj));
        }
    }

    auto save_checkpoint = [&]() {
        if (!opts.checkpoint_path)
            return;
        nlohmann::ordered_json j;
        j["bounds"] = key;
        j["completed"] = completed;
        auto arr = nlohmann::ordered_json::array();
        for (const CensusRecord& r : records)
            arr.push_back(record_to_json(r));
        j["records"] = arr;
        std::string tmp = *opts.checkpoint_path + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(1) << "\n";
        }
        std::rename(tmp.c_str(), opts.checkpoint_path->c_str());
    };

    for (size_t m = 1; m < levels.size(); ++m) {
        if (completed.count(static_cast<int>(m)))
            continue;
        const std::vector<Graph>& level = levels[m];
        std::vector<std::optional<CensusRecord>> found(level.size());
        detail::parallel_for(static_cast<int>(level.size()), workers, [&](int i) {
            const Graph& g = level[static_cast<size_t>(i)];
            AvoidanceVerdict v = decide_avoidance(g, bounds.family, bounds.d, bounds.mode, opts.decide);
            if (v.kind != VerdictKind::Unavoidable)
                return;
            for (int e = 0; e < g.size(); ++e) {
                Graph sub = g.without_edge(e).without_isolated_vertices();
                if (decide_avoidance(sub, bounds.family, bounds.d, bounds.mode, opts.decide).kind ==
                    VerdictKind::Unavoidable)
                    return; // a proper subgraph is already unavoidable
            }
            CensusRecord r;
            r.form = CanonicalForm{to_graph6(g)};
            r.order = g.order();
            r.edge_count = g.size();
            r.unavoidable = true;
            r.minimal = true;
            r.stats = v.stats;
            found[static_cast<size_t>(i)] = std::move(r);
        });
        for (auto& r : found)
            if (r)
                records.push_back(std::move(*r));
        completed.insert(static_cast<int>(m));
        save_checkpoint();
    }

    std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
        if (a.edge_count != b.edge_count)
            return a.edge_count < b.edge_count;
        return a.form.bytes < b.form.bytes;
    });
    return records;
}

} // namespace edgemap
