#include "edgemap/report.hpp"

#include <json.hpp>

#include "edgemap/graph6.hpp"

namespace edgemap {

using nlohmann::ordered_json;

std::string mode_name(Mode mode) { return mode == Mode::Free ? "free" : "exclusive"; }

Mode mode_from_name(const std::string& s) {
    if (s == "free")
        return Mode::Free;
    if (s == "exclusive")
        return Mode::Exclusive;
    throw std::invalid_argument("unknown mode: " + s);
}

std::string verdict_name(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Avoider: return "avoider";
    case VerdictKind::Unavoidable: return "unavoidable";
    case VerdictKind::NoLegalMapping: return "no-legal-mapping";
    }
    return "?";
}

namespace {

ordered_json mapping_pairs(const std::vector<int>& image) {
    auto arr = ordered_json::array();
    for (size_t e = 0; e < image.size(); ++e)
        arr.push_back(ordered_json::array({e, image[e]}));
    return arr;
}

ordered_json family_names(const PatternFamily& family) {
    auto arr = ordered_json::array();
    for (const std::string& name : family.names)
        arr.push_back(name);
    return arr;
}

ordered_json stats_json(const SearchStats& stats) {
    ordered_json j;
    j["nodes"] = stats.nodes;
    if (!stats.shortcut.empty())
        j["shortcut"] = stats.shortcut;
    if (!stats.detail.empty())
        j["detail"] = stats.detail;
    return j;
}

} // namespace

std::string verdict_report(const Graph& host, const PatternFamily& family, int d, Mode mode,
                           const AvoidanceVerdict& verdict) {
    ordered_json j;
    j["kind"] = "avoidance";
    j["host"] = to_graph6(host);
    j["d"] = d;
    j["mode"] = mode_name(mode);
    j["family"] = family_names(family);
    j["verdict"] = verdict_name(verdict.kind);
    if (verdict.mapping)
        j["mapping"] = mapping_pairs(verdict.mapping->image);
    j["stats"] = stats_json(verdict.stats);
    return j.dump(2) + "\n";
}

std::string construction_report(const Construction& c, bool verified) {
    ordered_json j;
    j["kind"] = "construction";
    j["name"] = c.name;
    j["host"] = to_graph6(c.host);
    j["order"] = c.host.order();
    j["edges"] = c.host.size();
    j["d"] = c.d;
    j["mode"] = mode_name(c.mode);
    j["family"] = family_names(c.family);
    if (c.mapping)
        j["mapping"] = mapping_pairs(c.mapping->image);
    if (c.proof) {
        ordered_json p;
        p["pattern"] = c.proof->pattern;
        p["copies"] = c.proof->copies;
        p["budget"] = c.proof->budget;
        j["counting_proof"] = p;
    }
    j["verified"] = verified;
    return j.dump(2) + "\n";
}

std::string extremal_report(const ExtremalResult& r) {
    ordered_json j;
    j["kind"] = "extremal";
    j["function"] = r.func;
    j["n"] = r.n;
    j["family"] = family_names(r.family);
    j["value"] = r.value;
    if (r.witness)
        j["witness"] = to_graph6(*r.witness);
    if (r.mapping)
        j["mapping"] = mapping_pairs(r.mapping->image);
    if (r.qmapping) {
        ordered_json q;
        q["n"] = r.qmapping->n;
        q["d"] = r.qmapping->d;
        q["free_count"] = r.qmapping->free_count;
        q["mapping"] = mapping_pairs(r.qmapping->image);
        j["kn_mapping"] = q;
    }
    j["stats"] = stats_json(r.stats);
    return j.dump(2) + "\n";
}

std::string census_report(const CensusBounds& bounds, const std::vector<CensusRecord>& records) {
    ordered_json j;
    j["kind"] = "census";
    j["max_order"] = bounds.max_order;
    j["max_edges"] = bounds.max_edges;
    j["family"] = family_names(bounds.family);
    j["d"] = bounds.d;
    j["mode"] = mode_name(bounds.mode);
    auto arr = ordered_json::array();
    for (const CensusRecord& r : records) {
        ordered_json rec;
        rec["graph6"] = r.form.bytes;
        rec["order"] = r.order;
        rec["edges"] = r.edge_count;
        rec["unavoidable"] = r.unavoidable;
        rec["minimal"] = r.minimal;
        arr.push_back(rec);
    }
    j["records"] = arr;
    return j.dump(2) + "\n";
}

std::string census_graph6_lines(const std::vector<CensusRecord>& records) {
    std::string out;
    for (const CensusRecord& r : records) {
        out += r.form.bytes;
        out += '\n';
    }
    return out;
}

namespace {

EdgeMapping mapping_from_json(const Graph& host, const nlohmann::json& arr, int d) {
    std::vector<int> image(static_cast<size_t>(host.size()), -1);
    for (const auto& pair : arr) {
        int e = pair.at(0).get<int>();
        int t = pair.at(1).get<int>();
        if (e < 0 || e >= host.size())
            throw std::invalid_argument("mapping edge index out of range");
        image[static_cast<size_t>(e)] = t;
    }
    return EdgeMapping(host, std::move(image), d);
}

} // namespace

bool verify_report(const std::string& json_text, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    nlohmann::json j = nlohmann::json::parse(json_text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "avoidance" && kind != "construction")
        return fail("not a verifiable certificate kind: " + kind);
    Graph host = from_graph6(j.at("host").get<std::string>());
    int d = j.at("d").get<int>();
    Mode mode = mode_from_name(j.at("mode").get<std::string>());
    std::vector<std::string> names;
    for (const auto& name : j.at("family"))
        names.push_back(name.get<std::string>());
    PatternFamily family = PatternFamily::parse(names);

    if (kind == "construction") {
        if (j.contains("mapping")) {
            EdgeMapping f = mapping_from_json(host, j.at("mapping"), d);
            if (!verify_construction(host, f, family, mode))
                return fail("construction mapping leaves a live copy");
            return true;
        }
        if (j.contains("counting_proof")) {
            auto proof = counting_shortcut(host, family.members.front());
            if (!proof)
                return fail("counting proof no longer derivable");
            if (proof->copies != j.at("counting_proof").at("copies").get<long long>() ||
                proof->budget != j.at("counting_proof").at("budget").get<long long>())
                return fail("counting proof numbers changed");
            return true;
        }
        return fail("construction carries neither mapping nor proof");
    }

    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "avoider") {
        EdgeMapping f = mapping_from_json(host, j.at("mapping"), d);
        if (!verify_avoider(host, family, f, mode))
            return fail("avoider mapping leaves a live copy");
        return true;
    }
    AvoidanceVerdict again = exists_avoider(host, family, d, mode);
    if (verdict_name(again.kind) != verdict)
        return fail("re-decision disagrees: " + verdict_name(again.kind));
    return true;
}

} // namespace edgemap
