#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "edgemap/census.hpp"
#include "edgemap/graph6.hpp"
#include "edgemap/named.hpp"

using namespace edgemap;

namespace {

Graph named(GraphKind kind, std::vector<int> params = {}) { return build_named({kind, std::move(params)}); }

// brute-force oracle: one representative per isomorphism class of
// graphs without isolated vertices on at most max_order labeled vertices
std::set<std::string> enumeration_oracle(int max_order, int max_edges) {
    std::set<std::string> forms;
    for (int n = 1; n <= max_order; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<int, int>> es;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1u)
                        es.emplace_back(u, v);
            if (static_cast<int>(es.size()) > max_edges || es.empty())
                continue;
            Graph g = Graph::from_edges(n, es);
            bool isolated = false;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 0)
                    isolated = true;
            if (isolated)
                continue;
            forms.insert(canonical_form(g).bytes);
        }
    }
    return forms;
}

std::set<std::string> forms_of_graphs(const std::vector<Graph>& gs) {
    std::set<std::string> out;
    for (const Graph& g : gs)
        out.insert(canonical_form(g).bytes);
    return out;
}

std::set<std::string> forms_of_records(const std::vector<CensusRecord>& records) {
    std::set<std::string> out;
    for (const CensusRecord& r : records)
        out.insert(r.form.bytes);
    return out;
}

} // namespace

TEST_CASE("enumeration counts match the brute-force oracle") {
    auto got46 = forms_of_graphs(enumerate_graphs(4, 6));
    CHECK(got46 == enumeration_oracle(4, 6));
    CHECK(got46.size() == 10);

    CHECK(enumerate_graphs(2, 1).size() == 1);

    auto got6 = forms_of_graphs(enumerate_graphs(6, 15));
    CHECK(got6 == enumeration_oracle(6, 15));
    CHECK(got6.size() == 155);
}

TEST_CASE("levels are sorted and duplicate-free") {
    auto levels = enumerate_levels(5, 8);
    for (const auto& level : levels) {
        std::set<std::string> seen;
        std::string prev;
        for (const Graph& g : level) {
            std::string enc = to_graph6(g);
            CHECK(seen.insert(enc).second);
            CHECK(prev < enc);
            prev = enc;
        }
    }
    CHECK_THROWS_AS(enumerate_levels(11, 5), budget_error);
}

TEST_CASE("minimal census for 2K2 within order 6") {
    CensusBounds b{6, 8, PatternFamily::parse({"2K2"}), 1, Mode::Free};
    auto records = census_minimal(b);
    std::set<std::string> want = forms_of_graphs({
        disjoint_union(named(GraphKind::Path, {3}), named(GraphKind::Complete, {3})),
        disjoint_union(named(GraphKind::Cycle, {4}), named(GraphKind::Path, {2})),
        named(GraphKind::Path, {6}),
        named(GraphKind::W4Minus),
        named(GraphKind::C4PlusPlus),
    });
    CHECK(forms_of_records(records) == want);
    for (const CensusRecord& r : records) {
        CHECK(r.unavoidable);
        CHECK(r.minimal);
        CHECK(is_minimal_unavoidable(from_graph6(r.form.bytes), b.family, b.d, b.mode));
    }
}

TEST_CASE("no member of the 2K2 family fits in four vertices") {
    CensusBounds b{4, 6, PatternFamily::parse({"2K2"}), 1, Mode::Free};
    CHECK(census_minimal(b).empty());
}

TEST_CASE("minimal census for P3 within order 5") {
    CensusBounds b{5, 10, PatternFamily::parse({"P3"}), 1, Mode::Free};
    auto records = census_minimal(b);
    std::set<std::string> want = forms_of_graphs({
        named(GraphKind::Star, {4}),
        named(GraphKind::CyclePlus, {3}),
        named(GraphKind::CyclePlus, {4}),
    });
    CHECK(forms_of_records(records) == want);
}

TEST_CASE("census is worker-count independent") {
    CensusBounds b{6, 7, PatternFamily::parse({"2K2"}), 1, Mode::Free};
    CensusOptions one, four;
    one.workers = 1;
    four.workers = 4;
    auto r1 = census_minimal(b, one);
    auto r4 = census_minimal(b, four);
    REQUIRE(r1.size() == r4.size());
    for (size_t i = 0; i < r1.size(); ++i)
        CHECK(r1[i].form.bytes == r4[i].form.bytes);
}

TEST_CASE("census checkpoints resume to the same answer") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "edgemap_census_ckpt.json";
    std::error_code ec;
    fs::remove(path, ec);

    CensusBounds b{6, 6, PatternFamily::parse({"P3"}), 1, Mode::Free};
    CensusOptions opts;
    opts.checkpoint_path = path.string();
    auto fresh = census_minimal(b, opts);
    auto resumed = census_minimal(b, opts); // loads every completed level
    REQUIRE(fresh.size() == resumed.size());
    for (size_t i = 0; i < fresh.size(); ++i)
        CHECK(fresh[i].form.bytes == resumed[i].form.bytes);

    CensusBounds other{6, 6, PatternFamily::parse({"2K2"}), 1, Mode::Free};
    CHECK_THROWS_AS(census_minimal(other, opts), std::invalid_argument);
    fs::remove(path, ec);
}
