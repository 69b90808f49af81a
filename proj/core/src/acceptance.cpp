#include "edgemap/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "edgemap/census.hpp"
#include "edgemap/constructions.hpp"
#include "edgemap/extremal.hpp"
#include "edgemap/fastpath.hpp"
#include "edgemap/functional.hpp"
#include "edgemap/graph6.hpp"
#include "edgemap/named.hpp"

namespace edgemap {

namespace {

using Check = std::function<bool(std::string&)>;

PatternFamily fam_2k2() { return PatternFamily::of(build_named({GraphKind::Matching, {2}}), "2K2"); }
PatternFamily fam_p3() { return PatternFamily::of(build_named({GraphKind::Path, {3}}), "P3"); }

std::set<std::string> forms_of(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs)
        out.insert(canonical_form(g).bytes);
    return out;
}

std::set<std::string> forms_of_records(const std::vector<CensusRecord>& records) {
    std::set<std::string> out;
    for (const CensusRecord& r : records)
        out.insert(r.form.bytes);
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    return os.str();
}

// every copy of a family member inside K_n must be hit by the mapping
bool qmapping_kills_everything(const QMapping& q, const PatternFamily& family, bool exclusive) {
    Graph kn = build_named({GraphKind::Complete, {q.n}});
    for (const PatternCopy& c : enumerate_family_copies(kn, family)) {
        bool killed = false;
        for (int e : c.edges) {
            int t = q.image[static_cast<size_t>(e)];
            if (!exclusive) {
                if (c.contains_edge(t)) {
                    killed = true;
                    break;
                }
            } else {
                const Edge& img = kn.edge(t);
                if (c.contains_vertex(img.u) || c.contains_vertex(img.v)) {
                    killed = true;
                    break;
                }
            }
        }
        if (!killed)
            return false;
    }
    return true;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream* log) {
    ExtremalOptions xopts;
    xopts.workers = opts.workers;
    CensusOptions copts;
    copts.workers = opts.workers;

    std::vector<std::pair<std::string, Check>> criteria;

    criteria.emplace_back("h(n,2K2) = 6,7,7,7 for n = 4..7", [&](std::string& detail) {
        std::vector<int> got, want{6, 7, 7, 7};
        for (int n = 4; n <= 7; ++n)
            got.push_back(compute_h(n, fam_2k2(), xopts).value);
        detail = "got " + join_ints(got);
        return got == want;
    });

    criteria.emplace_back("h(8,2K2) = 8", [&](std::string& detail) {
        int got = compute_h(8, fam_2k2(), xopts).value;
        detail = "got " + std::to_string(got);
        return got == 8;
    });

    criteria.emplace_back("minimal unavoidable census for 2K2 (order <= 8, edges <= 8)",
                          [&](std::string& detail) {
        CensusBounds b{8, 8, fam_2k2(), 1, Mode::Free};
        auto records = census_minimal(b, copts);
        Graph p3 = build_named({GraphKind::Path, {3}});
        std::set<std::string> want = forms_of({
            build_named({GraphKind::Matching, {4}}),
            disjoint_union(p3, build_named({GraphKind::Matching, {2}})),
            disjoint_union(p3, build_named({GraphKind::Complete, {3}})),
            disjoint_union(p3, build_named({GraphKind::Star, {3}})),
            disjoint_union(build_named({GraphKind::Cycle, {4}}), build_named({GraphKind::Path, {2}})),
            build_named({GraphKind::Path, {6}}),
            build_named({GraphKind::W4Minus, {}}),
            build_named({GraphKind::C4PlusPlus, {}}),
        });
        detail = std::to_string(records.size()) + " members";
        return forms_of_records(records) == want;
    });

    criteria.emplace_back("minimal unavoidable census for P3 (order <= 7)", [&](std::string& detail) {
        CensusBounds b{7, 21, fam_p3(), 1, Mode::Free};
        auto records = census_minimal(b, copts);
        std::set<std::string> want = forms_of({
            build_named({GraphKind::Star, {4}}),
            build_named({GraphKind::CyclePlus, {3}}),
            build_named({GraphKind::CyclePlus, {4}}),
            build_named({GraphKind::CyclePlus, {5}}),
            build_named({GraphKind::CyclePlus, {6}}),
            build_named({GraphKind::BGraph, {1}}),
            build_named({GraphKind::BGraph, {2}}),
        });
        detail = std::to_string(records.size()) + " members";
        return forms_of_records(records) == want;
    });

    criteria.emplace_back("line-complement decision agrees with the solver on all 156 graphs of order <= 6",
                          [&](std::string& detail) {
        auto levels = enumerate_levels(6, 15);
        int agreed = 0, total = 0;
        for (const auto& level : levels)
            for (const Graph& g : level) {
                ++total;
                VerdictKind a = fast_2k2_decide(g).kind;
                VerdictKind b = exists_avoider(g, fam_2k2(), 1, Mode::Free).kind;
                if (a == b)
                    ++agreed;
            }
        detail = std::to_string(agreed) + "/" + std::to_string(total) + " classes agree";
        return total == 156 && agreed == total;
    });

    criteria.emplace_back("(3t-2)K2 is minimal unavoidable for tK2 at t = 2, 3", [&](std::string& detail) {
        bool ok = true;
        for (int t : {2, 3}) {
            PatternFamily fam =
                PatternFamily::of(build_named({GraphKind::Matching, {t}}), std::to_string(t) + "K2");
            Graph host = build_named({GraphKind::Matching, {3 * t - 2}});
            ok = ok && is_minimal_unavoidable(host, fam, 1, Mode::Free);
        }
        detail = ok ? "both minimal" : "flag mismatch";
        return ok;
    });

    criteria.emplace_back("s(6,K_{1,2}) = 15 and the five-matching decomposition verifies",
                          [&](std::string& detail) {
        PatternFamily fam = PatternFamily::of(build_named({GraphKind::Star, {2}}), "K1,2");
        int got = compute_s(6, fam, xopts).value;
        bool cons = verify_construction(k6_five_3k2());
        detail = "s = " + std::to_string(got) + (cons ? ", construction ok" : ", construction fails");
        return got == 15 && cons;
    });

    criteria.emplace_back("q(n,2K2) = h(n,2K2) for n = 4, 5", [&](std::string& detail) {
        std::vector<int> qs, hs;
        for (int n : {4, 5}) {
            qs.push_back(compute_q(n, fam_2k2(), xopts).value);
            hs.push_back(compute_h(n, fam_2k2(), xopts).value);
        }
        detail = "q = " + join_ints(qs) + ", h = " + join_ints(hs);
        return qs == hs;
    });

    criteria.emplace_back("h(n,K_{1,2}) = min(C(n,2), n) for n = 4, 5", [&](std::string& detail) {
        PatternFamily fam = PatternFamily::of(build_named({GraphKind::Star, {2}}), "K1,2");
        std::vector<int> got, want;
        for (int n : {4, 5}) {
            got.push_back(compute_h(n, fam, xopts).value);
            want.push_back(std::min(n * (n - 1) / 2, n));
        }
        detail = "got " + join_ints(got);
        return got == want;
    });

    criteria.emplace_back("construction grid verifies (chain triangle count and 25 deletion mappings included)",
                          [&](std::string& detail) {
        auto grid = construction_grid();
        int passed = 0;
        std::vector<std::string> failures;
        for (const std::string& spec : grid) {
            try {
                if (verify_construction(build_construction(spec)))
                    ++passed;
                else
                    failures.push_back(spec);
            } catch (const std::exception& e) {
                failures.push_back(spec + " (" + e.what() + ")");
            }
        }
        detail = std::to_string(passed) + "/" + std::to_string(grid.size()) + " instances";
        if (!failures.empty())
            detail += ", first failure: " + failures.front();
        return passed == static_cast<int>(grid.size()) && grid.size() >= 25;
    });

    criteria.emplace_back("property batteries (sandwich, strictness, minimal-family identity, "
                          "monotonicity, certificates, independence bounds)",
                          [&](std::string& detail) {
        std::ostringstream log2;
        bool ok = true;

        // sandwich ex <= h <= 3 ex and strictness h > ex
        struct Pair {
            PatternFamily fam;
            int min_n, max_n;
        };
        std::vector<Pair> pairs{
            {fam_2k2(), 4, 7},
            {fam_p3(), 3, 7},
            {PatternFamily::of(build_named({GraphKind::Complete, {3}}), "K3"), 3, 6},
            {PatternFamily::of(build_named({GraphKind::Star, {3}}), "K1,3"), 4, 6},
        };
        for (const Pair& p : pairs) {
            for (int n = p.min_n; n <= p.max_n; ++n) {
                int ex = compute_ex(n, p.fam, xopts).value;
                ExtremalResult h = compute_h(n, p.fam, xopts);
                if (!(ex <= h.value && h.value <= 3 * ex)) {
                    ok = false;
                    log2 << " sandwich fails for " << p.fam.to_string() << " n=" << n;
                }
                if (!(h.value > ex)) {
                    ok = false;
                    log2 << " strictness fails for " << p.fam.to_string() << " n=" << n;
                }
                if (!h.mapping || !verify_avoider(*h.witness, p.fam, *h.mapping, Mode::Free)) {
                    ok = false;
                    log2 << " h witness fails for " << p.fam.to_string() << " n=" << n;
                }
            }
        }

        // h(n,H) equals the Turán number of the minimal family within order n
        for (int which = 0; which < 2; ++which) {
            PatternFamily fam = which == 0 ? fam_p3() : fam_2k2();
            for (int n = 3; n <= 7; ++n) {
                CensusBounds b{n, n * (n - 1) / 2, fam, 1, Mode::Free};
                auto records = census_minimal(b, copts);
                int exm;
                if (records.empty()) {
                    exm = n * (n - 1) / 2;
                } else {
                    std::vector<Graph> members;
                    std::vector<std::string> names;
                    for (const CensusRecord& r : records) {
                        members.push_back(from_graph6(r.form.bytes));
                        names.push_back("g6:" + r.form.bytes);
                    }
                    exm = compute_ex(n, PatternFamily::of(members, names), xopts).value;
                }
                int h = compute_h(n, fam, xopts).value;
                if (h != exm) {
                    ok = false;
                    log2 << " identity fails for " << fam.to_string() << " n=" << n << " (h=" << h
                         << ", ex=" << exm << ")";
                }
            }
        }

        // monotonicity of unavoidability under supergraphs
        std::mt19937 rng(20250810u);
        int mono_checked = 0;
        while (mono_checked < 200) {
            int n = 4 + static_cast<int>(rng() % 3);
            std::vector<std::pair<int, int>> all;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    all.emplace_back(u, v);
            std::vector<std::pair<int, int>> qes, hes;
            for (auto e : all)
                if (rng() % 2)
                    qes.push_back(e);
            for (auto e : qes)
                if (rng() % 5 < 3)
                    hes.push_back(e);
            Graph q = Graph::from_edges(n, qes);
            Graph h = Graph::from_edges(n, hes);
            PatternFamily fam = (mono_checked % 2 == 0) ? fam_2k2() : fam_p3();
            ++mono_checked;
            if (is_unavoidable(h, fam, 1, Mode::Free) && !is_unavoidable(q, fam, 1, Mode::Free)) {
                ok = false;
                log2 << " monotonicity fails on a random pair (n=" << n << ")";
            }
        }

        // K_n mapping certificates
        for (int n : {4, 5}) {
            ExtremalResult q = compute_q(n, fam_2k2(), xopts);
            if (!q.qmapping || !q.qmapping->is_consistent() ||
                !qmapping_kills_everything(*q.qmapping, fam_2k2(), false)) {
                ok = false;
                log2 << " q certificate fails at n=" << n;
            }
            PatternFamily star2 = PatternFamily::of(build_named({GraphKind::Star, {2}}), "K1,2");
            ExtremalResult p = compute_p(n, star2, xopts);
            if (!p.qmapping || !qmapping_kills_everything(*p.qmapping, star2, true)) {
                ok = false;
                log2 << " p certificate fails at n=" << n;
            }
        }

        // independence bounds on random bounded-out-degree digraphs
        std::mt19937 rng2(424243u);
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng2() % 30);
            int d = 1 + static_cast<int>(rng2() % 3);
            std::vector<std::pair<int, int>> arcs;
            for (int v = 0; v < n; ++v) {
                int outdeg = static_cast<int>(rng2() % static_cast<unsigned>(d + 1));
                for (int j = 0; j < outdeg && n > 1; ++j) {
                    int w = static_cast<int>(rng2() % static_cast<unsigned>(n));
                    if (w != v)
                        arcs.emplace_back(v, w);
                }
            }
            FunctionalDigraph g = FunctionalDigraph::from_arcs(n, arcs);
            g.d = std::max(g.d, d);
            auto ind = independent_set(g);
            std::set<int> inset(ind.begin(), ind.end());
            bool independent = true;
            for (int v : ind)
                for (int w : g.out[static_cast<size_t>(v)])
                    if (inset.count(w) && w != v)
                        independent = false;
            int bound = (n + 2 * g.d) / (2 * g.d + 1);
            int max_out = 0, zero_out = 0;
            for (const auto& lst : g.out) {
                max_out = std::max(max_out, static_cast<int>(lst.size()));
                if (lst.empty())
                    ++zero_out;
            }
            if (max_out <= 1) {
                int m = zero_out;
                bound = std::max(bound, m + std::max(0, (n - 2 * m + 2) / 3));
            }
            if (!independent || static_cast<int>(ind.size()) < bound) {
                ok = false;
                log2 << " independence bound fails (n=" << n << ", d=" << g.d << ")";
                break;
            }
        }

        detail = ok ? "all properties hold" : log2.str();
        return ok;
    });

    std::vector<CriterionResult> results;
    int id = 1;
    for (auto& [name, check] : criteria) {
        CriterionResult r;
        r.id = id++;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.pass = check(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (log) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(1);
            line << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name;
            if (!r.detail.empty())
                line << " -- " << r.detail;
            line << " (" << r.seconds << "s)";
            (*log) << line.str() << std::endl;
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass)
            return false;
    return true;
}

} // namespace edgemap
