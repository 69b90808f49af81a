// Command-line front end: avoidance decisions, censuses, extremal
// values, construction generators and the acceptance battery.
//
// Exit codes: 0 ok, 1 verification/criterion failure, 2 budget or
// timeout, 3 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "edgemap/acceptance.hpp"
#include "edgemap/census.hpp"
#include "edgemap/constructions.hpp"
#include "edgemap/extremal.hpp"
#include "edgemap/fastpath.hpp"
#include "edgemap/graph6.hpp"
#include "edgemap/named.hpp"
#include "edgemap/report.hpp"

namespace {

using namespace edgemap;

Graph load_host(const std::string& spec) {
    if (spec == "-") {
        std::string line;
        if (!std::getline(std::cin, line))
            throw std::invalid_argument("no graph6 line on stdin");
        return from_graph6(line);
    }
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in)
            throw std::invalid_argument("cannot open host file: " + spec.substr(1));
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("empty host file: " + spec.substr(1));
        return from_graph6(line);
    }
    return parse_graph_spec(spec);
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path)
        return;
    std::ofstream out(*path);
    if (!out)
        throw std::runtime_error("cannot write output file: " + *path);
    out << text;
}

SolveOptions make_solve_options(double time_limit_s, uint64_t node_limit) {
    SolveOptions s;
    s.node_limit = node_limit;
    if (time_limit_s > 0)
        s.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(time_limit_s));
    return s;
}

std::string incomplete_report(const std::string& kind, const std::string& reason) {
    return std::string("{\n  \"kind\": \"") + kind + "\",\n  \"complete\": false,\n  \"error\": \"" +
           reason + "\"\n}\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-mapping avoidance toolkit"};
    app.require_subcommand(1);

    std::string host_spec;
    std::vector<std::string> pattern_specs;
    int d = 1;
    std::string mode_str = "free";
    int workers = 0;
    double time_limit = 0;
    uint64_t node_limit = 0;
    std::optional<std::string> output;
    int n = 0;

    auto add_common = [&](CLI::App* cmd, bool with_patterns) {
        if (with_patterns)
            cmd->add_option("--pattern", pattern_specs, "pattern graph spec (repeatable; Delta:r,t expands)")
                ->required();
        cmd->add_option("--workers", workers, "worker threads (default: available parallelism)");
        cmd->add_option("--time-limit", time_limit, "cooperative time limit in seconds");
        cmd->add_option("--node-limit", node_limit, "search node limit");
        cmd->add_option("--output,-o", output, "write the JSON report to this path");
    };

    auto* avoid = app.add_subcommand("avoid", "decide whether a host admits an avoider mapping");
    avoid->add_option("--host", host_spec, "host graph (name, g6:..., @file or - for stdin)")->required();
    avoid->add_option("--d", d, "distance class (0 or 1)")->check(CLI::Range(0, 1));
    avoid->add_option("--mode", mode_str, "free or exclusive")
        ->check(CLI::IsMember({"free", "exclusive"}));
    add_common(avoid, true);

    auto* fast = app.add_subcommand("fast2k2", "2K2 decision via the line-graph complement");
    fast->add_option("--host", host_spec, "host graph")->required();
    fast->add_option("--output,-o", output, "write the JSON report to this path");

    auto* census_cmd = app.add_subcommand("census", "minimal unavoidable graphs within bounds");
    int max_order = 0, max_edges = -1;
    std::optional<std::string> checkpoint;
    census_cmd->add_option("--max-order", max_order, "largest order to enumerate")->required();
    census_cmd->add_option("--max-edges", max_edges, "largest edge count (default C(N,2))");
    census_cmd->add_option("--d", d, "distance class")->check(CLI::Range(0, 1));
    census_cmd->add_option("--mode", mode_str, "free or exclusive")
        ->check(CLI::IsMember({"free", "exclusive"}));
    census_cmd->add_option("--checkpoint", checkpoint, "resumable checkpoint file");
    add_common(census_cmd, true);

    std::map<std::string, CLI::App*> extremal_cmds;
    for (std::string fn : {"ex", "h", "s", "q", "p"}) {
        auto* cmd = app.add_subcommand(fn, fn + "(n, patterns)");
        cmd->add_option("--n", n, "host order")->required();
        add_common(cmd, true);
        extremal_cmds[fn] = cmd;
    }

    auto* construct = app.add_subcommand("construct", "build a named construction");
    std::string construction_spec;
    bool do_verify = false;
    construct->add_option("spec", construction_spec, "construction spec, e.g. split:t=3,n=12")
        ->required();
    construct->add_flag("--verify", do_verify, "verify the construction exhaustively");
    construct->add_option("--output,-o", output, "write the JSON report to this path");

    auto* verify_cmd = app.add_subcommand("verify", "re-verify a certificate report");
    std::string verify_input;
    verify_cmd->add_option("input", verify_input, "report file (- for stdin)")->required();

    auto* acceptance_cmd = app.add_subcommand("acceptance", "run the full verification battery");
    acceptance_cmd->add_option("--workers", workers, "worker threads");
    acceptance_cmd->add_option("--output,-o", output, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        Mode mode = mode_from_name(mode_str);
        SolveOptions solve = make_solve_options(time_limit, node_limit);

        if (avoid->parsed()) {
            Graph host = load_host(host_spec);
            PatternFamily fam = PatternFamily::parse(pattern_specs);
            AvoidanceVerdict v;
            try {
                v = exists_avoider(host, fam, d, mode, solve);
            } catch (const budget_error& e) {
                write_output(output, incomplete_report("avoidance", e.what()));
                std::cerr << "budget exceeded: " << e.what() << "\n";
                return 2;
            }
            std::string report = verdict_report(host, fam, d, mode, v);
            write_output(output, report);
            std::cout << "verdict: " << verdict_name(v.kind) << " (" << v.stats.nodes
                      << " search nodes)\n";
            if (!output)
                std::cout << report;
            return 0;
        }

        if (fast->parsed()) {
            Graph host = load_host(host_spec);
            AvoidanceVerdict v = fast_2k2_decide(host);
            PatternFamily fam = PatternFamily::parse({"2K2"});
            std::string report = verdict_report(host, fam, 1, Mode::Free, v);
            write_output(output, report);
            std::cout << "verdict: " << verdict_name(v.kind);
            if (!v.stats.detail.empty())
                std::cout << " (" << v.stats.detail << ")";
            std::cout << "\n";
            if (!output)
                std::cout << report;
            return 0;
        }

        if (census_cmd->parsed()) {
            CensusBounds bounds;
            bounds.max_order = max_order;
            bounds.max_edges = max_edges < 0 ? max_order * (max_order - 1) / 2 : max_edges;
            bounds.family = PatternFamily::parse(pattern_specs);
            bounds.d = d;
            bounds.mode = mode;
            CensusOptions opts;
            opts.workers = workers;
            opts.checkpoint_path = checkpoint;
            opts.decide.solve = solve;
            std::vector<CensusRecord> records;
            try {
                records = census_minimal(bounds, opts);
            } catch (const budget_error& e) {
                write_output(output, incomplete_report("census", e.what()));
                std::cerr << "budget exceeded: " << e.what() << "\n";
                return 2;
            }
            write_output(output, census_report(bounds, records));
            if (output) {
                std::ofstream g6(*output + ".g6");
                g6 << census_graph6_lines(records);
            }
            std::cout << records.size() << " minimal unavoidable graphs\n";
            for (const CensusRecord& r : records)
                std::cout << "  " << r.form.bytes << "  (order " << r.order << ", " << r.edge_count
                          << " edges)\n";
            return 0;
        }

        for (auto& [fn, cmd] : extremal_cmds) {
            if (!cmd->parsed())
                continue;
            PatternFamily fam = PatternFamily::parse(pattern_specs);
            ExtremalOptions opts;
            opts.workers = workers;
            opts.solve = solve;
            ExtremalResult r;
            try {
                if (fn == "ex")
                    r = compute_ex(n, fam, opts);
                else if (fn == "h")
                    r = compute_h(n, fam, opts);
                else if (fn == "s")
                    r = compute_s(n, fam, opts);
                else if (fn == "q")
                    r = compute_q(n, fam, opts);
                else
                    r = compute_p(n, fam, opts);
            } catch (const budget_error& e) {
                write_output(output, incomplete_report("extremal", e.what()));
                std::cerr << "budget exceeded: " << e.what() << "\n";
                return 2;
            }
            write_output(output, extremal_report(r));
            std::cout << fn << "(" << n << ", " << fam.to_string() << ") = " << r.value << "\n";
            if (r.witness)
                std::cout << "witness: " << to_graph6(*r.witness) << "\n";
            return 0;
        }

        if (construct->parsed()) {
            Construction c = build_construction(construction_spec);
            bool ok = true;
            if (do_verify)
                ok = verify_construction(c);
            write_output(output, construction_report(c, ok));
            std::cout << c.name << ": " << c.host.order() << " vertices, " << c.host.size()
                      << " edges, family " << c.family.to_string()
                      << (c.mapping ? ", avoider mapping" : ", counting proof");
            if (do_verify)
                std::cout << (ok ? ", verified" : ", VERIFICATION FAILED");
            std::cout << "\n";
            if (!output)
                std::cout << construction_report(c, ok);
            return ok ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            std::string text;
            if (verify_input == "-") {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else {
                std::ifstream in(verify_input);
                if (!in)
                    throw std::invalid_argument("cannot open report: " + verify_input);
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            std::string why;
            bool ok = verify_report(text, &why);
            std::cout << (ok ? "verified" : "FAILED: " + why) << "\n";
            return ok ? 0 : 1;
        }

        if (acceptance_cmd->parsed()) {
            AcceptanceOptions opts;
            opts.workers = workers;
            auto results = run_acceptance(opts, &std::cout);
            if (output) {
                std::ostringstream js;
                js << "{\n  \"kind\": \"acceptance\",\n  \"criteria\": [\n";
                for (size_t i = 0; i < results.size(); ++i) {
                    js << "    {\"id\": " << results[i].id << ", \"pass\": "
                       << (results[i].pass ? "true" : "false") << "}";
                    js << (i + 1 < results.size() ? ",\n" : "\n");
                }
                js << "  ],\n  \"pass\": " << (all_passed(results) ? "true" : "false") << "\n}\n";
                write_output(output, js.str());
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
