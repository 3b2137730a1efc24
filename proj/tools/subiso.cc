#include <subiso/errors.hh>
#include <subiso/harness.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace subiso;

using std::cerr;
using std::cout;
using std::string;

namespace
{
    constexpr int exit_yes = 0, exit_no = 1, exit_error = 2;

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_output(const string & path, const string & text) -> void
    {
        if (path == "-") {
            cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << text;
    }

    auto load_graph(const string & path) -> Digraph
    {
        try {
            return parse_digraph(read_file(path));
        }
        catch (const ParseError & e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }

    auto solve_options() -> SolveOptions
    {
        return SolveOptions{pivot_limit_from_environment()};
    }

    auto exit_for(Answer a) -> int
    {
        return a == Answer::Yes ? exit_yes : exit_no;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Linear relaxation of subgraph isomorphism with exact certificates"};
    app.require_subcommand(1);

    string input_path, pattern_path, lp_path, certificate_path, cnf_path, tsp_path;
    bool deplete = false;

    auto check = app.add_subcommand("check", "decide an instance by LP feasibility of the aggregated system");
    check->add_option("input", input_path, "input digraph file")->required();
    check->add_option("pattern", pattern_path, "pattern digraph file")->required();
    check->add_flag("--propagate", deplete, "deplete the compatibility matrix before building constraints");
    check->add_option("--emit-certificate", certificate_path, "write the certificate as JSON ('-' for stdout)")
        ->expected(0, 1)->default_str("-");
    check->add_option("--emit-lp", lp_path, "write the aggregated system in LP format");

    auto oracle = app.add_subcommand("oracle", "decide an instance by permutation enumeration");
    oracle->add_option("input", input_path, "input digraph file")->required();
    oracle->add_option("pattern", pattern_path, "pattern digraph file")->required();

    auto examples = app.add_subcommand("examples", "rerun the worked instances through both deciders");

    CompareParams params;
    string arc_probability = "1/2", pattern_density = "1/2", json_path, out_dir;
    auto compare = app.add_subcommand("compare", "LP against oracle on seeded random instances");
    compare->add_option("--n", params.n, "vertex count")->default_val(3);
    compare->add_option("--trials", params.trials, "number of random pairs")->default_val(100);
    compare->add_option("--seed", params.seed, "base seed; trial t uses seed + t")->default_val(1);
    compare->add_option("--arc-probability", arc_probability, "input arc probability (rational)")->default_val("1/2");
    compare->add_option("--pattern-density", pattern_density, "pattern arc probability (rational)")->default_val("1/2");
    compare->add_flag("--exhaustive", params.exhaustive, "all pairs of 0/1 digraphs (n <= 2)");
    compare->add_flag("--propagate", params.deplete, "deplete compatibility matrices first");
    compare->add_option("--json", json_path, "write the structured report here ('-' for stdout)");
    compare->add_option("--out-dir", out_dir, "write each disagreeing instance pair into this directory");

    auto tsp = app.add_subcommand("tsp", "tour program over a weighted digraph");
    tsp->add_option("graph", tsp_path, "weighted digraph file")->required();

    auto sat = app.add_subcommand("sat", "CNF satisfiability through the subgraph reduction");
    sat->add_option("cnf", cnf_path, "DIMACS CNF file")->required();

    string emit_out = "-";
    auto emit = app.add_subcommand("emit-lp", "print the aggregated system of an instance");
    emit->add_option("input", input_path, "input digraph file")->required();
    emit->add_option("pattern", pattern_path, "pattern digraph file")->required();
    emit->add_flag("--propagate", deplete, "deplete the compatibility matrix first");
    emit->add_option("-o,--output", emit_out, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (check->parsed()) {
            auto input = load_graph(input_path), pattern = load_graph(pattern_path);
            if (pattern.size() > input.size()) {
                cout << "NO (pattern has more vertices than the input)\n";
                return exit_no;
            }
            auto decision = decide_by_lp(input, pattern, deplete, solve_options());
            if (! lp_path.empty())
                write_output(lp_path, emit_lp(decision.system));
            if (check->count("--emit-certificate"))
                write_output(certificate_path, certificate_to_json(decision.system, decision.certificate));
            cout << to_string(decision.answer()) << (decision.certificate.feasible() ? " (aggregated system feasible)" : " (aggregated system infeasible)")
                 << ", certificate " << (decision.verified ? "verified" : "FAILED verification") << "\n";
            if (! decision.verified)
                return exit_error;
            return exit_for(decision.answer());
        }

        if (oracle->parsed()) {
            auto input = load_graph(input_path), pattern = load_graph(pattern_path);
            auto verdict = subgi_brute_force(input, pattern);
            cout << to_string(verdict.answer);
            if (verdict.grid)
                cout << " " << to_string(*verdict.grid);
            cout << "\n";
            return exit_for(verdict.answer);
        }

        if (examples->parsed()) {
            auto report = run_worked_examples(solve_options());
            cout << examples_table(report);
            return report.all_passed ? 0 : 1;
        }

        if (compare->parsed()) {
            params.arc_probability = parse_rational(arc_probability);
            params.pattern_density = parse_rational(pattern_density);
            auto report = run_compare(params, solve_options());
            cout << report_table(report);
            if (! json_path.empty())
                write_output(json_path, report_to_json(report));
            if (! out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                for (auto & d : report.disagreements) {
                    auto stem = std::filesystem::path(out_dir) / ("trial_" + std::to_string(d.trial));
                    write_output(stem.string() + "_input.txt", serialize_digraph(d.input));
                    write_output(stem.string() + "_pattern.txt", serialize_digraph(d.pattern));
                }
            }
            return report.sound() ? 0 : 1;
        }

        if (tsp->parsed()) {
            WeightedDigraph g = [&] {
                try {
                    return parse_weighted_digraph(read_file(tsp_path));
                }
                catch (const ParseError & e) {
                    throw std::runtime_error(tsp_path + ": " + e.what());
                }
            }();
            auto report = run_tsp(g, solve_options());
            cout << tsp_report_text(report);
            if (! report.verified)
                return exit_error;
            return report.result.status == OptResult::Status::Infeasible ? exit_no : exit_yes;
        }

        if (sat->parsed()) {
            CNF f = [&] {
                try {
                    return parse_cnf(read_file(cnf_path));
                }
                catch (const ParseError & e) {
                    throw std::runtime_error(cnf_path + ": " + e.what());
                }
            }();
            auto report = run_sat(f, solve_options());
            cout << "lp: " << (report.certificate.feasible() ? "feasible" : "infeasible") << " (certificate "
                 << (report.verified ? "verified" : "FAILED") << ")\n";
            cout << "oracle: " << to_string(report.oracle.answer) << "\n";
            cout << "agreement: " << (report.lp_answer() == report.oracle.answer ? "yes" : "no") << "\n";
            if (! report.verified)
                return exit_error;
            return exit_for(report.lp_answer());
        }

        if (emit->parsed()) {
            auto input = load_graph(input_path), pattern = load_graph(pattern_path);
            auto compat = build_compat(input, pad_pattern(pattern, input.size()));
            if (deplete)
                compat = propagate(compat);
            write_output(emit_out, emit_lp(aggregate(build_base_system(input.size()), zero_constraints(compat))));
            return 0;
        }
    }
    catch (const std::exception & e) {
        cerr << "subiso: " << e.what() << "\n";
        return exit_error;
    }

    return exit_error;
}
