#include <subiso/errors.hh>
#include <subiso/harness.hh>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>

using nlohmann::ordered_json;
using std::optional;
using std::string;
using std::vector;

namespace subiso
{
    auto decide_by_lp(const Digraph & input, const Digraph & pattern, bool deplete, const SolveOptions & options) -> LpDecision
    {
        auto padded = pad_pattern(pattern, input.size());
        auto compat = build_compat(input, padded);
        if (deplete)
            compat = propagate(compat);
        auto system = aggregate(build_base_system(input.size()), zero_constraints(compat));
        auto certificate = feasibility(system, options);
        bool verified = verify_certificate(system, certificate);
        return LpDecision{std::move(system), std::move(certificate), verified};
    }

    namespace
    {
        auto graph(int n, std::initializer_list<std::array<unsigned, 3>> arcs) -> Digraph
        {
            Digraph d(n);
            for (auto & [u, v, m] : arcs)
                d.add_arcs(static_cast<int>(u), static_cast<int>(v), m);
            return d;
        }

        auto cycle(int n) -> Digraph
        {
            Digraph d(n);
            for (int v = 1 ; v <= n ; ++v)
                d.set_arcs(v, v % n + 1, 1);
            return d;
        }

        auto point_json(const Assignment & point) -> ordered_json
        {
            ordered_json out = ordered_json::object();
            for (int k = 0 ; k < point.layout().size() ; ++k)
                if (point[k] != 0)
                    out[to_string(point.layout().var(k))] = to_string(point[k]);
            return out;
        }
    }

    auto worked_examples() -> vector<WorkedExample>
    {
        return {
            {"vertex vs vertex (s11=1, g11=1)", graph(1, {{1, 1, 1}}), graph(1, {{1, 1, 1}}), Answer::Yes, false},
            {"vertex vs vertex (s11=2, g11=1)", graph(1, {{1, 1, 1}}), graph(1, {{1, 1, 2}}), Answer::No, false},
            {"arc vs arc", graph(2, {{1, 2, 1}}), graph(2, {{2, 1, 1}}), Answer::Yes, false},
            {"arc vs loop", graph(2, {{1, 2, 1}}), graph(1, {{1, 1, 1}}), Answer::No, false},
            {"arc/loop vs loop/arc", graph(2, {{1, 2, 1}, {2, 2, 1}}), graph(2, {{1, 1, 1}, {1, 2, 1}}), Answer::No, false},
            {"edge vs arc", graph(2, {{1, 2, 1}, {2, 1, 1}}), graph(2, {{1, 2, 1}}), Answer::Yes, false},
            {"cycle vs edge", cycle(3), graph(2, {{1, 2, 1}, {2, 1, 1}}), Answer::No, false},
            {"cycle vs path", cycle(3), graph(3, {{1, 2, 1}, {2, 3, 1}}), Answer::Yes, false},
            {"cycle vs cycle", cycle(4), cycle(3), Answer::No, true}
        };
    }

    auto ExampleRow::passed() const -> bool
    {
        if (! certificate_ok || oracle != expected)
            return false;
        return audited || lp == expected;
    }

    auto run_worked_examples(const SolveOptions & options) -> ExamplesReport
    {
        ExamplesReport report{{}, true};
        for (auto & ex : worked_examples()) {
            auto lp = decide_by_lp(ex.input, ex.pattern, false, options);
            auto oracle = subgi_brute_force(ex.input, ex.pattern);
            bool oracle_ok = ! oracle.grid || check_embedding(ex.input, pad_pattern(ex.pattern, ex.input.size()), *oracle.grid);

            ExampleRow row{ex.name, ex.expected, lp.answer(), oracle.answer, ex.audited, lp.verified && oracle_ok, std::nullopt};
            if (ex.audited && lp.answer() == Answer::Yes && oracle.answer == Answer::No)
                row.counterexample = lp.certificate.point();
            report.all_passed = report.all_passed && row.passed();
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    auto examples_table(const ExamplesReport & report) -> string
    {
        std::ostringstream out;
        char line[256];
        std::snprintf(line, sizeof(line), "%-34s %-7s %-15s %-7s %-6s\n", "instance", "expected", "lp", "oracle", "cert");
        out << line;
        for (auto & row : report.rows) {
            string lp = to_string(row.lp);
            if (row.counterexample)
                lp = "COUNTEREXAMPLE";
            std::snprintf(line, sizeof(line), "%-34s %-7s %-15s %-7s %-6s%s\n", row.name.c_str(), to_string(row.expected), lp.c_str(),
                    to_string(row.oracle), row.certificate_ok ? "ok" : "FAIL", row.passed() ? "" : "  <-- mismatch");
            out << line;
        }
        for (auto & row : report.rows)
            if (row.counterexample)
                out << "\n" << row.name << ": the aggregated system is feasible although no embedding exists.\n"
                    << "verified feasible point (nonzero entries):\n" << point_json(*row.counterexample).dump(2) << "\n";
        return out.str();
    }

    namespace
    {
        auto digraph_from_mask(int n, unsigned long mask) -> Digraph
        {
            Digraph d(n);
            for (int u = 1 ; u <= n ; ++u)
                for (int v = 1 ; v <= n ; ++v)
                    if (mask & (1ul << ((u - 1) * n + (v - 1))))
                        d.set_arcs(u, v, 1);
            return d;
        }

        auto run_trial(AgreementReport & report, int trial, const Digraph & input, const Digraph & pattern, const CompareParams & params,
                const SolveOptions & options, const OracleLimits & limits) -> void
        {
            auto lp = decide_by_lp(input, pattern, params.deplete, options);
            auto oracle = subgi_brute_force(input, pattern, limits);
            ++report.trials;
            if (! lp.verified)
                ++report.certificate_failures;

            if (oracle.answer == Answer::Yes) {
                // the provable direction: the witness grid is itself a solution
                if (! check_embedding(input, pad_pattern(pattern, input.size()), *oracle.grid)
                        || ! satisfies(lp.system, grid_to_point(*oracle.grid)))
                    ++report.grid_point_failures;
            }

            bool lp_yes = lp.answer() == Answer::Yes, oracle_yes = oracle.answer == Answer::Yes;
            if (lp_yes && oracle_yes)
                ++report.lp_feasible_and_oracle_yes;
            else if (! lp_yes && ! oracle_yes)
                ++report.lp_infeasible_and_oracle_no;
            else if (lp_yes) {
                ++report.lp_feasible_and_oracle_no;
                report.disagreements.push_back(Disagreement{trial, input, pattern, "lp_feasible_oracle_no", lp.certificate.point(), std::nullopt});
            }
            else {
                ++report.lp_infeasible_and_oracle_yes;
                report.disagreements.push_back(Disagreement{trial, input, pattern, "lp_infeasible_oracle_yes", std::nullopt, oracle.grid});
            }
        }
    }

    auto run_compare(const CompareParams & params, const SolveOptions & options, const OracleLimits & limits) -> AgreementReport
    {
        if (params.n < 1 || params.n > limits.max_vertices)
            throw LimitExceeded("compare needs 1 <= n <= " + std::to_string(limits.max_vertices));
        AgreementReport report;
        report.params = params;

        if (params.exhaustive) {
            if (params.n > 2)
                throw LimitExceeded("exhaustive comparison is limited to n <= 2");
            unsigned long masks = 1ul << (params.n * params.n);
            int trial = 0;
            for (unsigned long a = 0 ; a < masks ; ++a)
                for (unsigned long b = 0 ; b < masks ; ++b)
                    run_trial(report, trial++, digraph_from_mask(params.n, a), digraph_from_mask(params.n, b), params, options, limits);
            return report;
        }

        for (int t = 0 ; t < params.trials ; ++t) {
            std::uint64_t s = params.seed + static_cast<std::uint64_t>(t);
            auto input = random_digraph(params.n, params.arc_probability, 1, s);
            auto pattern = random_digraph(params.n, params.pattern_density, 1, s ^ 0x9e3779b97f4a7c15ull);
            run_trial(report, t, input, pattern, params, options, limits);
        }
        return report;
    }

    auto report_to_json(const AgreementReport & report) -> string
    {
        ordered_json out;
        auto & p = report.params;
        out["params"] = {
            {"n", p.n}, {"trials", p.trials}, {"seed", p.seed}, {"arc_probability", to_string(p.arc_probability)},
            {"pattern_density", to_string(p.pattern_density)}, {"exhaustive", p.exhaustive}, {"deplete", p.deplete}
        };
        out["trials"] = report.trials;
        out["lp_feasible_and_oracle_yes"] = report.lp_feasible_and_oracle_yes;
        out["lp_infeasible_and_oracle_no"] = report.lp_infeasible_and_oracle_no;
        out["lp_feasible_and_oracle_no"] = report.lp_feasible_and_oracle_no;
        out["lp_infeasible_and_oracle_yes"] = report.lp_infeasible_and_oracle_yes;
        out["grid_point_failures"] = report.grid_point_failures;
        out["certificate_failures"] = report.certificate_failures;
        ordered_json list = ordered_json::array();
        for (auto & d : report.disagreements) {
            ordered_json item;
            item["trial"] = d.trial;
            item["kind"] = d.kind;
            item["input"] = serialize_digraph(d.input);
            item["pattern"] = serialize_digraph(d.pattern);
            if (d.lp_point)
                item["lp_point"] = point_json(*d.lp_point);
            if (d.oracle_grid)
                item["oracle_grid"] = d.oracle_grid->images();
            list.push_back(std::move(item));
        }
        out["disagreements"] = std::move(list);
        return out.dump(2) + "\n";
    }

    auto report_table(const AgreementReport & report) -> string
    {
        std::ostringstream out;
        auto & p = report.params;
        out << "n=" << p.n << (p.exhaustive ? " exhaustive" : "") << " trials=" << report.trials << " seed=" << p.seed
            << " p=" << p.arc_probability << " d=" << p.pattern_density << (p.deplete ? " depleted" : "") << "\n";
        out << "                 oracle YES   oracle NO\n";
        char line[128];
        std::snprintf(line, sizeof(line), "LP feasible      %10d  %10d\n", report.lp_feasible_and_oracle_yes, report.lp_feasible_and_oracle_no);
        out << line;
        std::snprintf(line, sizeof(line), "LP infeasible    %10d  %10d\n", report.lp_infeasible_and_oracle_yes, report.lp_infeasible_and_oracle_no);
        out << line;
        out << "grid point failures: " << report.grid_point_failures << ", certificate failures: " << report.certificate_failures << "\n";
        if (report.lp_feasible_and_oracle_no > 0)
            out << report.lp_feasible_and_oracle_no << " instance(s) are LP-feasible with no embedding (converse counterexamples)\n";
        if (! report.sound())
            out << "SOUNDNESS VIOLATION\n";
        return out.str();
    }

    auto run_tsp(const WeightedDigraph & g, const SolveOptions & options, const OracleLimits & limits) -> TspReport
    {
        auto model = tsp_model(g);
        auto result = optimize(model.system, model.objective, options);
        bool verified = verify_opt_result(model.system, model.objective, result);
        optional<SolutionGrid> grid;
        if (result.status == OptResult::Status::Optimal)
            grid = point_to_grid(*result.point);
        TspReport report{std::move(result), verified, std::move(grid), std::nullopt, false};
        if (g.size() <= limits.max_vertices) {
            report.brute_force = tsp_brute_force(g, limits);
            report.brute_force_ran = true;
        }
        return report;
    }

    auto tsp_report_text(const TspReport & report) -> string
    {
        std::ostringstream out;
        switch (report.result.status) {
            case OptResult::Status::Optimal:
                out << "lp: optimal value " << report.result.value << "\n";
                if (report.integral_grid)
                    out << "optimum is a solution grid: " << to_string(*report.integral_grid) << "\n";
                else
                    out << "optimum is fractional\n";
                break;
            case OptResult::Status::Infeasible:
                out << "lp: infeasible\n";
                break;
            case OptResult::Status::Unbounded:
                out << "lp: unbounded\n";
                break;
        }
        out << "certificate: " << (report.verified ? "verified" : "FAILED") << "\n";
        if (report.brute_force_ran) {
            if (report.brute_force)
                out << "brute force tour: " << *report.brute_force << "\n";
            else
                out << "brute force tour: none (no Hamiltonian cycle)\n";
        }
        return out.str();
    }

    auto run_sat(const CNF & f, const SolveOptions & options, const OracleLimits & limits) -> SatReport
    {
        auto oracle = sat_brute_force(f, limits);
        auto system = sat_system(sat_to_subgi(f));
        auto certificate = feasibility(system, options);
        bool verified = verify_certificate(system, certificate);
        return SatReport{std::move(certificate), verified, std::move(oracle)};
    }
}
