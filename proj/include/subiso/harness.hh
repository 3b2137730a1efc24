#ifndef SUBISO_HARNESS_HH
#define SUBISO_HARNESS_HH 1

#include <subiso/lp_solve.hh>
#include <subiso/oracle.hh>
#include <subiso/reductions.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subiso
{
    /// The LP route for one subgraph instance.
    struct LpDecision
    {
        LinearSystem system;
        Certificate certificate;
        bool verified;

        auto answer() const -> Answer
        {
            return certificate.feasible() ? Answer::Yes : Answer::No;
        }
    };

    /// Pads the pattern, builds the aggregated system (after depletion when
    /// `deplete` is set) and solves it. A pattern with more vertices than the
    /// input is rejected with InvalidInstance.
    auto decide_by_lp(const Digraph & input, const Digraph & pattern, bool deplete = false, const SolveOptions & options = {})
        -> LpDecision;

    struct WorkedExample
    {
        std::string name;
        Digraph input;
        Digraph pattern;
        Answer expected;
        /// The instance whose LP verdict the hand analysis claims but which is
        /// audited rather than required (the 4-cycle against the 3-cycle).
        bool audited;
    };

    /// Worked instances in presentation order: vertex vs vertex (as a YES and a
    /// NO instance), arc vs arc, arc vs loop, arc/loop vs loop/arc, edge vs arc,
    /// cycle vs edge, cycle vs path, then cycle vs cycle.
    auto worked_examples() -> std::vector<WorkedExample>;

    struct ExampleRow
    {
        std::string name;
        Answer expected;
        Answer lp;
        Answer oracle;
        bool audited;
        bool certificate_ok;
        /// Set when an audited row came out LP-feasible against a NO oracle.
        std::optional<Assignment> counterexample;

        /// Required rows: LP and oracle both match; audited rows: oracle
        /// matches. Always requires a verified certificate.
        auto passed() const -> bool;
    };

    struct ExamplesReport
    {
        std::vector<ExampleRow> rows;
        bool all_passed;
    };

    auto run_worked_examples(const SolveOptions & options = {}) -> ExamplesReport;
    auto examples_table(const ExamplesReport & report) -> std::string;

    struct CompareParams
    {
        int n = 3;
        int trials = 100;
        std::uint64_t seed = 1;
        Rational arc_probability{1, 2};
        Rational pattern_density{1, 2};
        /// Every pair of 0/1 digraphs on n vertices instead of random trials
        /// (n <= 2 only).
        bool exhaustive = false;
        bool deplete = false;
    };

    struct Disagreement
    {
        int trial;
        Digraph input;
        Digraph pattern;
        /// "lp_feasible_oracle_no" or "lp_infeasible_oracle_yes"
        std::string kind;
        std::optional<Assignment> lp_point;
        std::optional<SolutionGrid> oracle_grid;
    };

    struct AgreementReport
    {
        CompareParams params;
        int trials = 0;
        int lp_feasible_and_oracle_yes = 0;
        int lp_infeasible_and_oracle_no = 0;
        int lp_feasible_and_oracle_no = 0;
        int lp_infeasible_and_oracle_yes = 0;
        /// Oracle witnesses whose grid point failed the aggregated system.
        int grid_point_failures = 0;
        int certificate_failures = 0;
        std::vector<Disagreement> disagreements;

        auto sound() const -> bool
        {
            return lp_infeasible_and_oracle_yes == 0 && grid_point_failures == 0 && certificate_failures == 0;
        }
    };

    /// Trial t uses seed + t: the input is random_digraph(n, arc_probability,
    /// 1, seed + t) and the pattern random_digraph(n, pattern_density, 1,
    /// (seed + t) ^ 0x9e3779b97f4a7c15). Exhaustive mode enumerates input
    /// masks in the outer loop and pattern masks in the inner loop, bit
    /// (u-1) n + (v-1) of a mask holding arc u -> v.
    auto run_compare(const CompareParams & params, const SolveOptions & options = {}, const OracleLimits & limits = {})
        -> AgreementReport;

    /// Serialized instance pairs use the digraph text format so a trial can
    /// be replayed with `subiso check`.
    auto report_to_json(const AgreementReport & report) -> std::string;
    auto report_table(const AgreementReport & report) -> std::string;

    struct TspReport
    {
        OptResult result;
        bool verified;
        std::optional<SolutionGrid> integral_grid;
        std::optional<Rational> brute_force;
        bool brute_force_ran;
    };

    auto run_tsp(const WeightedDigraph & g, const SolveOptions & options = {}, const OracleLimits & limits = {}) -> TspReport;
    auto tsp_report_text(const TspReport & report) -> std::string;

    struct SatReport
    {
        Certificate certificate;
        bool verified;
        Verdict oracle;

        auto lp_answer() const -> Answer
        {
            return certificate.feasible() ? Answer::Yes : Answer::No;
        }
    };

    auto run_sat(const CNF & f, const SolveOptions & options = {}, const OracleLimits & limits = {}) -> SatReport;
}

#endif
