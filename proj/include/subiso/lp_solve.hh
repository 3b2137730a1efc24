#ifndef SUBISO_LP_SOLVE_HH
#define SUBISO_LP_SOLVE_HH 1

#include <subiso/lp_model.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace subiso
{
    /// Infeasibility proof: one multiplier per row of the system. With
    /// g = sum_r u_r * row_r, the proof holds when g has a nonnegative
    /// coefficient on every variable that is not fixed at zero and
    /// sum_r u_r * rhs_r < 0; then 0 <= g.x = u.rhs < 0 for any candidate x.
    /// The implied multiplier of each bound is the corresponding coefficient
    /// of g (nonnegative on x >= 0 bounds, free on x = 0 bounds).
    struct FarkasWitness
    {
        std::vector<Rational> row_multipliers;

        auto operator== (const FarkasWitness &) const -> bool = default;
    };

    class Certificate
    {
        private:
            std::variant<Assignment, FarkasWitness> _content;

        public:
            explicit Certificate(Assignment point) :
                _content(std::move(point))
            {
            }

            explicit Certificate(FarkasWitness witness) :
                _content(std::move(witness))
            {
            }

            auto feasible() const noexcept -> bool
            {
                return std::holds_alternative<Assignment>(_content);
            }

            auto point() const -> const Assignment &
            {
                return std::get<Assignment>(_content);
            }

            auto witness() const -> const FarkasWitness &
            {
                return std::get<FarkasWitness>(_content);
            }

            auto operator== (const Certificate &) const -> bool = default;
    };

    struct SolveOptions
    {
        std::uint64_t pivot_limit = 1'000'000;
    };

    /// SUBISO_PIVOT_LIMIT if set to a positive integer, otherwise fallback.
    auto pivot_limit_from_environment(std::uint64_t fallback = SolveOptions{}.pivot_limit) -> std::uint64_t;

    struct OptResult
    {
        enum class Status { Optimal, Infeasible, Unbounded };

        Status status;
        /// Optimal: the optimum. Unbounded: objective at `point`.
        Rational value;
        /// Optimal: an optimal vertex. Unbounded: some feasible point.
        std::optional<Assignment> point;
        /// Optimal: row duals y with y.rhs == value and objective - y.A >= 0
        /// on every variable not fixed at zero.
        std::vector<Rational> duals;
        std::optional<FarkasWitness> farkas;
        /// Unbounded: direction d >= 0 with A d = 0, fixed parts 0, objective.d < 0.
        std::optional<Assignment> ray;
    };

    /// Exact two-phase simplex. Phase one enters the sparsest improving
    /// column and breaks ratio ties lexicographically, which cannot cycle;
    /// phase two switches to Bland's rule after every degenerate pivot until
    /// the objective moves again. Arithmetic is on integer rows with a
    /// denominator each, in checked 64-bit words, and the solve is repeated
    /// with GMP integers if a word would overflow. Zero-fixed columns are
    /// removed up front, as are columns forced to zero by rows of one sign
    /// with right-hand side 0; rows left empty with a nonzero right-hand side
    /// (or of one sign against their right-hand side) end the solve with a
    /// direct witness. Throws LimitExceeded past the pivot limit.
    auto feasibility(const LinearSystem & sys, const SolveOptions & options = {}) -> Certificate;

    /// Minimizes the objective over the system. Same machinery as
    /// feasibility, followed by the second phase.
    auto optimize(const LinearSystem & sys, const Objective & objective, const SolveOptions & options = {}) -> OptResult;

    /// Pure rational re-check of a certificate; shares no code with the solver.
    auto verify_certificate(const LinearSystem & sys, const Certificate & cert) -> bool;

    auto verify_farkas(const LinearSystem & sys, const FarkasWitness & witness) -> bool;

    /// Checks every claim of an OptResult (feasibility, value, dual bound,
    /// Farkas proof or ray), again without touching solver code.
    auto verify_opt_result(const LinearSystem & sys, const Objective & objective, const OptResult & result) -> bool;

    /// JSON text. Feasible: {"outcome":"feasible","point":{name:value,...}}
    /// listing nonzero values. Infeasible: {"outcome":"infeasible",
    /// "row_multipliers":{"<row number>":value,...}, "combined_rhs":value,
    /// "combined_row":{name:coef,...}} listing nonzero entries; row numbers
    /// are 1-based positions in the system's row list.
    auto certificate_to_json(const LinearSystem & sys, const Certificate & cert) -> std::string;
}

#endif
