#ifndef SUBISO_LP_MODEL_HH
#define SUBISO_LP_MODEL_HH 1

#include <subiso/compat.hh>
#include <subiso/rational.hh>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace subiso
{
    /// A model variable: either x(i,j,mu,nu) with i != j, mu != nu, or the
    /// diagonal y(j,nu). x is stored in canonical orientation i < j, so that
    /// x(i,j,mu,nu) and x(j,i,nu,mu) are the same variable.
    struct VarIndex
    {
        enum class Kind { Y, X };

        Kind kind;
        int i, j, mu, nu;

        /// Canonicalizing constructor; throws InvalidInstance if i == j or mu == nu.
        static auto x(int i, int j, int mu, int nu) -> VarIndex;
        static auto y(int j, int nu) -> VarIndex;

        auto operator<=> (const VarIndex &) const = default;
    };

    /// "x_i_j_u_v" (canonical orientation) or "y_j_v".
    auto to_string(const VarIndex & v) -> std::string;

    /// Dense numbering of the variables of a dimension-n system. All y
    /// variables come first ordered by (j, nu), then the canonical x variables
    /// ordered lexicographically by (i, j, mu, nu).
    class VariableLayout
    {
        private:
            int _n;

        public:
            explicit VariableLayout(int n);

            auto n() const noexcept -> int
            {
                return _n;
            }

            /// n^2 + n^2 (n-1)^2 / 2
            auto size() const noexcept -> int;

            auto id(const VarIndex & v) const -> int;
            auto var(int id) const -> VarIndex;
            auto contains(const VarIndex & v) const -> bool;
    };

    struct Term
    {
        int var;
        Rational coef;

        auto operator== (const Term &) const -> bool = default;
    };

    /// Sum of terms = rhs. Terms are kept sorted by variable id with no
    /// duplicates and no zero coefficients.
    struct Equality
    {
        std::vector<Term> terms;
        Rational rhs;

        auto operator== (const Equality &) const -> bool = default;
    };

    /// Sparse linear objective over variable ids.
    using Objective = std::vector<Term>;

    /// Equality rows over the variables of a VariableLayout, with implicit
    /// nonnegativity on every variable and a set of variables fixed at zero.
    class LinearSystem
    {
        private:
            VariableLayout _layout;
            std::vector<Equality> _rows;
            std::vector<bool> _fixed;

        public:
            explicit LinearSystem(int n);

            auto layout() const noexcept -> const VariableLayout &
            {
                return _layout;
            }

            auto n() const noexcept -> int
            {
                return _layout.n();
            }

            auto num_vars() const noexcept -> int
            {
                return _layout.size();
            }

            auto rows() const noexcept -> const std::vector<Equality> &
            {
                return _rows;
            }

            /// Appends a row after canonicalizing every fraction, merging
            /// repeated variables and dropping zero coefficients. Throws InvalidInstance on an unknown variable id.
            auto add_row(std::vector<Term> terms, Rational rhs) -> void;

            auto fix_zero(const VarIndex & v) -> void;
            auto is_fixed(int id) const -> bool
            {
                return _fixed.at(id);
            }

            /// Zero-fixed variables in id order.
            auto zero_fixed() const -> std::vector<VarIndex>;

            /// Rows with exact duplicates removed, first occurrence kept.
            auto distinct_rows() const -> std::vector<Equality>;

            auto operator== (const LinearSystem &) const -> bool;
    };

    /// Total value vector over a layout.
    class Assignment
    {
        private:
            VariableLayout _layout;
            std::vector<Rational> _values;

        public:
            explicit Assignment(int n);

            auto layout() const noexcept -> const VariableLayout &
            {
                return _layout;
            }

            auto operator[] (int id) const -> const Rational &
            {
                return _values.at(id);
            }

            auto operator[] (int id) -> Rational &
            {
                return _values.at(id);
            }

            auto value(const VarIndex & v) const -> const Rational &
            {
                return _values.at(_layout.id(v));
            }

            auto set(const VarIndex & v, Rational q) -> void
            {
                _values.at(_layout.id(v)) = std::move(q);
            }

            auto values() const noexcept -> const std::vector<Rational> &
            {
                return _values;
            }

            auto operator== (const Assignment &) const -> bool;
    };

    /// Exact check: every row holds, fixed variables are 0, all values >= 0.
    auto satisfies(const LinearSystem & sys, const Assignment & point) -> bool;

    /// Inner product of an objective with a point.
    auto evaluate(const Objective & objective, const Assignment & point) -> Rational;

    /// The relabeling polytope of dimension n. Rows are, in order:
    ///   for i, for j != i, for nu:   sum_{mu != nu} x(i,j,mu,nu) - y(j,nu) = 0
    ///   for j, for mu, for nu != mu: sum_{i != j}   x(i,j,mu,nu) - y(j,nu) = 0
    ///   for j:                       sum_nu y(j,nu) = 1
    /// which is 2 n^2 (n-1) + n rows. For n = 2 the first two families coincide
    /// row for row; they are kept so the count formula holds for every n.
    auto build_base_system(int n) -> LinearSystem;

    /// Variables that must vanish because their compatibility entry is 0.
    /// Structural zeros have no variable and are never reported. Sorted by id.
    auto zero_constraints(const CompatMatrix & c) -> std::vector<VarIndex>;

    /// Base rows plus zero-fixing of both sets. Throws InvalidInstance if an
    /// index does not belong to the base layout.
    auto aggregate(const LinearSystem & base, const std::vector<VarIndex> & zeros, const std::vector<VarIndex> & extra_zeros = {})
        -> LinearSystem;

    /// x = 1 / (n (n-1)), y = 1 / n; for n = 1 just y(1,1) = 1.
    auto center_point(int n) -> Assignment;

    /// The 0/1 point of a grid: y(j, grid(j)) = 1, x(i, j, grid(i), grid(j)) = 1.
    auto grid_to_point(const SolutionGrid & grid) -> Assignment;

    /// Reads an integral point back as a grid when it is one.
    auto point_to_grid(const Assignment & point) -> std::optional<SolutionGrid>;

    /// CPLEX-style LP text. Sections: Minimize (objective, or "obj: 0 y_1_1"
    /// when absent), Subject To (distinct rows in system order, named c1, c2,
    /// ...), Bounds (every variable in id order, "= 0" when fixed and ">= 0"
    /// otherwise), End. Integers print as such; other rationals print as a
    /// terminating decimal when one exists and as "p/q" otherwise.
    auto emit_lp(const LinearSystem & sys, const std::optional<Objective> & objective = std::nullopt) -> std::string;
}

#endif
