#include <subiso/errors.hh>
#include <subiso/lp_solve.hh>

#include "checked_int.hh"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <string>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace subiso
{
    auto pivot_limit_from_environment(uint64_t fallback) -> uint64_t
    {
        const char * text = std::getenv("SUBISO_PIVOT_LIMIT");
        if (! text || ! *text)
            return fallback;
        try {
            std::size_t used = 0;
            auto value = std::stoull(text, &used);
            if (used == std::string_view(text).size() && value > 0)
                return value;
        }
        catch (const std::exception &) {
        }
        return fallback;
    }

    namespace
    {
        /// A column of the original system removed because a row of one sign
        /// with zero right-hand side forces it to zero.
        struct ForcingRecord
        {
            int row;
            int sign;
            vector<int> vars;
        };

        struct Presolve
        {
            vector<int> col_of_var;       // -1 when removed
            vector<int> var_of_col;
            vector<int> kept_rows;        // original row index per reduced row
            vector<ForcingRecord> forcing;
            optional<vector<Rational>> witness; // row multipliers, before fix-up
        };

        auto presolve(const LinearSystem & sys) -> Presolve
        {
            int nv = sys.num_vars();
            auto & rows = sys.rows();
            vector<bool> active(nv);
            for (int k = 0 ; k < nv ; ++k)
                active[k] = ! sys.is_fixed(k);
            vector<bool> row_alive(rows.size(), true);

            Presolve result;
            bool changed = true;
            while (changed && ! result.witness) {
                changed = false;
                for (std::size_t r = 0 ; r < rows.size() && ! result.witness ; ++r) {
                    if (! row_alive[r])
                        continue;
                    int positive = 0, negative = 0;
                    for (auto & t : rows[r].terms)
                        if (active[t.var])
                            (t.coef > 0 ? positive : negative)++;
                    int rhs_sign = sgn(rows[r].rhs);

                    if (positive == 0 && negative == 0) {
                        if (rhs_sign != 0) {
                            result.witness.emplace(rows.size(), Rational(0));
                            (*result.witness)[r] = -rhs_sign;
                        }
                        row_alive[r] = false;
                        changed = true;
                    }
                    else if (positive == 0 || negative == 0) {
                        int sign = positive > 0 ? 1 : -1;
                        if (rhs_sign == 0) {
                            ForcingRecord record{static_cast<int>(r), sign, {}};
                            for (auto & t : rows[r].terms)
                                if (active[t.var]) {
                                    active[t.var] = false;
                                    record.vars.push_back(t.var);
                                }
                            result.forcing.push_back(std::move(record));
                            row_alive[r] = false;
                            changed = true;
                        }
                        else if (rhs_sign != sign) {
                            result.witness.emplace(rows.size(), Rational(0));
                            (*result.witness)[r] = sign;
                        }
                    }
                }
            }

            result.col_of_var.assign(nv, -1);
            for (int k = 0 ; k < nv ; ++k)
                if (active[k]) {
                    result.col_of_var[k] = static_cast<int>(result.var_of_col.size());
                    result.var_of_col.push_back(k);
                }
            for (std::size_t r = 0 ; r < rows.size() ; ++r)
                if (row_alive[r])
                    result.kept_rows.push_back(static_cast<int>(r));
            return result;
        }

        /// Column access to the original rows, for the fix-up passes.
        auto column_entries(const LinearSystem & sys) -> vector<vector<std::pair<int, Rational>>>
        {
            vector<vector<std::pair<int, Rational>>> cols(sys.num_vars());
            for (std::size_t r = 0 ; r < sys.rows().size() ; ++r)
                for (auto & t : sys.rows()[r].terms)
                    cols[t.var].emplace_back(static_cast<int>(r), t.coef);
            return cols;
        }

        auto combined_coefficient(const vector<std::pair<int, Rational>> & col, const vector<Rational> & u) -> Rational
        {
            Rational g = 0;
            for (auto & [r, a] : col)
                g += u[r] * a;
            return g;
        }

        /// Adds multiples of forcing rows, latest first, until every column the
        /// presolve removed satisfies lower <= g_k (want_lower) or
        /// g_k <= upper_k (otherwise). Forcing rows have zero right-hand side so
        /// u.rhs is unchanged, and at the time a row was recorded it touched no
        /// column removed later, so earlier fixes are never undone.
        auto fix_up(const LinearSystem & sys, const Presolve & pre, vector<Rational> & u, bool want_nonnegative,
                const vector<Rational> & upper) -> void
        {
            auto cols = column_entries(sys);
            for (auto it = pre.forcing.rbegin() ; it != pre.forcing.rend() ; ++it) {
                auto & row = sys.rows()[it->row];
                optional<Rational> t;
                for (int var : it->vars) {
                    Rational g = combined_coefficient(cols[var], u);
                    Rational a;
                    for (auto & term : row.terms)
                        if (term.var == var)
                            a = term.coef * it->sign;
                    // need g + t * a >= 0 (or <= upper) with a > 0
                    Rational bound = want_nonnegative ? Rational(-g / a) : Rational((upper[var] - g) / a);
                    if (! t || (want_nonnegative ? bound > *t : bound < *t))
                        t = bound;
                }
                if (! t || (want_nonnegative ? *t <= 0 : *t >= 0))
                    continue;
                u[it->row] += *t * it->sign;
            }
        }

        auto ratio(const mpz_class & a, const mpz_class & b) -> Rational
        {
            Rational q(a, b);
            q.canonicalize();
            return q;
        }

        /// Simplex tableau over the reduced system, with one artificial column
        /// per row. Row i holds integers N_i and a positive denominator d_i and
        /// stands for N_i / d_i; the cost row shares one denominator. Pivots
        /// are therefore integer multiply-and-subtract, and a row is divided by
        /// its content only when its denominator exceeds one. The integer type
        /// is CheckedInt (throws on overflow) or mpz_class.
        template <typename Z>
        class Tableau
        {
            public:
                struct Entry
                {
                    int col;
                    Z val;
                };

                using SparseRow = vector<Entry>;

                int structural;
                vector<SparseRow> rows;
                vector<Z> rhs;
                vector<Z> den;
                vector<int> basis;
                vector<int> column_count;
                vector<Z> reduced;
                Z reduced_den = 1;
                Z value;                   // objective value times reduced_den
                uint64_t pivots = 0;
                uint64_t pivot_limit;

                Tableau(const LinearSystem & sys, const Presolve & pre, const vector<int> & signs, uint64_t limit) :
                    structural(static_cast<int>(pre.var_of_col.size())),
                    pivot_limit(limit)
                {
                    int m = static_cast<int>(pre.kept_rows.size());
                    rows.resize(m);
                    rhs.resize(m);
                    den.resize(m);
                    basis.resize(m);
                    for (int r = 0 ; r < m ; ++r) {
                        auto & source = sys.rows()[pre.kept_rows[r]];
                        mpz_class scale = source.rhs.get_den();
                        for (auto & t : source.terms)
                            if (pre.col_of_var[t.var] >= 0)
                                scale = lcm(scale, t.coef.get_den());
                        mpz_class s = scale * signs[r];
                        for (auto & t : source.terms)
                            if (int c = pre.col_of_var[t.var] ; c >= 0)
                                rows[r].push_back(Entry{c, Z(mpz_class(t.coef * s))});
                        std::sort(rows[r].begin(), rows[r].end(), [] (const Entry & a, const Entry & b) { return a.col < b.col; });
                        rows[r].push_back(Entry{structural + r, Z(scale)});
                        rhs[r] = Z(mpz_class(source.rhs * s));
                        den[r] = Z(scale);
                        basis[r] = structural + r;
                    }
                    column_count.assign(structural + m, 0);
                    for (auto & row : rows)
                        for (auto & e : row)
                            ++column_count[e.col];

                    // phase one costs 1 on artificials
                    vector<Rational> cost(structural + m, Rational(0));
                    Rational total = 0;
                    for (int r = 0 ; r < m ; ++r) {
                        for (auto & e : rows[r])
                            if (e.col < structural)
                                cost[e.col] -= ratio(to_mpz(e.val), to_mpz(den[r]));
                        total += ratio(to_mpz(rhs[r]), to_mpz(den[r]));
                    }
                    load_costs(cost, total);
                }

                auto m() const -> int
                {
                    return static_cast<int>(rows.size());
                }

                auto at(int r, int c) const -> const Z *
                {
                    auto & row = rows[r];
                    auto it = std::lower_bound(row.begin(), row.end(), c, [] (const Entry & e, int col) { return e.col < col; });
                    if (it != row.end() && it->col == c)
                        return &it->val;
                    return nullptr;
                }

                auto entry(int r, int c) const -> Rational
                {
                    auto a = at(r, c);
                    return a ? ratio(to_mpz(*a), to_mpz(den[r])) : Rational(0);
                }

                auto basic_value(int r) const -> Rational
                {
                    return ratio(to_mpz(rhs[r]), to_mpz(den[r]));
                }

                auto reduced_cost(int c) const -> Rational
                {
                    return ratio(to_mpz(reduced[c]), to_mpz(reduced_den));
                }

                auto objective() const -> Rational
                {
                    return ratio(to_mpz(value), to_mpz(reduced_den));
                }

                /// Replaces the cost row by the given reduced costs and value.
                auto load_costs(const vector<Rational> & cost, const Rational & objective_value) -> void
                {
                    mpz_class common = objective_value.get_den();
                    for (auto & q : cost)
                        if (q != 0)
                            common = lcm(common, q.get_den());
                    reduced.assign(cost.size(), Z(0));
                    for (std::size_t c = 0 ; c < cost.size() ; ++c)
                        if (cost[c] != 0)
                            reduced[c] = Z(mpz_class(cost[c] * common));
                    value = Z(mpz_class(objective_value * common));
                    reduced_den = Z(common);
                }

                auto reduce_row(int r) -> void
                {
                    Z g = den[r];
                    if (g == 1)
                        return;
                    if (rhs[r] != 0)
                        g = gcd(g, abs(rhs[r]));
                    for (auto & e : rows[r]) {
                        if (g == 1)
                            return;
                        g = gcd(g, abs(e.val));
                    }
                    if (g == 1)
                        return;
                    den[r] /= g;
                    rhs[r] /= g;
                    for (auto & e : rows[r])
                        e.val /= g;
                }

                auto reduce_costs() -> void
                {
                    Z g = reduced_den;
                    if (g == 1)
                        return;
                    if (value != 0)
                        g = gcd(g, abs(value));
                    for (auto & v : reduced) {
                        if (g == 1)
                            return;
                        if (v != 0)
                            g = gcd(g, abs(v));
                    }
                    if (g == 1)
                        return;
                    reduced_den /= g;
                    value /= g;
                    for (auto & v : reduced)
                        v /= g;
                }

                auto pivot(int r, int c) -> void
                {
                    if (++pivots > pivot_limit)
                        throw LimitExceeded("simplex pivot limit of " + std::to_string(pivot_limit) + " exceeded");

                    // row r becomes N_r / p, so its entry in column c is one
                    Z p = *at(r, c);
                    if (p < 0) {
                        for (auto & e : rows[r])
                            e.val = -e.val;
                        rhs[r] = -rhs[r];
                        p = -p;
                    }
                    den[r] = p;
                    reduce_row(r);
                    Z dr = den[r];

                    // row i becomes (dr N_i - f N_r) / (d_i dr)
                    auto & prow = rows[r];
                    SparseRow merged;
                    for (int i = 0 ; i < m() ; ++i) {
                        if (i == r)
                            continue;
                        auto f_ptr = at(i, c);
                        if (! f_ptr)
                            continue;
                        Z f = *f_ptr;
                        merged.clear();
                        merged.reserve(rows[i].size() + prow.size());
                        auto a = rows[i].begin(), a_end = rows[i].end();
                        auto b = prow.begin(), b_end = prow.end();
                        while (a != a_end || b != b_end) {
                            if (b == b_end || (a != a_end && a->col < b->col)) {
                                if (dr != 1)
                                    a->val = a->val * dr;
                                merged.push_back(std::move(*a));
                                ++a;
                            }
                            else if (a == a_end || b->col < a->col) {
                                merged.push_back(Entry{b->col, Z(-(f * b->val))});
                                ++column_count[b->col];
                                ++b;
                            }
                            else {
                                a->val = (dr == 1 ? a->val : Z(a->val * dr)) - f * b->val;
                                if (a->val != 0)
                                    merged.push_back(std::move(*a));
                                else
                                    --column_count[a->col];
                                ++a;
                                ++b;
                            }
                        }
                        rows[i].swap(merged);
                        rhs[i] = (dr == 1 ? rhs[i] : Z(rhs[i] * dr)) - f * rhs[r];
                        if (dr != 1)
                            den[i] = den[i] * dr;
                        reduce_row(i);
                    }

                    // cost row: reduced - (reduced_c / reduced_den) N_r / dr
                    Z d = reduced[c];
                    if (dr != 1) {
                        for (auto & v : reduced)
                            if (v != 0)
                                v = v * dr;
                        value = value * dr;
                        reduced_den = reduced_den * dr;
                    }
                    if (d != 0) {
                        for (auto & e : prow)
                            reduced[e.col] = reduced[e.col] - d * e.val;
                        value = value + d * rhs[r];
                    }
                    reduced[c] = 0;
                    reduce_costs();
                    basis[r] = c;
                }

                /// Lowest column with a negative reduced cost (Bland's rule).
                auto bland_entering() const -> int
                {
                    for (int c = 0 ; c < structural ; ++c)
                        if (reduced[c] < 0)
                            return c;
                    return -1;
                }

                /// Among columns with a negative reduced cost, the one with the
                /// fewest nonzeros, which keeps fill-in down; ties go to the
                /// most negative reduced cost, then the lowest column.
                auto sparsest_entering() const -> int
                {
                    int best = -1;
                    for (int c = 0 ; c < structural ; ++c)
                        if (reduced[c] < 0)
                            if (best == -1 || column_count[c] < column_count[best]
                                    || (column_count[c] == column_count[best] && reduced[c] < reduced[best]))
                                best = c;
                    return best;
                }

                /// Compares row r1 scaled by 1/a1 with row r2 scaled by 1/a2 on
                /// the artificial columns, which hold the basis inverse. The
                /// row denominators cancel in both scalings.
                auto lex_less(int r1, const Z & a1, int r2, const Z & a2) const -> bool
                {
                    auto first_artificial = [&] (const SparseRow & row) {
                        return std::lower_bound(row.begin(), row.end(), structural, [] (const Entry & e, int col) { return e.col < col; });
                    };
                    const Z zero(0);
                    auto p = first_artificial(rows[r1]), p_end = rows[r1].end();
                    auto q = first_artificial(rows[r2]), q_end = rows[r2].end();
                    while (p != p_end || q != q_end) {
                        int col = std::min(p != p_end ? p->col : INT_MAX, q != q_end ? q->col : INT_MAX);
                        bool has_p = p != p_end && p->col == col, has_q = q != q_end && q->col == col;
                        const Z & u = has_p ? p->val : zero;
                        const Z & v = has_q ? q->val : zero;
                        if (! fraction_equal(u, a1, v, a2))
                            return fraction_less(u, a1, v, a2);
                        if (has_p)
                            ++p;
                        if (has_q)
                            ++q;
                    }
                    return false;
                }

                /// Minimum ratio over positive entries; ties go to the
                /// lexicographically smallest scaled row (`lex`) or to the
                /// lowest basic column. -1 if the column has no positive entry.
                auto leaving(int c, bool lex) const -> int
                {
                    int best = -1;
                    const Z * best_a = nullptr;
                    for (int r = 0 ; r < m() ; ++r) {
                        auto a = at(r, c);
                        if (! a || *a <= 0)
                            continue;
                        bool better = best == -1;
                        if (! better) {
                            if (fraction_less(rhs[r], *a, rhs[best], *best_a))
                                better = true;
                            else if (fraction_equal(rhs[r], *a, rhs[best], *best_a))
                                better = lex ? lex_less(r, *a, best, *best_a) : basis[r] < basis[best];
                        }
                        if (better) {
                            best = r;
                            best_a = a;
                        }
                    }
                    return best;
                }

                /// Phase one: sparsest improving column with the lexicographic
                /// ratio test. Starting from the all-artificial basis every row
                /// of [rhs | basis inverse] is lexicographically positive and
                /// stays so whichever improving column enters, which rules out
                /// cycling.
                auto run_lexicographic() -> void
                {
                    while (true) {
                        int c = sparsest_entering();
                        if (c == -1)
                            return;
                        int r = leaving(c, true);
                        if (r == -1)
                            return;     // cannot happen in phase one: the objective is bounded below
                        pivot(r, c);
                    }
                }

                /// Phase two: sparsest improving column while the objective moves;
                /// after a degenerate pivot Bland's rule takes over until it
                /// moves again. A run of degenerate Bland pivots cannot cycle,
                /// and each non-degenerate pivot strictly improves, so the loop
                /// terminates. Returns the column found unbounded, or -1.
                auto run_guarded() -> int
                {
                    bool bland = false;
                    while (true) {
                        int c = bland ? bland_entering() : sparsest_entering();
                        if (c == -1)
                            return -1;
                        int r = leaving(c, false);
                        if (r == -1)
                            return c;
                        bland = rhs[r] == 0;
                        pivot(r, c);
                    }
                }

                auto primal(const LinearSystem & sys, const Presolve & pre) const -> Assignment
                {
                    Assignment point(sys.n());
                    for (int r = 0 ; r < m() ; ++r)
                        if (basis[r] < structural)
                            point[pre.var_of_col[basis[r]]] = basic_value(r);
                    return point;
                }

                /// Row duals for the current basis in the original row numbering,
                /// given the cost each artificial carries in the active phase.
                auto duals(const LinearSystem & sys, const Presolve & pre, const vector<int> & signs, int artificial_cost) const
                    -> vector<Rational>
                {
                    vector<Rational> u(sys.rows().size(), Rational(0));
                    for (int r = 0 ; r < m() ; ++r)
                        u[pre.kept_rows[r]] = (artificial_cost - reduced_cost(structural + r)) * signs[r];
                    return u;
                }
        };

        /// What the tableau found, before witnesses are mapped back through
        /// the presolve.
        struct RawOutcome
        {
            OptResult::Status status;
            Rational value;
            optional<Assignment> point;
            vector<Rational> multipliers;   // phase-one Farkas row or phase-two duals
            optional<Assignment> ray;
        };

        /// Phase one, then (given a cost vector) phase two, on a fresh tableau
        /// over integer type Z.
        template <typename Z>
        auto run_simplex(const LinearSystem & sys, const Presolve & pre, const vector<int> & signs, const vector<Rational> * cost,
                uint64_t pivot_limit) -> RawOutcome
        {
            Tableau<Z> t(sys, pre, signs, pivot_limit);
            t.run_lexicographic();
            if (t.value > 0) {
                // phase-one duals u give u.A <= 0 and u.b > 0; negate for the proof
                auto u = t.duals(sys, pre, signs, 1);
                for (auto & q : u)
                    q = -q;
                return RawOutcome{OptResult::Status::Infeasible, Rational(0), std::nullopt, std::move(u), std::nullopt};
            }
            if (! cost)
                return RawOutcome{OptResult::Status::Optimal, Rational(0), t.primal(sys, pre), {}, std::nullopt};

            // artificials still basic sit at zero; swap them for any structural
            // column in their row, or leave them on rows that are redundant
            for (int r = 0 ; r < t.m() ; ++r)
                if (t.basis[r] >= t.structural)
                    for (auto & e : t.rows[r])
                        if (e.col < t.structural) {
                            t.pivot(r, e.col);
                            break;
                        }

            vector<Rational> reduced(t.structural + t.m(), Rational(0));
            for (int c = 0 ; c < t.structural ; ++c)
                reduced[c] = (*cost)[pre.var_of_col[c]];
            Rational value = 0;
            for (int r = 0 ; r < t.m() ; ++r) {
                if (t.basis[r] >= t.structural)
                    continue;
                Rational cb = reduced[t.basis[r]];
                if (cb == 0)
                    continue;
                for (auto & e : t.rows[r])
                    reduced[e.col] -= cb * ratio(to_mpz(e.val), to_mpz(t.den[r]));
                value += cb * t.basic_value(r);
            }
            t.load_costs(reduced, value);

            int unbounded = t.run_guarded();
            if (unbounded != -1) {
                Assignment ray(sys.n());
                ray[pre.var_of_col[unbounded]] = 1;
                for (int r = 0 ; r < t.m() ; ++r)
                    if (t.basis[r] < t.structural)
                        ray[pre.var_of_col[t.basis[r]]] = -t.entry(r, unbounded);
                return RawOutcome{OptResult::Status::Unbounded, Rational(0), t.primal(sys, pre), {}, std::move(ray)};
            }
            return RawOutcome{OptResult::Status::Optimal, t.objective(), t.primal(sys, pre), t.duals(sys, pre, signs, 0), std::nullopt};
        }

        /// Tries 64-bit arithmetic first and repeats the whole solve with GMP
        /// integers if any intermediate value would overflow. Both paths are
        /// exact, and they follow the same pivot sequence.
        auto solve(const LinearSystem & sys, const Presolve & pre, const vector<Rational> * cost, const SolveOptions & options) -> RawOutcome
        {
            vector<int> signs(pre.kept_rows.size());
            for (std::size_t r = 0 ; r < signs.size() ; ++r)
                signs[r] = sys.rows()[pre.kept_rows[r]].rhs < 0 ? -1 : 1;
            try {
                return run_simplex<CheckedInt>(sys, pre, signs, cost, options.pivot_limit);
            }
            catch (const CheckedIntOverflow &) {
                return run_simplex<mpz_class>(sys, pre, signs, cost, options.pivot_limit);
            }
        }
    }

    auto feasibility(const LinearSystem & sys, const SolveOptions & options) -> Certificate
    {
        auto pre = presolve(sys);
        if (pre.witness) {
            fix_up(sys, pre, *pre.witness, true, {});
            return Certificate{FarkasWitness{std::move(*pre.witness)}};
        }
        auto raw = solve(sys, pre, nullptr, options);
        if (raw.status == OptResult::Status::Infeasible) {
            fix_up(sys, pre, raw.multipliers, true, {});
            return Certificate{FarkasWitness{std::move(raw.multipliers)}};
        }
        return Certificate{std::move(*raw.point)};
    }

    auto optimize(const LinearSystem & sys, const Objective & objective, const SolveOptions & options) -> OptResult
    {
        vector<Rational> cost(sys.num_vars(), Rational(0));
        for (auto & term : objective) {
            if (term.var < 0 || term.var >= sys.num_vars())
                throw InvalidInstance("objective refers to unknown variable id " + std::to_string(term.var));
            Rational coef = term.coef;
            coef.canonicalize();
            cost[term.var] += coef;
        }

        auto pre = presolve(sys);
        if (pre.witness) {
            fix_up(sys, pre, *pre.witness, true, {});
            return OptResult{OptResult::Status::Infeasible, Rational(0), std::nullopt, {}, FarkasWitness{std::move(*pre.witness)}, std::nullopt};
        }

        auto raw = solve(sys, pre, &cost, options);
        switch (raw.status) {
            case OptResult::Status::Infeasible:
                fix_up(sys, pre, raw.multipliers, true, {});
                return OptResult{OptResult::Status::Infeasible, Rational(0), std::nullopt, {}, FarkasWitness{std::move(raw.multipliers)}, std::nullopt};

            case OptResult::Status::Unbounded: {
                Rational value = evaluate(objective, *raw.point);
                return OptResult{OptResult::Status::Unbounded, value, std::move(raw.point), {}, std::nullopt, std::move(raw.ray)};
            }

            case OptResult::Status::Optimal:
                break;
        }
        fix_up(sys, pre, raw.multipliers, false, cost);
        return OptResult{OptResult::Status::Optimal, raw.value, std::move(raw.point), std::move(raw.multipliers), std::nullopt, std::nullopt};
    }

    // Everything below re-derives its conclusions from the system rows alone.

    auto verify_farkas(const LinearSystem & sys, const FarkasWitness & witness) -> bool
    {
        auto & rows = sys.rows();
        if (witness.row_multipliers.size() != rows.size())
            return false;
        vector<Rational> combined(sys.num_vars(), Rational(0));
        Rational combined_rhs = 0;
        for (std::size_t r = 0 ; r < rows.size() ; ++r) {
            auto & u = witness.row_multipliers[r];
            if (u == 0)
                continue;
            for (auto & t : rows[r].terms)
                combined[t.var] += u * t.coef;
            combined_rhs += u * rows[r].rhs;
        }
        if (combined_rhs >= 0)
            return false;
        for (int k = 0 ; k < sys.num_vars() ; ++k)
            if (! sys.is_fixed(k) && combined[k] < 0)
                return false;
        return true;
    }

    auto verify_certificate(const LinearSystem & sys, const Certificate & cert) -> bool
    {
        if (cert.feasible())
            return satisfies(sys, cert.point());
        return verify_farkas(sys, cert.witness());
    }

    auto verify_opt_result(const LinearSystem & sys, const Objective & objective, const OptResult & result) -> bool
    {
        switch (result.status) {
            case OptResult::Status::Infeasible:
                return result.farkas && verify_farkas(sys, *result.farkas);

            case OptResult::Status::Unbounded: {
                if (! result.point || ! result.ray || ! satisfies(sys, *result.point))
                    return false;
                auto & ray = *result.ray;
                if (ray.layout().n() != sys.n())
                    return false;
                for (int k = 0 ; k < sys.num_vars() ; ++k)
                    if (ray[k] < 0 || (sys.is_fixed(k) && ray[k] != 0))
                        return false;
                for (auto & row : sys.rows()) {
                    Rational lhs = 0;
                    for (auto & t : row.terms)
                        lhs += t.coef * ray[t.var];
                    if (lhs != 0)
                        return false;
                }
                return evaluate(objective, ray) < 0;
            }

            case OptResult::Status::Optimal: {
                if (! result.point || ! satisfies(sys, *result.point) || evaluate(objective, *result.point) != result.value)
                    return false;
                auto & rows = sys.rows();
                if (result.duals.size() != rows.size())
                    return false;
                vector<Rational> slack(sys.num_vars(), Rational(0));
                for (auto & t : objective)
                    slack[t.var] += t.coef;
                Rational bound = 0;
                for (std::size_t r = 0 ; r < rows.size() ; ++r) {
                    for (auto & t : rows[r].terms)
                        slack[t.var] -= result.duals[r] * t.coef;
                    bound += result.duals[r] * rows[r].rhs;
                }
                for (int k = 0 ; k < sys.num_vars() ; ++k)
                    if (! sys.is_fixed(k) && slack[k] < 0)
                        return false;
                return bound == result.value;
            }
        }
        return false;
    }

    auto certificate_to_json(const LinearSystem & sys, const Certificate & cert) -> string
    {
        using nlohmann::ordered_json;
        auto & layout = sys.layout();
        ordered_json out;
        if (cert.feasible()) {
            out["outcome"] = "feasible";
            ordered_json point = ordered_json::object();
            for (int k = 0 ; k < sys.num_vars() ; ++k)
                if (cert.point()[k] != 0)
                    point[to_string(layout.var(k))] = to_string(cert.point()[k]);
            out["point"] = std::move(point);
        }
        else {
            out["outcome"] = "infeasible";
            auto & u = cert.witness().row_multipliers;
            ordered_json multipliers = ordered_json::object();
            vector<Rational> combined(sys.num_vars(), Rational(0));
            Rational combined_rhs = 0;
            for (std::size_t r = 0 ; r < u.size() && r < sys.rows().size() ; ++r) {
                if (u[r] == 0)
                    continue;
                multipliers[std::to_string(r + 1)] = to_string(u[r]);
                for (auto & t : sys.rows()[r].terms)
                    combined[t.var] += u[r] * t.coef;
                combined_rhs += u[r] * sys.rows()[r].rhs;
            }
            out["row_multipliers"] = std::move(multipliers);
            out["combined_rhs"] = to_string(combined_rhs);
            ordered_json row = ordered_json::object();
            for (int k = 0 ; k < sys.num_vars() ; ++k)
                if (combined[k] != 0)
                    row[to_string(layout.var(k))] = to_string(combined[k]);
            out["combined_row"] = std::move(row);
        }
        return out.dump(2) + "\n";
    }
}
