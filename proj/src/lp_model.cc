#include <subiso/errors.hh>
#include <subiso/lp_model.hh>

#include <algorithm>
#include <map>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace subiso
{
    auto VarIndex::x(int i, int j, int mu, int nu) -> VarIndex
    {
        if (i == j || mu == nu)
            throw InvalidInstance("x variables need i != j and mu != nu");
        if (i < j)
            return VarIndex{Kind::X, i, j, mu, nu};
        return VarIndex{Kind::X, j, i, nu, mu};
    }

    auto VarIndex::y(int j, int nu) -> VarIndex
    {
        return VarIndex{Kind::Y, j, j, nu, nu};
    }

    auto to_string(const VarIndex & v) -> string
    {
        if (v.kind == VarIndex::Kind::Y)
            return "y_" + std::to_string(v.j) + "_" + std::to_string(v.nu);
        return "x_" + std::to_string(v.i) + "_" + std::to_string(v.j) + "_" + std::to_string(v.mu) + "_" + std::to_string(v.nu);
    }

    VariableLayout::VariableLayout(int n) :
        _n(n)
    {
        if (n < 1)
            throw InvalidInstance("system dimension must be at least 1");
    }

    auto VariableLayout::size() const noexcept -> int
    {
        return _n * _n + _n * _n * (_n - 1) * (_n - 1) / 2;
    }

    auto VariableLayout::contains(const VarIndex & v) const -> bool
    {
        auto in = [&] (int k) { return k >= 1 && k <= _n; };
        if (! (in(v.i) && in(v.j) && in(v.mu) && in(v.nu)))
            return false;
        if (v.kind == VarIndex::Kind::Y)
            return v.i == v.j && v.mu == v.nu;
        return v.i < v.j && v.mu != v.nu;
    }

    auto VariableLayout::id(const VarIndex & v) const -> int
    {
        if (! contains(v))
            throw InvalidInstance("variable " + to_string(v) + " does not belong to a dimension " + std::to_string(_n) + " system");
        if (v.kind == VarIndex::Kind::Y)
            return (v.j - 1) * _n + (v.nu - 1);
        int pair = (v.i - 1) * _n - (v.i - 1) * v.i / 2 + (v.j - v.i - 1);
        int within = (v.mu - 1) * (_n - 1) + (v.nu - 1 - (v.nu > v.mu ? 1 : 0));
        return _n * _n + pair * _n * (_n - 1) + within;
    }

    auto VariableLayout::var(int id) const -> VarIndex
    {
        if (id < 0 || id >= size())
            throw InvalidInstance("variable id " + std::to_string(id) + " out of range");
        if (id < _n * _n)
            return VarIndex::y(id / _n + 1, id % _n + 1);

        int rest = id - _n * _n;
        int pair = rest / (_n * (_n - 1)), within = rest % (_n * (_n - 1));
        int i = 1;
        while (pair >= _n - i) {
            pair -= _n - i;
            ++i;
        }
        int j = i + 1 + pair;
        int mu = within / (_n - 1) + 1;
        int nu = within % (_n - 1) + 1;
        if (nu >= mu)
            ++nu;
        return VarIndex{VarIndex::Kind::X, i, j, mu, nu};
    }

    LinearSystem::LinearSystem(int n) :
        _layout(n),
        _fixed(_layout.size(), false)
    {
    }

    auto LinearSystem::add_row(vector<Term> terms, Rational rhs) -> void
    {
        std::map<int, Rational> merged;
        for (auto & t : terms) {
            if (t.var < 0 || t.var >= num_vars())
                throw InvalidInstance("row refers to unknown variable id " + std::to_string(t.var));
            t.coef.canonicalize();
            merged[t.var] += t.coef;
        }
        rhs.canonicalize();
        Equality row{{}, std::move(rhs)};
        for (auto & [var, coef] : merged)
            if (coef != 0)
                row.terms.push_back(Term{var, coef});
        _rows.push_back(std::move(row));
    }

    auto LinearSystem::fix_zero(const VarIndex & v) -> void
    {
        _fixed[_layout.id(v)] = true;
    }

    auto LinearSystem::zero_fixed() const -> vector<VarIndex>
    {
        vector<VarIndex> result;
        for (int k = 0 ; k < num_vars() ; ++k)
            if (_fixed[k])
                result.push_back(_layout.var(k));
        return result;
    }

    auto LinearSystem::distinct_rows() const -> vector<Equality>
    {
        vector<Equality> result;
        std::set<std::pair<vector<std::pair<int, string>>, string>> seen;
        for (auto & row : _rows) {
            vector<std::pair<int, string>> key;
            for (auto & t : row.terms)
                key.emplace_back(t.var, t.coef.get_str());
            if (seen.emplace(std::move(key), row.rhs.get_str()).second)
                result.push_back(row);
        }
        return result;
    }

    auto LinearSystem::operator== (const LinearSystem & other) const -> bool
    {
        return n() == other.n() && _rows == other._rows && _fixed == other._fixed;
    }

    Assignment::Assignment(int n) :
        _layout(n),
        _values(_layout.size(), Rational(0))
    {
    }

    auto Assignment::operator== (const Assignment & other) const -> bool
    {
        return _layout.n() == other._layout.n() && _values == other._values;
    }

    auto satisfies(const LinearSystem & sys, const Assignment & point) -> bool
    {
        if (point.layout().n() != sys.n())
            return false;
        for (int k = 0 ; k < sys.num_vars() ; ++k) {
            if (point[k] < 0)
                return false;
            if (sys.is_fixed(k) && point[k] != 0)
                return false;
        }
        for (auto & row : sys.rows()) {
            Rational lhs = 0;
            for (auto & t : row.terms)
                lhs += t.coef * point[t.var];
            if (lhs != row.rhs)
                return false;
        }
        return true;
    }

    auto evaluate(const Objective & objective, const Assignment & point) -> Rational
    {
        Rational result = 0;
        for (auto & t : objective)
            result += t.coef * point[t.var];
        return result;
    }

    auto build_base_system(int n) -> LinearSystem
    {
        LinearSystem sys(n);
        auto & layout = sys.layout();

        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j) {
                if (i == j)
                    continue;
                for (int nu = 1 ; nu <= n ; ++nu) {
                    vector<Term> terms;
                    for (int mu = 1 ; mu <= n ; ++mu)
                        if (mu != nu)
                            terms.push_back(Term{layout.id(VarIndex::x(i, j, mu, nu)), 1});
                    terms.push_back(Term{layout.id(VarIndex::y(j, nu)), -1});
                    sys.add_row(std::move(terms), 0);
                }
            }

        for (int j = 1 ; j <= n ; ++j)
            for (int mu = 1 ; mu <= n ; ++mu)
                for (int nu = 1 ; nu <= n ; ++nu) {
                    if (mu == nu)
                        continue;
                    vector<Term> terms;
                    for (int i = 1 ; i <= n ; ++i)
                        if (i != j)
                            terms.push_back(Term{layout.id(VarIndex::x(i, j, mu, nu)), 1});
                    terms.push_back(Term{layout.id(VarIndex::y(j, nu)), -1});
                    sys.add_row(std::move(terms), 0);
                }

        for (int j = 1 ; j <= n ; ++j) {
            vector<Term> terms;
            for (int nu = 1 ; nu <= n ; ++nu)
                terms.push_back(Term{layout.id(VarIndex::y(j, nu)), 1});
            sys.add_row(std::move(terms), 1);
        }

        return sys;
    }

    auto zero_constraints(const CompatMatrix & c) -> vector<VarIndex>
    {
        int n = c.size();
        VariableLayout layout(n);
        vector<VarIndex> result;
        for (int id = 0 ; id < layout.size() ; ++id) {
            auto v = layout.var(id);
            if (! c(v.i, v.j, v.mu, v.nu))
                result.push_back(v);
        }
        return result;
    }

    auto aggregate(const LinearSystem & base, const vector<VarIndex> & zeros, const vector<VarIndex> & extra_zeros) -> LinearSystem
    {
        LinearSystem result = base;
        for (auto & v : zeros)
            result.fix_zero(v);
        for (auto & v : extra_zeros)
            result.fix_zero(v);
        return result;
    }

    auto center_point(int n) -> Assignment
    {
        Assignment point(n);
        auto & layout = point.layout();
        Rational x_value = n > 1 ? Rational(1, n * (n - 1)) : Rational(0);
        Rational y_value(1, n);
        for (int id = 0 ; id < layout.size() ; ++id)
            point[id] = layout.var(id).kind == VarIndex::Kind::Y ? y_value : x_value;
        return point;
    }

    auto grid_to_point(const SolutionGrid & grid) -> Assignment
    {
        if (grid.size() < 1 || ! grid.is_bijection())
            throw InvalidInstance("solution grid " + to_string(grid) + " is not injective");
        int n = grid.size();
        Assignment point(n);
        for (int j = 1 ; j <= n ; ++j)
            point.set(VarIndex::y(j, grid.at(j)), 1);
        for (int i = 1 ; i <= n ; ++i)
            for (int j = i + 1 ; j <= n ; ++j)
                point.set(VarIndex::x(i, j, grid.at(i), grid.at(j)), 1);
        return point;
    }

    auto point_to_grid(const Assignment & point) -> optional<SolutionGrid>
    {
        int n = point.layout().n();
        vector<int> image(n, 0);
        for (int j = 1 ; j <= n ; ++j)
            for (int nu = 1 ; nu <= n ; ++nu) {
                auto & v = point.value(VarIndex::y(j, nu));
                if (v == 1) {
                    if (image[j - 1] != 0)
                        return std::nullopt;
                    image[j - 1] = nu;
                }
                else if (v != 0)
                    return std::nullopt;
            }
        SolutionGrid grid{image};
        if (! grid.is_bijection() || grid_to_point(grid) != point)
            return std::nullopt;
        return grid;
    }

    namespace
    {
        auto lp_number(const Rational & q) -> string
        {
            if (q.get_den() == 1)
                return q.get_num().get_str();

            mpz_class den = q.get_den();
            unsigned twos = 0, fives = 0;
            while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
                den /= 2;
                ++twos;
            }
            while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
                den /= 5;
                ++fives;
            }
            if (den != 1)
                return q.get_str();

            unsigned digits = std::max(twos, fives);
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
            mpz_class scaled = q.get_num() * scale / q.get_den();
            bool negative = scaled < 0;
            string body = mpz_class(abs(scaled)).get_str();
            if (body.size() <= digits)
                body.insert(0, digits + 1 - body.size(), '0');
            body.insert(body.size() - digits, ".");
            return (negative ? "-" : "") + body;
        }

        auto lp_expression(const vector<Term> & terms, const VariableLayout & layout) -> string
        {
            string out;
            bool first = true;
            for (auto & t : terms) {
                Rational mag = abs(t.coef);
                bool negative = t.coef < 0;
                if (first)
                    out += negative ? "-" : "";
                else
                    out += negative ? " - " : " + ";
                if (mag != 1)
                    out += lp_number(mag) + " ";
                out += to_string(layout.var(t.var));
                first = false;
            }
            return out;
        }
    }

    auto emit_lp(const LinearSystem & sys, const optional<Objective> & objective) -> string
    {
        auto & layout = sys.layout();
        string out = "\\ relabeling system, n = " + std::to_string(sys.n()) + "\n";

        out += "Minimize\n obj: ";
        vector<Term> obj_terms;
        if (objective) {
            std::map<int, Rational> merged;
            for (auto & t : *objective) {
                if (t.var < 0 || t.var >= sys.num_vars())
                    throw InvalidInstance("objective refers to unknown variable id " + std::to_string(t.var));
                merged[t.var] += t.coef;
            }
            for (auto & [var, coef] : merged)
                if (coef != 0)
                    obj_terms.push_back(Term{var, coef});
        }
        if (obj_terms.empty())
            out += "0 " + to_string(layout.var(0)) + "\n";
        else
            out += lp_expression(obj_terms, layout) + "\n";

        out += "Subject To\n";
        int row_no = 0;
        for (auto & row : sys.distinct_rows()) {
            out += " c" + std::to_string(++row_no) + ": ";
            out += row.terms.empty() ? "0 " + to_string(layout.var(0)) : lp_expression(row.terms, layout);
            out += " = " + lp_number(row.rhs) + "\n";
        }

        out += "Bounds\n";
        for (int k = 0 ; k < sys.num_vars() ; ++k)
            out += " " + to_string(layout.var(k)) + (sys.is_fixed(k) ? " = 0\n" : " >= 0\n");
        out += "End\n";
        return out;
    }
}
