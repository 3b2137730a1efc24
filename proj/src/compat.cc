#include <subiso/compat.hh>
#include <subiso/errors.hh>

#include <algorithm>
#include <cctype>
#include <functional>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace subiso
{
    CompatMatrix::CompatMatrix(int n) :
        _n(n)
    {
        if (n < 1)
            throw InvalidInstance("compatibility matrix needs n >= 1");
        _e.assign(static_cast<size_t>(n) * n * n * n, 0);
    }

    auto CompatMatrix::offset(int i, int j, int mu, int nu) const -> size_t
    {
        if (i < 1 || i > _n || j < 1 || j > _n || mu < 1 || mu > _n || nu < 1 || nu > _n)
            throw std::out_of_range("compatibility index out of range");
        return ((static_cast<size_t>(i - 1) * _n + (j - 1)) * _n + (mu - 1)) * _n + (nu - 1);
    }

    auto CompatMatrix::all_allowed(int n) -> CompatMatrix
    {
        CompatMatrix c(n);
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j)
                for (int mu = 1 ; mu <= n ; ++mu)
                    for (int nu = 1 ; nu <= n ; ++nu)
                        if (structurally_allowed(i, j, mu, nu))
                            c._e[c.offset(i, j, mu, nu)] = 1;
        return c;
    }

    auto CompatMatrix::set(int i, int j, int mu, int nu, bool value) -> void
    {
        if (value && ! structurally_allowed(i, j, mu, nu))
            throw InvalidInstance("entry (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(mu) + ","
                    + std::to_string(nu) + ") is a structural zero");
        _e[offset(i, j, mu, nu)] = value;
        _e[offset(j, i, nu, mu)] = value;
    }

    auto CompatMatrix::count() const -> size_t
    {
        return std::count(_e.begin(), _e.end(), 1);
    }

    auto build_compat(const Digraph & input, const Digraph & pattern) -> CompatMatrix
    {
        if (input.size() != pattern.size())
            throw InvalidInstance("input has " + std::to_string(input.size()) + " vertices but the pattern has "
                    + std::to_string(pattern.size()) + "; pad the pattern first");

        int n = input.size();
        CompatMatrix c(n);
        for (int i = 1 ; i <= n ; ++i) {
            for (int mu = 1 ; mu <= n ; ++mu)
                c.set(i, i, mu, mu, pattern.arcs(i, i) <= input.arcs(mu, mu));

            for (int j = i + 1 ; j <= n ; ++j)
                for (int mu = 1 ; mu <= n ; ++mu)
                    for (int nu = 1 ; nu <= n ; ++nu)
                        if (mu != nu)
                            c.set(i, j, mu, nu, pattern.arcs(i, j) <= input.arcs(mu, nu) && pattern.arcs(j, i) <= input.arcs(nu, mu));
        }
        return c;
    }

    auto grid_to_compat(const SolutionGrid & grid) -> CompatMatrix
    {
        if (! grid.is_bijection())
            throw InvalidInstance("solution grid " + to_string(grid) + " is not injective");
        CompatMatrix c(grid.size());
        for (int i = 1 ; i <= grid.size() ; ++i)
            for (int j = 1 ; j <= grid.size() ; ++j)
                c.set(i, j, grid.at(i), grid.at(j), true);
        return c;
    }

    auto grid_in_compat(const CompatMatrix & c, const SolutionGrid & grid) -> bool
    {
        if (grid.size() != c.size() || ! grid.is_bijection())
            return false;
        for (int i = 1 ; i <= c.size() ; ++i)
            for (int j = 1 ; j <= c.size() ; ++j)
                if (! c(i, j, grid.at(i), grid.at(j)))
                    return false;
        return true;
    }

    auto enumerate_grids(const CompatMatrix & c, optional<size_t> limit) -> vector<SolutionGrid>
    {
        int n = c.size();
        if (n > 8 && ! limit)
            throw LimitExceeded("grid enumeration above 8 vertices needs an explicit limit");

        vector<SolutionGrid> result;
        vector<int> image(n, 0);
        vector<bool> used(n + 1, false);

        std::function<bool (int)> extend = [&] (int j) -> bool {
            if (j > n) {
                result.emplace_back(image);
                return ! (limit && result.size() >= *limit);
            }
            for (int nu = 1 ; nu <= n ; ++nu) {
                if (used[nu] || ! c(j, j, nu, nu))
                    continue;
                bool ok = true;
                for (int i = 1 ; i < j && ok ; ++i)
                    ok = c(i, j, image[i - 1], nu);
                if (! ok)
                    continue;
                used[nu] = true;
                image[j - 1] = nu;
                bool more = extend(j + 1);
                used[nu] = false;
                if (! more)
                    return false;
            }
            return true;
        };

        if (! limit || *limit > 0)
            extend(1);
        return result;
    }

    auto propagate(const CompatMatrix & c) -> CompatMatrix
    {
        int n = c.size();
        CompatMatrix result = c;

        auto supported = [&] (int i, int j, int mu, int nu) {
            for (int k = 1 ; k <= n ; ++k) {
                bool found = false;
                for (int lambda = 1 ; lambda <= n && ! found ; ++lambda)
                    found = result(i, k, mu, lambda) && result(k, j, lambda, nu);
                if (! found)
                    return false;
            }
            return true;
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 1 ; i <= n ; ++i)
                for (int j = i ; j <= n ; ++j)
                    for (int mu = 1 ; mu <= n ; ++mu)
                        for (int nu = 1 ; nu <= n ; ++nu)
                            if (result(i, j, mu, nu) && ! supported(i, j, mu, nu)) {
                                result.set(i, j, mu, nu, false);
                                changed = true;
                            }
        }
        return result;
    }

    auto render_boxes(const CompatMatrix & c) -> string
    {
        int n = c.size();
        string rule;
        for (int j = 1 ; j <= n ; ++j)
            rule += "+" + string(2 * n - 1 + 2, '-');
        rule += "+\n";

        string out = rule;
        for (int i = 1 ; i <= n ; ++i) {
            for (int mu = 1 ; mu <= n ; ++mu) {
                for (int j = 1 ; j <= n ; ++j) {
                    out += "| ";
                    for (int nu = 1 ; nu <= n ; ++nu) {
                        out += c(i, j, mu, nu) ? '1' : '0';
                        out += ' ';
                    }
                }
                out += "|\n";
            }
            out += rule;
        }
        return out;
    }

    auto parse_boxes(int n, const string & text) -> CompatMatrix
    {
        vector<bool> bits;
        for (char ch : text)
            if (ch == '0' || ch == '1')
                bits.push_back(ch == '1');
        size_t side = static_cast<size_t>(n) * n;
        if (bits.size() != side * side)
            throw InvalidInstance("expected " + std::to_string(side * side) + " box entries, found " + std::to_string(bits.size()));

        auto bit = [&] (int i, int j, int mu, int nu) {
            return bits[(static_cast<size_t>(i - 1) * n + (mu - 1)) * side + static_cast<size_t>(j - 1) * n + (nu - 1)];
        };

        CompatMatrix c(n);
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j)
                for (int mu = 1 ; mu <= n ; ++mu)
                    for (int nu = 1 ; nu <= n ; ++nu) {
                        if (bit(i, j, mu, nu) != bit(j, i, nu, mu))
                            throw InvalidInstance("box layout is not symmetric");
                        if (bit(i, j, mu, nu))
                            c.set(i, j, mu, nu, true);
                    }
        return c;
    }
}
