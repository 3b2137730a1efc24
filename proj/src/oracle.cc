#include <subiso/errors.hh>
#include <subiso/oracle.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::size_t;
using std::vector;

namespace subiso
{
    auto to_string(Answer a) -> const char *
    {
        return a == Answer::Yes ? "YES" : "NO";
    }

    auto check_embedding(const Digraph & input, const Digraph & pattern, const SolutionGrid & grid) -> bool
    {
        if (input.size() != pattern.size() || grid.size() != input.size())
            throw InvalidInstance("check_embedding needs equal sizes");
        if (! grid.is_bijection())
            throw InvalidInstance("solution grid " + to_string(grid) + " is not injective");
        int n = input.size();
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j)
                if (pattern.arcs(i, j) > input.arcs(grid.at(i), grid.at(j)))
                    return false;
        return true;
    }

    namespace
    {
        /// Calls visit(grid) for each permutation in lexicographic order until
        /// it returns false.
        template <typename Visit>
        auto for_each_embedding(const Digraph & input, const Digraph & pattern, const OracleLimits & limits, Visit && visit) -> void
        {
            if (input.size() > limits.max_vertices)
                throw LimitExceeded("oracle is capped at " + std::to_string(limits.max_vertices) + " vertices");
            if (pattern.size() > input.size())
                return;
            auto padded = pad_pattern(pattern, input.size());
            vector<int> image(input.size());
            std::iota(image.begin(), image.end(), 1);
            do {
                SolutionGrid grid{image};
                if (check_embedding(input, padded, grid) && ! visit(grid))
                    return;
            } while (std::next_permutation(image.begin(), image.end()));
        }
    }

    auto subgi_brute_force(const Digraph & input, const Digraph & pattern, const OracleLimits & limits) -> Verdict
    {
        Verdict verdict{Answer::No, std::nullopt, std::nullopt};
        for_each_embedding(input, pattern, limits, [&] (const SolutionGrid & grid) {
            verdict.answer = Answer::Yes;
            verdict.grid = grid;
            return false;
        });
        return verdict;
    }

    auto count_embeddings(const Digraph & input, const Digraph & pattern, const OracleLimits & limits) -> size_t
    {
        size_t count = 0;
        for_each_embedding(input, pattern, limits, [&] (const SolutionGrid &) {
            ++count;
            return true;
        });
        return count;
    }

    auto sat_brute_force(const CNF & f, const OracleLimits & limits) -> Verdict
    {
        validate(f);
        if (f.num_vars > limits.max_sat_vars)
            throw LimitExceeded("SAT oracle is capped at " + std::to_string(limits.max_sat_vars) + " variables");
        vector<bool> values(f.num_vars);
        for (unsigned long long code = 0 ; code < (1ull << f.num_vars) ; ++code) {
            for (int v = 1 ; v <= f.num_vars ; ++v)
                values[v - 1] = (code >> (f.num_vars - v)) & 1;
            if (evaluate(f, values))
                return Verdict{Answer::Yes, std::nullopt, values};
        }
        return Verdict{Answer::No, std::nullopt, std::nullopt};
    }

    auto tsp_brute_force(const WeightedDigraph & g, const OracleLimits & limits) -> optional<Rational>
    {
        int n = g.size();
        if (n < 2)
            throw InvalidInstance("a tour needs at least two vertices");
        if (n > limits.max_vertices)
            throw LimitExceeded("tour enumeration is capped at " + std::to_string(limits.max_vertices) + " vertices");

        optional<Rational> best;
        vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        do {
            Rational cost = 0;
            bool ok = true;
            for (int k = 0 ; k < n && ok ; ++k) {
                auto & w = g.weight(order[k], order[(k + 1) % n]);
                if (! w)
                    ok = false;
                else
                    cost += *w;
            }
            if (ok && (! best || cost < *best))
                best = cost;
        } while (std::next_permutation(order.begin() + 1, order.end()));
        return best;
    }
}
