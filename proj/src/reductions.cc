#include <subiso/errors.hh>
#include <subiso/random.hh>
#include <subiso/reductions.hh>

#include <cstdlib>
#include <map>

using std::vector;

namespace subiso
{
    auto hamiltonian_pattern(int n) -> Digraph
    {
        if (n < 2)
            throw InvalidInstance("a Hamiltonian cycle pattern needs n >= 2");
        Digraph d(n);
        for (int v = 1 ; v <= n ; ++v)
            d.set_arcs(v, v % n + 1, 1);
        return d;
    }

    auto subgi_system(const Digraph & input, const Digraph & pattern) -> LinearSystem
    {
        auto padded = pad_pattern(pattern, input.size());
        return aggregate(build_base_system(input.size()), zero_constraints(build_compat(input, padded)));
    }

    auto tsp_model(const WeightedDigraph & g) -> TspModel
    {
        int n = g.size();
        if (n < 2)
            throw InvalidInstance("TSP needs at least two vertices");

        auto input = g.support();
        auto pattern = hamiltonian_pattern(n);
        auto system = subgi_system(input, pattern);
        auto & layout = system.layout();

        std::map<int, Rational> coef;
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j) {
                if (i == j || pattern.arcs(i, j) == 0)
                    continue;
                for (int mu = 1 ; mu <= n ; ++mu)
                    for (int nu = 1 ; nu <= n ; ++nu)
                        if (mu != nu)
                            if (auto & w = g.weight(mu, nu))
                                coef[layout.id(VarIndex::x(i, j, mu, nu))] += pattern.arcs(i, j) * *w;
            }

        Objective objective;
        for (auto & [var, c] : coef)
            if (c != 0)
                objective.push_back(Term{var, c});
        return TspModel{std::move(input), std::move(pattern), std::move(system), std::move(objective)};
    }

    auto sat_to_subgi(const CNF & f) -> SatInstance
    {
        validate(f);
        if (f.clauses.empty())
            throw InvalidInstance("SAT reduction needs at least one clause");

        vector<int> literal_of, clause_of, first_slot;
        for (std::size_t c = 0 ; c < f.clauses.size() ; ++c) {
            first_slot.push_back(static_cast<int>(literal_of.size()) + 1);
            for (int lit : f.clauses[c]) {
                literal_of.push_back(lit);
                clause_of.push_back(static_cast<int>(c));
            }
        }
        int slots = static_cast<int>(literal_of.size());

        Digraph input(slots), pattern(slots);
        for (int p = 1 ; p <= slots ; ++p)
            for (int q = 1 ; q <= slots ; ++q)
                input.set_arcs(p, q, literal_of[p - 1] == -literal_of[q - 1] ? 0 : 1);
        for (int a : first_slot)
            for (int b : first_slot)
                pattern.set_arcs(a, b, 1);

        vector<VarIndex> extra;
        for (int p = 1 ; p <= slots ; ++p)
            for (int nu = 1 ; nu <= slots ; ++nu)
                if (clause_of[p - 1] != clause_of[nu - 1])
                    extra.push_back(VarIndex::y(p, nu));

        return SatInstance{std::move(input), std::move(pattern), std::move(extra), std::move(clause_of)};
    }

    auto sat_system(const SatInstance & instance) -> LinearSystem
    {
        return aggregate(build_base_system(instance.input.size()), zero_constraints(build_compat(instance.input, instance.pattern)),
                instance.extra_zeros);
    }

    auto random_complete_weighted(int n, int low, int high, std::uint64_t seed) -> WeightedDigraph
    {
        if (high < low)
            throw std::invalid_argument("empty weight range");
        std::mt19937_64 engine(seed);
        WeightedDigraph g(n);
        auto span = static_cast<std::uint64_t>(static_cast<long long>(high) - low + 1);
        for (int u = 1 ; u <= n ; ++u)
            for (int v = 1 ; v <= n ; ++v)
                if (u != v)
                    g.set_weight(u, v, Rational(low + static_cast<long>(uniform_below(engine, span))));
        return g;
    }
}
