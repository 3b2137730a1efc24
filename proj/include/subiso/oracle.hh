#ifndef SUBISO_ORACLE_HH
#define SUBISO_ORACLE_HH 1

#include <subiso/cnf.hh>
#include <subiso/compat.hh>
#include <subiso/digraph.hh>

#include <cstddef>
#include <optional>
#include <vector>

namespace subiso
{
    enum class Answer
    {
        Yes,
        No
    };

    auto to_string(Answer a) -> const char *;

    struct Verdict
    {
        Answer answer;
        std::optional<SolutionGrid> grid;
        std::optional<std::vector<bool>> assignment;
    };

    struct OracleLimits
    {
        int max_vertices = 9;
        int max_sat_vars = 24;
    };

    /// pattern(i, j) <= input(grid(i), grid(j)) for every ordered pair,
    /// loops included. Throws InvalidInstance on a size mismatch.
    auto check_embedding(const Digraph & input, const Digraph & pattern, const SolutionGrid & grid) -> bool;

    /// Runs over all permutations of the input's vertices in lexicographic
    /// order; YES comes with the first embedding found. The pattern is
    /// padded internally; a pattern larger than the input is NO outright.
    auto subgi_brute_force(const Digraph & input, const Digraph & pattern, const OracleLimits & limits = {}) -> Verdict;

    /// Number of permutations passing check_embedding (pattern padded).
    auto count_embeddings(const Digraph & input, const Digraph & pattern, const OracleLimits & limits = {}) -> std::size_t;

    /// Truth-table search with x1 as the most significant position and
    /// false < true; YES carries the first satisfying assignment.
    auto sat_brute_force(const CNF & f, const OracleLimits & limits = {}) -> Verdict;

    /// Cheapest Hamiltonian cycle of the weighted digraph, by enumerating the
    /// cyclic orders that start at vertex 1; nullopt when none exists.
    auto tsp_brute_force(const WeightedDigraph & g, const OracleLimits & limits = {}) -> std::optional<Rational>;
}

#endif
