#ifndef SUBISO_CNF_HH
#define SUBISO_CNF_HH 1

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subiso
{
    /// Conjunction of clauses; a clause is a nonempty disjunction of literals,
    /// a literal is +v or -v for a variable v in [1, num_vars].
    struct CNF
    {
        int num_vars = 0;
        std::vector<std::vector<int>> clauses;

        auto operator== (const CNF &) const -> bool = default;
    };

    /// Throws std::invalid_argument if a literal is out of range or a clause
    /// is empty.
    auto validate(const CNF & f) -> void;

    /// DIMACS: optional 'c' comment lines, `p cnf V C`, then C clauses each
    /// terminated by 0 (clauses may span lines). Throws ParseError.
    auto parse_cnf(std::string_view text) -> CNF;
    auto serialize_cnf(const CNF & f) -> std::string;

    /// values[v - 1] is the value of variable v.
    auto evaluate(const CNF & f, const std::vector<bool> & values) -> bool;

    /// num_vars fixed, clause count uniform in [1, max_clauses], each clause of
    /// width uniform in [1, max_width] with literals drawn uniformly from the
    /// 2 num_vars literals (repeats allowed). mt19937_64 seeded with seed.
    auto random_cnf(int num_vars, int max_clauses, int max_width, std::uint64_t seed) -> CNF;

    /// Every CNF over exactly `num_vars` variables with between 1 and
    /// max_clauses clauses, each clause a nonempty set of distinct literals
    /// listed in the order 1, -1, 2, -2, ...; clause sequences are ordered.
    auto all_cnfs(int num_vars, int max_clauses) -> std::vector<CNF>;
}

#endif
