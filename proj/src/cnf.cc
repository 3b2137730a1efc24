#include <subiso/cnf.hh>
#include <subiso/errors.hh>
#include <subiso/random.hh>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace subiso
{
    auto validate(const CNF & f) -> void
    {
        if (f.num_vars < 0)
            throw std::invalid_argument("negative variable count");
        for (auto & clause : f.clauses) {
            if (clause.empty())
                throw std::invalid_argument("empty clause");
            for (int lit : clause)
                if (lit == 0 || std::abs(lit) > f.num_vars)
                    throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
        }
    }

    auto parse_cnf(string_view text) -> CNF
    {
        std::istringstream in{string(text)};
        string raw;
        int line_no = 0;
        bool have_header = false;
        long long declared_clauses = 0;
        CNF f;
        vector<int> current;
        int current_start = 0;

        while (std::getline(in, raw)) {
            ++line_no;
            std::istringstream words(raw);
            string first;
            if (! (words >> first) || first[0] == 'c' || first[0] == '%')
                continue;

            if (! have_header) {
                string kind;
                long long vars = -1;
                if (first != "p" || ! (words >> kind >> vars >> declared_clauses) || kind != "cnf" || vars < 0 || declared_clauses < 0)
                    throw ParseError(line_no, "expected header 'p cnf <vars> <clauses>'");
                string extra;
                if (words >> extra)
                    throw ParseError(line_no, "trailing text after header");
                f.num_vars = static_cast<int>(vars);
                have_header = true;
                continue;
            }

            std::istringstream tokens(raw);
            string token;
            while (tokens >> token) {
                long long lit;
                try {
                    std::size_t used = 0;
                    lit = std::stoll(token, &used);
                    if (used != token.size())
                        throw std::invalid_argument(token);
                }
                catch (const std::exception &) {
                    throw ParseError(line_no, "expected literal, got '" + token + "'");
                }
                if (lit == 0) {
                    if (current.empty())
                        throw ParseError(line_no, "zero-length clause");
                    f.clauses.push_back(std::move(current));
                    current.clear();
                    continue;
                }
                if (std::llabs(lit) > f.num_vars)
                    throw ParseError(line_no, "variable " + std::to_string(std::llabs(lit)) + " out of range [1,"
                            + std::to_string(f.num_vars) + "]");
                if (current.empty())
                    current_start = line_no;
                current.push_back(static_cast<int>(lit));
            }
        }

        if (! have_header)
            throw ParseError(line_no + 1, "missing 'p cnf' header");
        if (! current.empty())
            throw ParseError(current_start, "clause not terminated by 0");
        if (static_cast<long long>(f.clauses.size()) != declared_clauses)
            throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found "
                    + std::to_string(f.clauses.size()));
        return f;
    }

    auto serialize_cnf(const CNF & f) -> string
    {
        string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
        for (auto & clause : f.clauses) {
            for (int lit : clause)
                out += std::to_string(lit) + " ";
            out += "0\n";
        }
        return out;
    }

    auto evaluate(const CNF & f, const vector<bool> & values) -> bool
    {
        return std::all_of(f.clauses.begin(), f.clauses.end(), [&] (const vector<int> & clause) {
            return std::any_of(clause.begin(), clause.end(), [&] (int lit) {
                return values.at(std::abs(lit) - 1) == (lit > 0);
            });
        });
    }

    auto random_cnf(int num_vars, int max_clauses, int max_width, std::uint64_t seed) -> CNF
    {
        if (num_vars < 1 || max_clauses < 1 || max_width < 1)
            throw std::invalid_argument("random_cnf needs positive sizes");
        std::mt19937_64 engine(seed);
        CNF f;
        f.num_vars = num_vars;
        auto m = 1 + uniform_below(engine, max_clauses);
        for (std::uint64_t c = 0 ; c < m ; ++c) {
            vector<int> clause;
            auto width = 1 + uniform_below(engine, max_width);
            for (std::uint64_t k = 0 ; k < width ; ++k) {
                auto pick = uniform_below(engine, 2 * static_cast<std::uint64_t>(num_vars));
                int var = static_cast<int>(pick / 2) + 1;
                clause.push_back(pick % 2 == 0 ? var : -var);
            }
            f.clauses.push_back(std::move(clause));
        }
        return f;
    }

    auto all_cnfs(int num_vars, int max_clauses) -> vector<CNF>
    {
        vector<int> literals;
        for (int v = 1 ; v <= num_vars ; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        vector<vector<int>> clauses;
        for (unsigned mask = 1 ; mask < (1u << literals.size()) ; ++mask) {
            vector<int> clause;
            for (std::size_t k = 0 ; k < literals.size() ; ++k)
                if (mask & (1u << k))
                    clause.push_back(literals[k]);
            clauses.push_back(std::move(clause));
        }

        vector<CNF> result;
        vector<std::size_t> choice;
        for (int m = 1 ; m <= max_clauses ; ++m) {
            choice.assign(m, 0);
            while (true) {
                CNF f{num_vars, {}};
                for (auto c : choice)
                    f.clauses.push_back(clauses[c]);
                result.push_back(std::move(f));

                int pos = m - 1;
                while (pos >= 0 && ++choice[pos] == clauses.size())
                    choice[pos--] = 0;
                if (pos < 0)
                    break;
            }
        }
        return result;
    }
}
