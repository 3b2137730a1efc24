#include <subiso/errors.hh>
#include <subiso/lp_model.hh>
#include <subiso/lp_solve.hh>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace subiso;

namespace
{
    /// A row keyed by variable names, so comparisons never go through ids.
    using NamedRow = std::pair<std::map<std::string, Rational>, Rational>;

    auto named(const LinearSystem & sys, const Equality & row) -> NamedRow
    {
        NamedRow out;
        for (auto & t : row.terms)
            out.first[to_string(sys.layout().var(t.var))] += t.coef;
        out.second = row.rhs;
        return out;
    }

    auto named_rows(const LinearSystem & sys) -> std::set<NamedRow>
    {
        std::set<NamedRow> out;
        for (auto & row : sys.rows())
            out.insert(named(sys, row));
        return out;
    }

    auto xname(int i, int j, int mu, int nu) -> std::string
    {
        if (i > j) {
            std::swap(i, j);
            std::swap(mu, nu);
        }
        return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(mu) + "_" + std::to_string(nu);
    }

    auto yname(int j, int nu) -> std::string
    {
        return "y_" + std::to_string(j) + "_" + std::to_string(nu);
    }

    /// Direct transcription of the three row families over names.
    auto reference_rows(int n) -> std::vector<NamedRow>
    {
        std::vector<NamedRow> rows;
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= n ; ++j)
                for (int nu = 1 ; nu <= n ; ++nu) {
                    if (i == j)
                        continue;
                    NamedRow r;
                    for (int mu = 1 ; mu <= n ; ++mu)
                        if (mu != nu)
                            r.first[xname(i, j, mu, nu)] += 1;
                    r.first[yname(j, nu)] -= 1;
                    rows.push_back(r);
                }
        for (int j = 1 ; j <= n ; ++j)
            for (int mu = 1 ; mu <= n ; ++mu)
                for (int nu = 1 ; nu <= n ; ++nu) {
                    if (mu == nu)
                        continue;
                    NamedRow r;
                    for (int i = 1 ; i <= n ; ++i)
                        if (i != j)
                            r.first[xname(i, j, mu, nu)] += 1;
                    r.first[yname(j, nu)] -= 1;
                    rows.push_back(r);
                }
        for (int j = 1 ; j <= n ; ++j) {
            NamedRow r;
            for (int nu = 1 ; nu <= n ; ++nu)
                r.first[yname(j, nu)] += 1;
            r.second = 1;
            rows.push_back(r);
        }
        return rows;
    }

    auto parse_number(const std::string & token) -> Rational
    {
        if (auto dot = token.find('.') ; dot != std::string::npos) {
            bool negative = token[0] == '-';
            std::string whole = token.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
            std::string frac = token.substr(dot + 1);
            Rational scale = 1;
            for (std::size_t k = 0 ; k < frac.size() ; ++k)
                scale *= 10;
            Rational value = Rational(mpz_class(whole.empty() ? "0" : whole) * scale + mpz_class(frac)) / scale;
            value.canonicalize();
            return negative ? Rational(-value) : value;
        }
        return parse_rational(token);
    }

    struct ParsedLp
    {
        std::map<std::string, Rational> objective;
        std::vector<NamedRow> rows;
        std::map<std::string, std::string> bounds;
    };

    /// Small reader for the LP text subset the library writes: signed terms
    /// "[coef] name" separated by + and -, one constraint per line.
    auto parse_lp(const std::string & text) -> ParsedLp
    {
        ParsedLp out;
        std::istringstream in(text);
        std::string line, section;
        auto read_terms = [] (std::istringstream & words, std::map<std::string, Rational> & terms) -> std::string {
            Rational sign = 1;
            std::optional<Rational> coef;
            std::string w;
            while (words >> w) {
                if (w == "=" || w == ">=")
                    return w;
                if (w == "+")
                    sign = 1;
                else if (w == "-")
                    sign = -1;
                else if (std::isdigit(static_cast<unsigned char>(w[0])) || (w.size() > 1 && w[0] == '-' && std::isdigit(static_cast<unsigned char>(w[1]))))
                    coef = parse_number(w);
                else {
                    if (w[0] == '-') {
                        sign = -sign;
                        w = w.substr(1);
                    }
                    terms[w] += sign * coef.value_or(Rational(1));
                    sign = 1;
                    coef.reset();
                }
            }
            return "";
        };
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '\\')
                continue;
            if (line == "Minimize" || line == "Subject To" || line == "Bounds" || line == "End") {
                section = line;
                continue;
            }
            std::istringstream words(line);
            if (section == "Minimize") {
                std::string label;
                words >> label;
                read_terms(words, out.objective);
            }
            else if (section == "Subject To") {
                std::string label;
                words >> label;
                NamedRow r;
                REQUIRE(read_terms(words, r.first) == "=");
                std::string rhs;
                words >> rhs;
                r.second = parse_number(rhs);
                std::erase_if(r.first, [] (auto & kv) { return kv.second == 0; });
                out.rows.push_back(r);
            }
            else if (section == "Bounds") {
                std::string name, op, value;
                words >> name >> op >> value;
                out.bounds[name] = op + " " + value;
            }
        }
        return out;
    }

    auto relabel_var(const VarIndex & v, const VertexMap & pattern_perm, const VertexMap & input_perm) -> VarIndex
    {
        if (v.kind == VarIndex::Kind::Y)
            return VarIndex::y(pattern_perm.at(v.j), input_perm.at(v.nu));
        return VarIndex::x(pattern_perm.at(v.i), pattern_perm.at(v.j), input_perm.at(v.mu), input_perm.at(v.nu));
    }
}

TEST_CASE("variable layout: counts, ordering and canonical orientation")
{
    for (int n = 1 ; n <= 12 ; ++n) {
        VariableLayout layout(n);
        CHECK(layout.size() == n * n + n * n * (n - 1) * (n - 1) / 2);
        auto sys = build_base_system(n);
        CHECK(sys.rows().size() == static_cast<std::size_t>(2 * n * n * (n - 1) + n));
        CHECK(satisfies(sys, center_point(n)));
    }

    VariableLayout layout(3);
    for (int k = 0 ; k < layout.size() ; ++k)
        CHECK(layout.id(layout.var(k)) == k);
    CHECK(layout.var(0) == VarIndex::y(1, 1));
    CHECK(layout.var(8) == VarIndex::y(3, 3));
    CHECK(layout.var(9) == VarIndex::x(1, 2, 1, 2));
    CHECK(layout.var(layout.size() - 1) == VarIndex::x(2, 3, 3, 2));

    for (int i = 1 ; i <= 3 ; ++i)
        for (int j = 1 ; j <= 3 ; ++j)
            for (int mu = 1 ; mu <= 3 ; ++mu)
                for (int nu = 1 ; nu <= 3 ; ++nu)
                    if (i != j && mu != nu) {
                        CHECK(VarIndex::x(i, j, mu, nu) == VarIndex::x(j, i, nu, mu));
                        CHECK(layout.id(VarIndex::x(i, j, mu, nu)) == layout.id(VarIndex::x(j, i, nu, mu)));
                        CHECK(VarIndex::x(i, j, mu, nu).i < VarIndex::x(i, j, mu, nu).j);
                    }
    CHECK(to_string(VarIndex::x(2, 1, 3, 1)) == "x_1_2_1_3");
    CHECK(to_string(VarIndex::y(2, 3)) == "y_2_3");
    CHECK_THROWS_AS(VarIndex::x(1, 1, 1, 2), InvalidInstance);
    CHECK_THROWS_AS(VarIndex::x(1, 2, 2, 2), InvalidInstance);
    CHECK(! VariableLayout(2).contains(VarIndex::y(3, 1)));
    CHECK_THROWS_AS(build_base_system(0), InvalidInstance);
}

TEST_CASE("n = 1: a single row y_1_1 = 1")
{
    auto sys = build_base_system(1);
    REQUIRE(sys.rows().size() == 1);
    CHECK(sys.num_vars() == 1);
    CHECK(sys.rows()[0] == Equality{{Term{0, 1}}, 1});
    auto p = center_point(1);
    CHECK(p.value(VarIndex::y(1, 1)) == 1);
}

TEST_CASE("n = 2: ten rows, the six distinct ones as printed")
{
    auto sys = build_base_system(2);
    CHECK(sys.rows().size() == 10);
    auto distinct = sys.distinct_rows();
    REQUIRE(distinct.size() == 6);

    std::set<NamedRow> expected{
        {{{"x_1_2_1_2", 1}, {"y_2_2", -1}}, 0},
        {{{"x_1_2_2_1", 1}, {"y_2_1", -1}}, 0},
        {{{"x_1_2_2_1", 1}, {"y_1_2", -1}}, 0},     // x_2_1_1_2 = y_1_2
        {{{"x_1_2_1_2", 1}, {"y_1_1", -1}}, 0},     // x_2_1_2_1 = y_1_1
        {{{"y_1_1", 1}, {"y_1_2", 1}}, 1},
        {{{"y_2_1", 1}, {"y_2_2", 1}}, 1}
    };
    std::set<NamedRow> got;
    for (auto & row : distinct)
        got.insert(named(sys, row));
    CHECK(got == expected);
    CHECK(named_rows(sys) == expected);
}

TEST_CASE("n = 3: 39 rows over 27 variables, matching direct generation")
{
    for (int n = 3 ; n <= 5 ; ++n) {
        auto sys = build_base_system(n);
        auto reference = reference_rows(n);
        REQUIRE(sys.rows().size() == reference.size());
        for (std::size_t r = 0 ; r < reference.size() ; ++r)
            CHECK(named(sys, sys.rows()[r]) == reference[r]);
    }
    auto sys = build_base_system(3);
    CHECK(sys.rows().size() == 39);
    CHECK(sys.num_vars() == 27);
}

TEST_CASE("center point values")
{
    auto two = center_point(2);
    for (int k = 0 ; k < two.layout().size() ; ++k)
        CHECK(two[k] == Rational(1, 2));
    auto three = center_point(3);
    CHECK(three.value(VarIndex::y(2, 3)) == Rational(1, 3));
    CHECK(three.value(VarIndex::x(1, 3, 2, 1)) == Rational(1, 6));
}

TEST_CASE("grid points")
{
    auto swap = grid_to_point(VertexMap{{2, 1}});
    CHECK(swap.value(VarIndex::x(1, 2, 2, 1)) == 1);
    CHECK(swap.value(VarIndex::y(2, 1)) == 1);
    CHECK(swap.value(VarIndex::y(1, 2)) == 1);
    CHECK(swap.value(VarIndex::x(1, 2, 1, 2)) == 0);
    CHECK(swap.value(VarIndex::y(1, 1)) == 0);
    CHECK(swap.value(VarIndex::y(2, 2)) == 0);

    auto identity = grid_to_point(VertexMap::identity(2));
    CHECK(identity.value(VarIndex::y(1, 1)) == 1);
    CHECK(identity.value(VarIndex::y(2, 2)) == 1);
    CHECK(identity.value(VarIndex::x(1, 2, 1, 2)) == 1);
    CHECK(identity.value(VarIndex::x(1, 2, 2, 1)) == 0);

    CHECK_THROWS_AS(grid_to_point(VertexMap{{1, 1}}), InvalidInstance);

    for (int n = 1 ; n <= 5 ; ++n) {
        auto sys = build_base_system(n);
        std::vector<int> perm(n);
        for (int k = 0 ; k < n ; ++k)
            perm[k] = k + 1;
        do {
            auto point = grid_to_point(VertexMap{perm});
            CHECK(satisfies(sys, point));
            CHECK(point_to_grid(point) == VertexMap{perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CHECK(! point_to_grid(center_point(3)));
}

TEST_CASE("zero constraints of the worked instances")
{
    auto arc = parse_digraph("digraph 2\n1 2");
    auto reversed = parse_digraph("digraph 2\n2 1");
    auto loop = pad_pattern(parse_digraph("digraph 1\n1 1"), 2);

    // arc vs arc: the compatibility matrix rules out the identity only
    auto zeros = zero_constraints(build_compat(arc, reversed));
    CHECK(zeros == std::vector<VarIndex>{VarIndex::x(1, 2, 1, 2)});
    // and y_1_1, y_2_2 are pinned to zero by the aggregated system
    auto sys = aggregate(build_base_system(2), zeros);
    for (auto v : {VarIndex::y(1, 1), VarIndex::y(2, 2)}) {
        auto result = optimize(sys, Objective{Term{sys.layout().id(v), -1}});
        REQUIRE(result.status == OptResult::Status::Optimal);
        CHECK(result.value == 0);
        CHECK(verify_opt_result(sys, Objective{Term{sys.layout().id(v), -1}}, result));
    }

    // arc vs loop
    auto loop_zeros = zero_constraints(build_compat(arc, loop));
    CHECK(std::find(loop_zeros.begin(), loop_zeros.end(), VarIndex::y(1, 1)) != loop_zeros.end());
    CHECK(std::find(loop_zeros.begin(), loop_zeros.end(), VarIndex::y(1, 2)) != loop_zeros.end());
    auto loop_sys = aggregate(build_base_system(2), loop_zeros);
    CHECK(loop_sys.is_fixed(loop_sys.layout().id(VarIndex::y(1, 1))));
    CHECK(loop_sys.is_fixed(loop_sys.layout().id(VarIndex::y(1, 2))));

    CHECK(zero_constraints(CompatMatrix::all_allowed(3)).empty());
    CHECK(zero_constraints(build_compat(parse_digraph("digraph 2\n1 2\n2 1"), arc)).empty());

    // zeros come back sorted and never name a structural zero
    auto c = build_compat(random_digraph(4, Rational(1, 2), 1, 3), random_digraph(4, Rational(1, 2), 1, 4));
    auto z = zero_constraints(c);
    VariableLayout layout(4);
    for (std::size_t k = 1 ; k < z.size() ; ++k)
        CHECK(layout.id(z[k - 1]) < layout.id(z[k]));
    for (auto & v : z)
        CHECK(! c(v.i, v.j, v.mu, v.nu));
}

TEST_CASE("aggregate")
{
    auto base = build_base_system(2);
    CHECK(aggregate(base, {}) == base);
    auto sys = aggregate(base, {VarIndex::y(1, 1)}, {VarIndex::y(1, 2), VarIndex::y(1, 1)});
    CHECK(sys.rows() == base.rows());
    CHECK(sys.zero_fixed() == std::vector<VarIndex>{VarIndex::y(1, 1), VarIndex::y(1, 2)});
    CHECK_THROWS_AS(aggregate(base, {VarIndex::y(3, 1)}), InvalidInstance);
    CHECK_THROWS_AS(aggregate(base, {}, {VarIndex::x(1, 3, 1, 2)}), InvalidInstance);

    auto pinned = aggregate(base, {VarIndex::y(1, 1)});
    CHECK(! satisfies(pinned, grid_to_point(VertexMap::identity(2))));
    CHECK(satisfies(pinned, grid_to_point(VertexMap{{2, 1}})));
    CHECK(! satisfies(sys, grid_to_point(VertexMap{{2, 1}})));
}

TEST_CASE("add_row merges terms and rejects unknown ids")
{
    LinearSystem sys(2);
    sys.add_row({Term{3, 1}, Term{0, 2}, Term{3, -1}, Term{1, 0}}, 5);
    REQUIRE(sys.rows().size() == 1);
    CHECK(sys.rows()[0].terms == std::vector<Term>{Term{0, 2}});
    CHECK_THROWS_AS(sys.add_row({Term{6, 1}}, 0), InvalidInstance);
    CHECK_THROWS_AS(sys.add_row({Term{-1, 1}}, 0), InvalidInstance);
}

TEST_CASE("emit_lp output")
{
    auto one = emit_lp(build_base_system(1));
    auto parsed_one = parse_lp(one);
    REQUIRE(parsed_one.rows.size() == 1);
    CHECK(parsed_one.rows[0] == NamedRow{{{"y_1_1", 1}}, 1});
    CHECK(one.find(" c1: y_1_1 = 1\n") != std::string::npos);

    auto sys = aggregate(build_base_system(2), zero_constraints(build_compat(parse_digraph("digraph 2\n1 2"), parse_digraph("digraph 2\n2 1"))));
    auto text = emit_lp(sys);
    auto parsed = parse_lp(text);
    CHECK(parsed.rows.size() == 6);
    CHECK(parsed.bounds.size() == 6);
    CHECK(parsed.bounds["x_1_2_1_2"] == "= 0");
    CHECK(parsed.bounds["y_1_1"] == ">= 0");
    CHECK(emit_lp(sys) == text);
    CHECK(text.starts_with("\\ "));
    CHECK(text.ends_with("End\n"));
}

TEST_CASE("property: emitted LP text reads back to the same system")
{
    for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
        int n = 1 + static_cast<int>(seed % 4);
        auto c = build_compat(random_digraph(n, Rational(1, 2), 1, seed), random_digraph(n, Rational(1, 3), 1, seed + 50));
        auto sys = aggregate(build_base_system(n), zero_constraints(c));
        Objective objective;
        for (int k = 0 ; k < sys.num_vars() ; k += 3)
            objective.push_back(Term{k, Rational(static_cast<long>(k % 7) - 3, 1 + static_cast<long>(k % 4))});
        for (auto & t : objective)
            t.coef.canonicalize();

        auto parsed = parse_lp(emit_lp(sys, objective));

        std::set<NamedRow> rows(parsed.rows.begin(), parsed.rows.end());
        CHECK(rows.size() == parsed.rows.size());
        CHECK(rows == named_rows(sys));

        REQUIRE(parsed.bounds.size() == static_cast<std::size_t>(sys.num_vars()));
        for (int k = 0 ; k < sys.num_vars() ; ++k)
            CHECK(parsed.bounds[to_string(sys.layout().var(k))] == (sys.is_fixed(k) ? "= 0" : ">= 0"));

        std::map<std::string, Rational> expected_objective;
        for (auto & t : objective)
            if (t.coef != 0)
                expected_objective[to_string(sys.layout().var(t.var))] += t.coef;
        std::erase_if(parsed.objective, [] (auto & kv) { return kv.second == 0; });
        CHECK(parsed.objective == expected_objective);
    }
}

TEST_CASE("property: relabeling both graphs renames the aggregated system")
{
    for (std::uint64_t seed = 0 ; seed < 60 ; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        auto input = random_digraph(n, Rational(1, 2), 1, seed);
        auto pattern = random_digraph(n, Rational(1, 3), 1, seed + 1000);
        auto pi = random_permutation(n, seed + 1), sigma = random_permutation(n, seed + 2);

        auto sys = aggregate(build_base_system(n), zero_constraints(build_compat(input, pattern)));
        auto moved = aggregate(build_base_system(n), zero_constraints(build_compat(relabel(input, pi), relabel(pattern, sigma))));

        std::set<VarIndex> renamed_zeros;
        for (auto & v : sys.zero_fixed())
            renamed_zeros.insert(relabel_var(v, sigma, pi));
        auto moved_zeros = moved.zero_fixed();
        CHECK(renamed_zeros == std::set<VarIndex>(moved_zeros.begin(), moved_zeros.end()));

        std::set<NamedRow> renamed_rows;
        for (auto & row : sys.rows()) {
            NamedRow r;
            for (auto & t : row.terms)
                r.first[to_string(relabel_var(sys.layout().var(t.var), sigma, pi))] += t.coef;
            r.second = row.rhs;
            renamed_rows.insert(r);
        }
        CHECK(renamed_rows == named_rows(moved));
    }
}
