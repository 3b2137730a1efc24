#include <subiso/digraph.hh>
#include <subiso/errors.hh>
#include <subiso/random.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace subiso
{
    auto parse_rational(string_view text) -> Rational
    {
        if (text.empty())
            throw std::invalid_argument("empty rational");
        auto body = text;
        if (body.front() == '-' || body.front() == '+')
            body.remove_prefix(1);
        auto slash = body.find('/');
        auto digits_ok = [] (string_view s) {
            return ! s.empty() && std::all_of(s.begin(), s.end(), [] (char c) { return c >= '0' && c <= '9'; });
        };
        if (slash == string_view::npos ? ! digits_ok(body) : ! (digits_ok(body.substr(0, slash)) && digits_ok(body.substr(slash + 1))))
            throw std::invalid_argument("malformed rational '" + string(text) + "'");

        string s(text.front() == '+' ? text.substr(1) : text);
        Rational q;
        if (0 != q.set_str(s, 10))
            throw std::invalid_argument("malformed rational '" + string(text) + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("zero denominator in '" + string(text) + "'");
        q.canonicalize();
        return q;
    }

    auto to_string(const Rational & q) -> string
    {
        Rational canonical = q;
        canonical.canonicalize();
        return canonical.get_str();
    }

    auto uniform_below(std::mt19937_64 & engine, uint64_t bound) -> uint64_t
    {
        if (bound == 0)
            throw std::invalid_argument("uniform_below: empty range");
        // 2^64 mod bound; values below it would bias the remainder
        uint64_t threshold = (0 - bound) % bound;
        uint64_t r;
        do
            r = engine();
        while (r < threshold);
        return r % bound;
    }

    auto bernoulli(std::mt19937_64 & engine, const Rational & p) -> bool
    {
        uint64_t r = engine();
        if (p <= 0)
            return false;
        if (p >= 1)
            return true;
        // r < p * 2^64  <=>  r * den < num * 2^64
        mpz_class lhs = mpz_class(static_cast<unsigned long>(r >> 32)) << 32;
        lhs += static_cast<unsigned long>(r & 0xffffffffu);
        lhs *= p.get_den();
        mpz_class rhs = mpz_class(p.get_num()) << 64;
        return lhs < rhs;
    }

    Digraph::Digraph(int n) :
        _n(n)
    {
        if (n < 1)
            throw InvalidInstance("digraph needs at least one vertex");
        _adj.assign(static_cast<std::size_t>(n) * n, 0);
    }

    auto Digraph::arcs(int from, int to) const -> unsigned
    {
        if (from < 1 || from > _n || to < 1 || to > _n)
            throw std::out_of_range("vertex out of range");
        return _adj[(from - 1) * _n + (to - 1)];
    }

    auto Digraph::set_arcs(int from, int to, unsigned multiplicity) -> void
    {
        if (from < 1 || from > _n || to < 1 || to > _n)
            throw std::out_of_range("vertex out of range");
        _adj[(from - 1) * _n + (to - 1)] = multiplicity;
    }

    auto Digraph::add_arcs(int from, int to, unsigned multiplicity) -> void
    {
        set_arcs(from, to, arcs(from, to) + multiplicity);
    }

    VertexMap::VertexMap(vector<int> image) :
        _image(std::move(image))
    {
    }

    auto VertexMap::identity(int n) -> VertexMap
    {
        vector<int> image(n);
        std::iota(image.begin(), image.end(), 1);
        return VertexMap{std::move(image)};
    }

    auto VertexMap::is_bijection() const -> bool
    {
        int n = size();
        vector<bool> seen(n + 1, false);
        for (int v : _image) {
            if (v < 1 || v > n || seen[v])
                return false;
            seen[v] = true;
        }
        return true;
    }

    auto VertexMap::inverse() const -> VertexMap
    {
        if (! is_bijection())
            throw InvalidInstance("inverse of a non-bijective vertex map");
        vector<int> inv(_image.size());
        for (int k = 1 ; k <= size() ; ++k)
            inv[at(k) - 1] = k;
        return VertexMap{std::move(inv)};
    }

    auto to_string(const VertexMap & m) -> string
    {
        string result = "(";
        for (int k = 1 ; k <= m.size() ; ++k) {
            if (k > 1)
                result += ",";
            result += std::to_string(m.at(k));
        }
        return result + ")";
    }

    WeightedDigraph::WeightedDigraph(int n) :
        _n(n)
    {
        if (n < 1)
            throw InvalidInstance("digraph needs at least one vertex");
        _weight.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    }

    auto WeightedDigraph::weight(int from, int to) const -> const optional<Rational> &
    {
        if (from < 1 || from > _n || to < 1 || to > _n)
            throw std::out_of_range("vertex out of range");
        return _weight[(from - 1) * _n + (to - 1)];
    }

    auto WeightedDigraph::set_weight(int from, int to, optional<Rational> w) -> void
    {
        if (from < 1 || from > _n || to < 1 || to > _n)
            throw std::out_of_range("vertex out of range");
        _weight[(from - 1) * _n + (to - 1)] = std::move(w);
    }

    auto WeightedDigraph::support() const -> Digraph
    {
        Digraph d(_n);
        for (int u = 1 ; u <= _n ; ++u)
            for (int v = 1 ; v <= _n ; ++v)
                if (weight(u, v))
                    d.set_arcs(u, v, 1);
        return d;
    }

    namespace
    {
        auto split_words(string_view line) -> vector<string>
        {
            vector<string> words;
            std::istringstream in{string(line)};
            string w;
            while (in >> w)
                words.push_back(w);
            return words;
        }

        auto parse_int(const string & word, int line, const char * what) -> long long
        {
            if (word.empty() || ! std::all_of(word.begin() + (word[0] == '-' ? 1 : 0), word.end(), [] (char c) { return c >= '0' && c <= '9'; })
                    || (word[0] == '-' && word.size() == 1))
                throw ParseError(line, string("expected integer ") + what + ", got '" + word + "'");
            try {
                return std::stoll(word);
            }
            catch (const std::out_of_range &) {
                throw ParseError(line, string(what) + " out of range: '" + word + "'");
            }
        }

        /// Calls on_header(n) once, then on_body(words, line) for every
        /// remaining content line. Blank lines and '#' comments are skipped.
        template <typename Header, typename Body>
        auto scan_graph_text(string_view text, string_view keyword, Header && on_header, Body && on_body) -> void
        {
            std::istringstream in{string(text)};
            string raw;
            int line_no = 0;
            bool have_header = false;
            while (std::getline(in, raw)) {
                ++line_no;
                if (! raw.empty() && raw.back() == '\r')
                    raw.pop_back();
                auto words = split_words(raw);
                if (words.empty() || words[0][0] == '#')
                    continue;

                if (! have_header) {
                    if (words.size() != 2 || words[0] != keyword)
                        throw ParseError(line_no, "expected header '" + string(keyword) + " <n>'");
                    auto n = parse_int(words[1], line_no, "vertex count");
                    if (n < 1 || n > 100000)
                        throw ParseError(line_no, "vertex count must be positive");
                    on_header(static_cast<int>(n));
                    have_header = true;
                    continue;
                }

                on_body(words, line_no);
            }
            if (! have_header)
                throw ParseError(line_no + 1, "missing header '" + string(keyword) + " <n>'");
        }
    }

    auto parse_digraph(string_view text) -> Digraph
    {
        optional<Digraph> result;
        scan_graph_text(text, "digraph",
                [&] (int n) { result.emplace(n); },
                [&] (const vector<string> & words, int line) {
                    if (words.size() != 2 && words.size() != 3)
                        throw ParseError(line, "expected '<u> <v>' or '<u> <v> <mult>'");
                    auto u = parse_int(words[0], line, "vertex");
                    auto v = parse_int(words[1], line, "vertex");
                    long long mult = words.size() == 3 ? parse_int(words[2], line, "multiplicity") : 1;
                    int n = result->size();
                    if (u < 1 || u > n || v < 1 || v > n)
                        throw ParseError(line, "vertex index out of range [1," + std::to_string(n) + "]");
                    if (mult < 0)
                        throw ParseError(line, "negative multiplicity");
                    if (mult + result->arcs(u, v) > std::numeric_limits<unsigned>::max())
                        throw ParseError(line, "multiplicity overflow");
                    result->add_arcs(u, v, static_cast<unsigned>(mult));
                });
        return std::move(*result);
    }

    auto serialize_digraph(const Digraph & d) -> string
    {
        string out = "digraph " + std::to_string(d.size()) + "\n";
        for (int u = 1 ; u <= d.size() ; ++u)
            for (int v = 1 ; v <= d.size() ; ++v)
                if (auto m = d.arcs(u, v) ; m == 1)
                    out += std::to_string(u) + " " + std::to_string(v) + "\n";
                else if (m > 1)
                    out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(m) + "\n";
        return out;
    }

    auto parse_weighted_digraph(string_view text) -> WeightedDigraph
    {
        optional<WeightedDigraph> result;
        scan_graph_text(text, "wdigraph",
                [&] (int n) { result.emplace(n); },
                [&] (const vector<string> & words, int line) {
                    if (words.size() != 3)
                        throw ParseError(line, "expected '<u> <v> <weight>'");
                    auto u = parse_int(words[0], line, "vertex");
                    auto v = parse_int(words[1], line, "vertex");
                    int n = result->size();
                    if (u < 1 || u > n || v < 1 || v > n)
                        throw ParseError(line, "vertex index out of range [1," + std::to_string(n) + "]");
                    if (result->weight(u, v))
                        throw ParseError(line, "duplicate arc " + words[0] + " " + words[1]);
                    try {
                        result->set_weight(u, v, parse_rational(words[2]));
                    }
                    catch (const std::invalid_argument & e) {
                        throw ParseError(line, e.what());
                    }
                });
        return std::move(*result);
    }

    auto serialize_weighted_digraph(const WeightedDigraph & d) -> string
    {
        string out = "wdigraph " + std::to_string(d.size()) + "\n";
        for (int u = 1 ; u <= d.size() ; ++u)
            for (int v = 1 ; v <= d.size() ; ++v)
                if (auto & w = d.weight(u, v))
                    out += std::to_string(u) + " " + std::to_string(v) + " " + to_string(*w) + "\n";
        return out;
    }

    auto pad_pattern(const Digraph & pattern, int target_n) -> Digraph
    {
        if (target_n < pattern.size())
            throw InvalidInstance("pattern has " + std::to_string(pattern.size()) + " vertices, more than the target "
                    + std::to_string(target_n));
        Digraph result(target_n);
        for (int u = 1 ; u <= pattern.size() ; ++u)
            for (int v = 1 ; v <= pattern.size() ; ++v)
                result.set_arcs(u, v, pattern.arcs(u, v));
        return result;
    }

    auto relabel(const Digraph & d, const VertexMap & perm) -> Digraph
    {
        if (perm.size() != d.size() || ! perm.is_bijection())
            throw InvalidInstance("relabeling is not a bijection on the vertex set");
        Digraph result(d.size());
        for (int u = 1 ; u <= d.size() ; ++u)
            for (int v = 1 ; v <= d.size() ; ++v)
                result.set_arcs(perm.at(u), perm.at(v), d.arcs(u, v));
        return result;
    }

    auto random_digraph(int n, const Rational & arc_probability, unsigned max_multiplicity, uint64_t seed) -> Digraph
    {
        if (arc_probability < 0 || arc_probability > 1)
            throw std::invalid_argument("arc probability must lie in [0,1]");
        if (max_multiplicity < 1)
            throw std::invalid_argument("max multiplicity must be at least 1");
        Digraph result(n);
        std::mt19937_64 engine(seed);
        for (int u = 1 ; u <= n ; ++u)
            for (int v = 1 ; v <= n ; ++v)
                if (bernoulli(engine, arc_probability))
                    result.set_arcs(u, v, max_multiplicity == 1 ? 1 : 1 + static_cast<unsigned>(uniform_below(engine, max_multiplicity)));
        return result;
    }

    auto random_permutation(int n, uint64_t seed) -> VertexMap
    {
        std::mt19937_64 engine(seed);
        vector<int> image(n);
        std::iota(image.begin(), image.end(), 1);
        for (int k = n - 1 ; k > 0 ; --k)
            std::swap(image[k], image[uniform_below(engine, static_cast<uint64_t>(k) + 1)]);
        return VertexMap{std::move(image)};
    }
}
