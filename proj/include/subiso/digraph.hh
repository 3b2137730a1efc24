#ifndef SUBISO_DIGRAPH_HH
#define SUBISO_DIGRAPH_HH 1

#include <subiso/rational.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subiso
{
    /// Multi-digraph with multi-loops, stored as a dense n x n matrix of arc
    /// multiplicities. Vertices are numbered 1..n throughout the library.
    class Digraph
    {
        private:
            int _n;
            std::vector<unsigned> _adj;

        public:
            explicit Digraph(int n);

            auto size() const noexcept -> int
            {
                return _n;
            }

            auto arcs(int from, int to) const -> unsigned;
            auto set_arcs(int from, int to, unsigned multiplicity) -> void;
            auto add_arcs(int from, int to, unsigned multiplicity = 1) -> void;

            auto operator== (const Digraph &) const -> bool = default;
    };

    /// Vertex map on 1..n: at(k) is the image of k. Used both for relabelings
    /// and for pattern -> input assignments.
    class VertexMap
    {
        private:
            std::vector<int> _image;

        public:
            VertexMap() = default;
            explicit VertexMap(std::vector<int> image);

            static auto identity(int n) -> VertexMap;

            auto size() const noexcept -> int
            {
                return static_cast<int>(_image.size());
            }

            auto at(int k) const -> int
            {
                return _image.at(k - 1);
            }

            auto images() const noexcept -> const std::vector<int> &
            {
                return _image;
            }

            /// True iff every image lies in [1, n] and no two coincide.
            auto is_bijection() const -> bool;

            auto inverse() const -> VertexMap;

            auto operator== (const VertexMap &) const -> bool = default;
            auto operator<=> (const VertexMap &) const = default;
    };

    auto to_string(const VertexMap & m) -> std::string;

    /// Arc-weighted digraph; an absent weight marks a non-adjacent ordered pair.
    class WeightedDigraph
    {
        private:
            int _n;
            std::vector<std::optional<Rational>> _weight;

        public:
            explicit WeightedDigraph(int n);

            auto size() const noexcept -> int
            {
                return _n;
            }

            auto weight(int from, int to) const -> const std::optional<Rational> &;
            auto set_weight(int from, int to, std::optional<Rational> w) -> void;

            /// Unweighted support: one arc wherever a weight is present.
            auto support() const -> Digraph;

            auto operator== (const WeightedDigraph &) const -> bool = default;
    };

    /// Reads the `digraph <n>` text format. Throws ParseError.
    auto parse_digraph(std::string_view text) -> Digraph;
    auto serialize_digraph(const Digraph & d) -> std::string;

    /// Reads the `wdigraph <n>` text format. Throws ParseError.
    auto parse_weighted_digraph(std::string_view text) -> WeightedDigraph;
    auto serialize_weighted_digraph(const WeightedDigraph & d) -> std::string;

    /// Adds isolated vertices so the result has target_n vertices. Throws
    /// InvalidInstance if target_n < pattern.size().
    auto pad_pattern(const Digraph & pattern, int target_n) -> Digraph;

    /// result.arcs(perm(u), perm(v)) == d.arcs(u, v).
    auto relabel(const Digraph & d, const VertexMap & perm) -> Digraph;

    /// Deterministic random multi-digraph. The generator is std::mt19937_64
    /// seeded with `seed`; each ordered pair (u, v), row-major and including
    /// loops, consumes one 64-bit draw r and receives arcs iff
    /// r < arc_probability * 2^64. Multiplicity is then 1 + (unbiased draw in
    /// [0, max_multiplicity)) using rejection sampling on further 64-bit draws,
    /// skipped when max_multiplicity == 1. Reproducible on every platform.
    auto random_digraph(int n, const Rational & arc_probability, unsigned max_multiplicity, std::uint64_t seed) -> Digraph;

    /// Uniform random permutation of 1..n (Fisher-Yates over mt19937_64 with
    /// the same rejection sampler).
    auto random_permutation(int n, std::uint64_t seed) -> VertexMap;
}

#endif
