#ifndef SUBISO_COMPAT_HH
#define SUBISO_COMPAT_HH 1

#include <subiso/digraph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subiso
{
    /// Injective pattern-vertex -> input-vertex assignment.
    using SolutionGrid = VertexMap;

    /// The n^2 x n^2 box matrix of compatibility entries e(i, j, mu, nu): pattern
    /// vertices i, j may be sent to input vertices mu, nu respectively. Box
    /// (i, i) is diagonal and boxes (i, j), i != j, have a zero diagonal; set()
    /// refuses to break either shape rule, and keeps e(i,j,mu,nu) equal to
    /// e(j,i,nu,mu).
    class CompatMatrix
    {
        private:
            int _n;
            std::vector<std::uint8_t> _e;

            auto offset(int i, int j, int mu, int nu) const -> std::size_t;

        public:
            /// All-zero matrix of dimension n.
            explicit CompatMatrix(int n);

            /// Every structurally allowed entry set to 1.
            static auto all_allowed(int n) -> CompatMatrix;

            auto size() const noexcept -> int
            {
                return _n;
            }

            auto operator() (int i, int j, int mu, int nu) const -> bool
            {
                return _e[offset(i, j, mu, nu)];
            }

            /// Sets e(i,j,mu,nu) and its mirror e(j,i,nu,mu). Throws
            /// InvalidInstance when asked to set a structural zero to 1.
            auto set(int i, int j, int mu, int nu, bool value) -> void;

            static auto structurally_allowed(int i, int j, int mu, int nu) -> bool
            {
                return (i == j) == (mu == nu);
            }

            /// Number of 1 entries.
            auto count() const -> std::size_t;

            auto operator== (const CompatMatrix &) const -> bool = default;
    };

    /// Entries from the pairwise arc-count comparison of pattern against
    /// input. Both graphs must already have equal size (pad the pattern first).
    auto build_compat(const Digraph & input, const Digraph & pattern) -> CompatMatrix;

    /// The matrix holding exactly the entries of one grid.
    auto grid_to_compat(const SolutionGrid & grid) -> CompatMatrix;

    /// All solution grids in lexicographic order of the image vector, or the
    /// first `limit` of them. Above eight vertices a limit is required.
    auto enumerate_grids(const CompatMatrix & c, std::optional<std::size_t> limit = std::nullopt) -> std::vector<SolutionGrid>;

    /// True iff the grid selects only 1 entries.
    auto grid_in_compat(const CompatMatrix & c, const SolutionGrid & grid) -> bool;

    /// Path-consistency depletion: e(i,j,mu,nu) survives only if for every k
    /// some lambda has e(i,k,mu,lambda) and e(k,j,lambda,nu), repeated to a
    /// fixed point. Never removes an entry that lies on a solution grid.
    auto propagate(const CompatMatrix & c) -> CompatMatrix;

    /// Box layout, one text row per (i, mu), boxes separated by '|', box rows
    /// separated by dashed lines.
    auto render_boxes(const CompatMatrix & c) -> std::string;

    /// Reads back the layout produced by render_boxes (separators and
    /// whitespace ignored, 0/1 digits row-major). Mainly for test fixtures.
    auto parse_boxes(int n, const std::string & text) -> CompatMatrix;
}

#endif
