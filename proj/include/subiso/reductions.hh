#ifndef SUBISO_REDUCTIONS_HH
#define SUBISO_REDUCTIONS_HH 1

#include <subiso/cnf.hh>
#include <subiso/digraph.hh>
#include <subiso/lp_model.hh>

#include <vector>

namespace subiso
{
    /// The directed n-cycle 1 -> 2 -> ... -> n -> 1. Throws InvalidInstance
    /// for n < 2.
    auto hamiltonian_pattern(int n) -> Digraph;

    struct TspModel
    {
        Digraph input;
        Digraph pattern;
        LinearSystem system;
        Objective objective;
    };

    /// Tour program over the support of g against the n-cycle pattern.
    ///
    /// Objective normalization: each pattern arc i -> j contributes
    /// sum_{mu != nu} w(mu, nu) x(i, j, mu, nu). A canonical variable
    /// x(i, j, mu, nu), i < j, therefore collects w(mu, nu) when the pattern
    /// has i -> j and w(nu, mu) when it has j -> i. At the point of a grid the
    /// objective equals the weight of the tour the grid traces, counting each
    /// tour arc exactly once. Absent weights never appear: their variables are
    /// zero-fixed by the compatibility constraints.
    auto tsp_model(const WeightedDigraph & g) -> TspModel;

    struct SatInstance
    {
        Digraph input;
        Digraph pattern;
        std::vector<VarIndex> extra_zeros;
        /// clause_of[p - 1] is the 0-based clause owning literal slot p
        std::vector<int> clause_of;
    };

    /// Slot p = (clause i, position a) in clause-major order. Input arcs join
    /// every pair of slots (loops included) except complementary literals.
    /// The pattern joins the first slots of every two clauses, loops
    /// included, and has no other arcs. Every pattern slot is confined to its own clause's slots
    /// by zero-fixing y(p, nu) for nu outside that clause. Throws
    /// InvalidInstance for a CNF without clauses.
    auto sat_to_subgi(const CNF & f) -> SatInstance;

    /// The aggregated system of a SAT instance, confinement included.
    auto sat_system(const SatInstance & instance) -> LinearSystem;

    /// The aggregated system of a subgraph instance (pattern padded).
    auto subgi_system(const Digraph & input, const Digraph & pattern) -> LinearSystem;

    /// Random complete weighted digraph without loops, weights uniform
    /// integers in [low, high].
    auto random_complete_weighted(int n, int low, int high, std::uint64_t seed) -> WeightedDigraph;
}

#endif
