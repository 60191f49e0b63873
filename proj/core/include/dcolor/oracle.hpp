#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <variant>

#include "dcolor/adversary.hpp"
#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/exact.hpp"
#include "dcolor/graph.hpp"

namespace dcolor {

// Size guard exceeded or a precondition on the instance failed. Never
// silently truncated.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    // D^n cap on the raw colouring space.
    std::uint64_t max_colorings = 2'000'000;
    // Canonical chain states solved by exact rational elimination; larger
    // chains go through the certified floating-point solve.
    std::size_t exact_state_limit = 1500;
    // Absolute error budget for the certified path.
    double error_budget = 1e-12;
    // n! guard for permutation enumeration.
    std::size_t max_persistent_vertices = 8;
};

struct ChainReport {
    std::size_t states = 0;
    bool exact = true;
    double error_bound = 0.0;
};

// H_k = sum_{i=1}^k 1/i, H_0 = 0.
ExactValue harmonic(std::uint64_t k);

// Expected uniform draws from D coupons until k distinct ones are seen,
// including the first draw: sum_{i=0}^{k-1} D / (D - i).
ExactValue expected_draws_to_collect(std::uint64_t palette_size, std::uint64_t k);

// Orders the Decentralized Coloring chain can be solved under.
using DcOracleOrder = std::variant<UniformRandomOrder, MimicPersistent>;

// Expected Step-3 draws of Decentralized Coloring until absorption, from the
// absorbing Markov chain over colourings (reduced modulo palette
// relabelling). Random start averages over all D^n initial colourings.
ExactValue exact_expected_recolorings_dc(const Graph& g, Color palette_size, const StartPolicy& start,
                                         const DcOracleOrder& order, const OracleLimits& limits = {},
                                         ChainReport* report = nullptr);

struct AllPermutationsAverage {};
using PersistentOracleOrder = std::variant<AllPermutationsAverage, FixedPermutation>;

// Expected Step-3 draws of Persistent Decentralized Coloring by enumerating
// visit orders: a conflicted vertex with f free colours costs D/f draws in
// expectation and lands uniformly on one of the f free colours.
ExactValue exact_expected_recolorings_persistent(const Graph& g, Color palette_size,
                                                 const StartPolicy& start,
                                                 const PersistentOracleOrder& order,
                                                 const OracleLimits& limits = {});

// (1/D) * sum_x [Phi(c with v -> x) - Phi(c)], by full recomputation.
// v must be conflicted.
ExactValue exact_expected_phi_delta(const Graph& g, const Coloring& c, Vertex v);

struct ConflictDeltas {
    ExactValue phi;
    ExactValue conflicted_vertices;
    ExactValue conflicted_edges;
};

ConflictDeltas exact_expected_conflict_deltas(const Graph& g, const Coloring& c, Vertex v);

// The gadget delta table for the conflicted-vertex count: D = 4, staying
// put changes nothing, one other colour lowers the count by 1 and the two
// remaining colours raise it by 1. v must be conflicted.
bool verify_fig2_deltas(const Graph& g, const Coloring& c, Vertex v);

}  // namespace dcolor
