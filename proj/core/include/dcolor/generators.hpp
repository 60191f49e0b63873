#pragma once

#include <cstddef>
#include <cstdint>

#include "dcolor/coloring.hpp"
#include "dcolor/graph.hpp"

namespace dcolor {

Graph gen_clique(std::size_t n);

// Left side 0..a-1, right side a..a+b-1.
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

Graph gen_cycle(std::size_t n);

// G(n, p): pairs (u, v), u < v, visited lexicographically; each kept when a
// uniform01 draw from Rng(seed) is below p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// G(n, p) restricted to max degree <= max_degree: pairs visited in a
// seeded random order, kept with probability p while both ends have room.
Graph gen_bounded_degree(std::size_t n, double p, std::size_t max_degree, Rng& rng);

// Five-vertex instance where a uniform recolour of the focus vertex raises
// the expected number of conflicted vertices. Palette {R,G,B,Y} = {1,2,3,4}.
//
//   ids   0=v(G)  1=u(G)  2=r(R)  3=b(B)  4=w(G)
//   edges v-u v-r v-b u-w
struct Fig2Gadget {
    Graph graph;
    Coloring coloring;
    Vertex focus;
};

inline constexpr Color kRed = 1;
inline constexpr Color kGreen = 2;
inline constexpr Color kBlue = 3;
inline constexpr Color kYellow = 4;

Fig2Gadget gen_fig2_like();

}  // namespace dcolor
