#pragma once

// Test-side helpers: small random instances and reference oracles written
// independently of the library's chain builder. They work on raw colour
// vectors (no relabelling, no rationals) and solve by value iteration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "dcolor/coloring.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/rng.hpp"

namespace testing {

using dcolor::Color;
using dcolor::Edge;
using dcolor::Graph;
using dcolor::Vertex;

inline Graph random_graph(std::size_t n, double p, dcolor::Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.uniform01() < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

// Colours are 1..D; index encodes them base D with vertex 0 least significant.
inline std::vector<Color> decode(std::size_t index, std::size_t n, Color d) {
    std::vector<Color> c(n);
    for (std::size_t v = 0; v < n; ++v) {
        c[v] = static_cast<Color>(index % d) + 1;
        index /= d;
    }
    return c;
}

inline std::size_t encode(const std::vector<Color>& c, Color d) {
    std::size_t index = 0;
    for (std::size_t v = c.size(); v-- > 0;) {
        index = index * d + (c[v] - 1);
    }
    return index;
}

inline bool conflicted_at(const Graph& g, const std::vector<Color>& c, Vertex v) {
    for (Vertex u : g.neighbors(v)) {
        if (c[u] == c[v]) {
            return true;
        }
    }
    return false;
}

inline std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

// Expected Step-3 draws of Decentralized Coloring from every colouring,
// uniform random conflicted vertex per step, by Gauss-Seidel sweeps.
inline std::vector<double> dc_values(const Graph& g, Color d) {
    const std::size_t n = g.size();
    const std::size_t states = power(d, n);
    std::vector<double> e(states, 0.0);
    for (int sweep = 0; sweep < 200000; ++sweep) {
        double change = 0.0;
        for (std::size_t s = 0; s < states; ++s) {
            auto c = decode(s, n, d);
            std::vector<Vertex> conflicted;
            for (Vertex v = 0; v < n; ++v) {
                if (conflicted_at(g, c, v)) {
                    conflicted.push_back(v);
                }
            }
            if (conflicted.empty()) {
                continue;
            }
            double acc = 0.0;
            for (Vertex v : conflicted) {
                const Color old = c[v];
                for (Color x = 1; x <= d; ++x) {
                    c[v] = x;
                    acc += e[encode(c, d)];
                }
                c[v] = old;
            }
            const double next = 1.0 + acc / static_cast<double>(conflicted.size() * d);
            change = std::max(change, std::fabs(next - e[s]));
            e[s] = next;
        }
        if (change < 1e-13) {
            break;
        }
    }
    return e;
}

inline double dc_random_start(const Graph& g, Color d) {
    const auto e = dc_values(g, d);
    return std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
}

// Expected Step-3 draws of the persistent process for one visit order,
// modelling every single draw as a chain step over (colouring, position).
inline std::vector<double> persistent_values(const Graph& g, Color d, const std::vector<Vertex>& order) {
    const std::size_t n = g.size();
    const std::size_t states = power(d, n);
    // value[pos][colouring]; pos == n is absorbing.
    std::vector<std::vector<double>> value(n + 1, std::vector<double>(states, 0.0));
    for (std::size_t pos = n; pos-- > 0;) {
        const Vertex v = order[pos];
        auto& here = value[pos];
        const auto& next = value[pos + 1];
        for (int sweep = 0; sweep < 200000; ++sweep) {
            double change = 0.0;
            for (std::size_t s = 0; s < states; ++s) {
                auto c = decode(s, n, d);
                double updated;
                if (!conflicted_at(g, c, v)) {
                    updated = next[s];
                } else {
                    double acc = 0.0;
                    for (Color x = 1; x <= d; ++x) {
                        c[v] = x;
                        const std::size_t t = encode(c, d);
                        acc += conflicted_at(g, c, v) ? here[t] : next[t];
                    }
                    updated = 1.0 + acc / d;
                }
                change = std::max(change, std::fabs(updated - here[s]));
                here[s] = updated;
            }
            if (change < 1e-13) {
                break;
            }
        }
    }
    return value[0];
}

inline double persistent_all_orders(const Graph& g, Color d, std::size_t start_index) {
    std::vector<Vertex> order(g.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    double sum = 0.0;
    std::size_t count = 0;
    do {
        sum += persistent_values(g, d, order)[start_index];
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return sum / static_cast<double>(count);
}

// Connected components of the monochromatic-edge subgraph, by DFS.
inline std::size_t phi_reference(const Graph& g, std::span<const Color> c) {
    std::vector<char> seen(g.size(), 0);
    std::size_t components = 0;
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++components;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (!seen[u] && c[u] == c[v]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

}  // namespace testing
