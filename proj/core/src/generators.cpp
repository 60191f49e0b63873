#include "dcolor/generators.hpp"

#include <algorithm>
#include <vector>

namespace dcolor {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw GraphError(GraphError::Kind::InvalidParameter, what);
    }
}

}  // namespace

Graph gen_clique(std::size_t n) {
    require(n >= 1, "clique needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    std::vector<Edge> edges;
    edges.reserve(a * b);
    for (Vertex u = 0; u < a; ++u) {
        for (std::size_t j = 0; j < b; ++j) {
            edges.emplace_back(u, static_cast<Vertex>(a + j));
        }
    }
    return Graph::from_edge_list(a + b, edges);
}

Graph gen_cycle(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph::from_edge_list(n, edges);
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    require(n >= 1, "G(n, p) needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "G(n, p) needs 0 <= p <= 1");
    Rng rng(seed);
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

Graph gen_bounded_degree(std::size_t n, double p, std::size_t max_degree, Rng& rng) {
    require(n >= 1, "bounded-degree graph needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "bounded-degree graph needs 0 <= p <= 1");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    for (std::size_t i = pairs.size(); i > 1; --i) {
        std::swap(pairs[i - 1], pairs[rng.uniform(i)]);
    }
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) {
        if (degree[u] < max_degree && degree[v] < max_degree && rng.uniform01() < p) {
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph::from_edge_list(n, edges);
}

Fig2Gadget gen_fig2_like() {
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}};
    return Fig2Gadget{
        Graph::from_edge_list(5, edges),
        Coloring({kGreen, kGreen, kRed, kBlue, kGreen}, 4),
        0,
    };
}

}  // namespace dcolor
