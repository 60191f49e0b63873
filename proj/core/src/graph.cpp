#include "dcolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dcolor {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) {
        throw GraphError(GraphError::Kind::InvalidParameter, "graph must have at least one vertex");
    }
    std::vector<std::size_t> degree(n, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            std::ostringstream msg;
            msg << "vertex id out of range in edge (" << u << ", " << v << ") for n = " << n;
            throw GraphError(GraphError::Kind::VertexOutOfRange, msg.str());
        }
        if (u == v) {
            throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        }
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    }
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            std::ostringstream msg;
            msg << "duplicate edge (" << std::min<std::size_t>(v, *dup) << ", "
                << std::max<std::size_t>(v, *dup) << ")";
            throw GraphError(GraphError::Kind::DuplicateEdge, msg.str());
        }
        g.max_degree_ = std::max(g.max_degree_, degree[v]);
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void validate(const Graph& g) {
    if (g.size() == 0) {
        throw std::logic_error("graph has no vertices");
    }
    std::size_t max_deg = 0;
    std::size_t half_edges = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        auto nb = g.neighbors(v);
        half_edges += nb.size();
        max_deg = std::max(max_deg, nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] >= g.size()) {
                throw std::logic_error("neighbour id out of range at vertex " + std::to_string(v));
            }
            if (nb[i] == v) {
                throw std::logic_error("self-loop at vertex " + std::to_string(v));
            }
            if (i > 0 && nb[i - 1] >= nb[i]) {
                throw std::logic_error("adjacency of vertex " + std::to_string(v) +
                                       " is unsorted or has duplicates");
            }
            if (!g.adjacent(nb[i], v)) {
                throw std::logic_error("asymmetric edge at vertex " + std::to_string(v));
            }
        }
    }
    if (max_deg != g.max_degree()) {
        throw std::logic_error("cached max degree is stale");
    }
    if (half_edges != 2 * g.edge_count()) {
        throw std::logic_error("edge count mismatch");
    }
}

Graph read_graph(std::istream& in) {
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m) || n < 1 || m < 0) {
        throw GraphError(GraphError::Kind::Parse, "graph header must be 'n m' with n >= 1, m >= 0");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) {
            throw GraphError(GraphError::Kind::Parse,
                             "expected " + std::to_string(m) + " edges, read " + std::to_string(i));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "edge " + std::to_string(i) + " has an out-of-range endpoint");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write graph file '" + path + "'");
    }
    write_graph(out, g);
}

}  // namespace dcolor
