#include "raagv/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace raagv {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n * n, 0) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) {
            throw GraphError("loop at vertex " + std::to_string(u));
        }
        if (!adj_[u * n_ + v]) {
            adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
            ++edge_count_;
        }
    }
}

std::size_t Graph::degree(Vertex v) const {
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet out;
    for (Vertex u = 0; u < n_; ++u) {
        if (adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= n_) throw GraphError("induced: vertex out of range");
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (keep[i] == keep[j]) throw GraphError("induced: repeated vertex");
            if (adjacent(keep[i], keep[j])) {
                h.adj_[i * h.n_ + j] = h.adj_[j * h.n_ + i] = 1;
                ++h.edge_count_;
            }
        }
    }
    return h;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    if (n >= 3) {
        for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = 0; v < right; ++v) e.emplace_back(u, left + v);
    return Graph(left + right, e);
}

Eccentricity eccentricity(const Graph& g, Vertex v) {
    const std::size_t n = g.order();
    if (v >= n) throw GraphError("eccentricity: vertex out of range");
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n, unseen);
    std::queue<Vertex> frontier;
    dist[v] = 0;
    frontier.push(v);
    std::size_t reached = 1;
    std::size_t far = 0;
    while (!frontier.empty()) {
        const Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w = 0; w < n; ++w) {
            if (dist[w] == unseen && g.adjacent(u, w)) {
                dist[w] = dist[u] + 1;
                far = std::max(far, dist[w]);
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached < n) return Eccentricity::unreachable();
    return Eccentricity::finite(far);
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    const std::size_t n = g.order();
    if (n < 2) return out;
    for (Vertex v = 0; v < n; ++v) {
        // eccentricity one is exactly adjacency to every other vertex
        if (g.degree(v) == n - 1) out.push_back(v);
    }
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(n, e);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w = 0; w < n; ++w) {
                if (!seen[w] && g.adjacent(u, w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

}  // namespace raagv
