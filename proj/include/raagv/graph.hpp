#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace raagv {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Greatest breadth-first distance from a vertex, or unreachable when the
/// graph is disconnected.
class Eccentricity {
public:
    static constexpr Eccentricity unreachable() { return Eccentricity{}; }
    static constexpr Eccentricity finite(std::size_t d) { return Eccentricity{d}; }

    constexpr bool is_finite() const { return value_.has_value(); }
    constexpr std::size_t value() const { return value_.value(); }

    friend constexpr bool operator==(const Eccentricity&, const Eccentricity&) = default;

private:
    constexpr Eccentricity() = default;
    constexpr explicit Eccentricity(std::size_t d) : value_(d) {}
    std::optional<std::size_t> value_;
};

/// Finite simple graph on vertices 0..n-1 with a dense symmetric adjacency
/// matrix. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on loops or out-of-range endpoints. Duplicate and
    /// reversed edges collapse.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t order() const { return n_; }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
    std::size_t degree(Vertex v) const;
    VertexSet neighbors(Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph induced on `keep`; vertex i of the result is keep[i].
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t left, std::size_t right);

Eccentricity eccentricity(const Graph& g, Vertex v);

/// Vertices of eccentricity exactly one.
VertexSet universal_vertices(const Graph& g);

Graph complement(const Graph& g);

/// Components sorted internally and ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> s);

}  // namespace raagv
