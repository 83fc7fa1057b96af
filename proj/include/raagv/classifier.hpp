#pragma once

#include <optional>

#include "raagv/graph.hpp"
#include "raagv/partition.hpp"

namespace raagv {

/// Three distinct vertices with (a, b) an edge and c adjacent to neither.
/// This is the induced pattern of the graph of Z^2 * Z.
struct ForbiddenTriple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend auto operator<=>(const ForbiddenTriple&, const ForbiddenTriple&) = default;
};

/// Builds a triple with a < b.
ForbiddenTriple make_triple(Vertex edge_u, Vertex edge_v, Vertex isolated);

/// True iff t satisfies every ForbiddenTriple invariant against g.
bool is_valid_triple(const Graph& g, const ForbiddenTriple& t);

/// Lexicographically least forbidden triple, scanning edges (a, b) with
/// a < b in order and then c ascending. Empty iff g has none.
std::optional<ForbiddenTriple> find_forbidden_triple(const Graph& g);

bool is_nb(const Graph& g);

/// Recognizes the class from the complement side: g has no forbidden triple
/// iff every connected component of its complement is a clique. Returns the
/// canonical commuting partition on success.
std::optional<CommutingPartition> recognize_multipartite(const Graph& g);

}  // namespace raagv
