#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>

#include "raagv/classifier.hpp"
#include "raagv/graph.hpp"
#include "raagv/partition.hpp"

namespace raagv {

/// Chooses the next pivot from the (nonempty, ascending) remaining set.
using PivotRule = std::function<Vertex(std::span<const Vertex> remaining)>;

PivotRule min_index_pivot();

/// Uniformly random pivot; the same seed gives the same sequence of choices.
PivotRule random_pivot(std::uint64_t seed);

/// Incremental state of the greedy construction. Starts with P_0 set to the
/// eccentricity-one vertices; every step picks a pivot w from the remaining
/// vertices and carves out the next part as the non-neighbours of w among
/// them, w included.
class GreedyPartitionBuilder {
public:
    explicit GreedyPartitionBuilder(const Graph& g);

    bool done() const { return remaining_.empty(); }

    /// Runs one step and returns the new part. Requires !done().
    const VertexSet& step(const PivotRule& rule);

    const VertexSet& assigned() const { return assigned_; }
    const VertexSet& remaining() const { return remaining_; }
    const std::vector<Vertex>& pivot_history() const { return pivots_; }

    /// Parts in discovery order; pivot_history()[k] generated parts()[k].
    const CommutingPartition& partial() const { return partial_; }

private:
    const Graph* g_;
    VertexSet assigned_;
    VertexSet remaining_;
    std::vector<Vertex> pivots_;
    CommutingPartition partial_;
};

struct Violation {
    enum class Kind {
        // p0 differs from the eccentricity-one set at vertex u
        P0Mismatch,
        // u and v share part block_u and are adjacent
        InternalEdge,
        // u in block_u and v in block_v (block_u < block_v) are not adjacent
        MissingCrossEdge,
    };

    Kind kind;
    Vertex u = 0;
    Vertex v = 0;
    // 0 denotes p0, k >= 1 denotes parts[k - 1]
    std::size_t block_u = 0;
    std::size_t block_v = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Raised when the blocks do not partition the vertex set at all.
class PartitionStructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// First violated commuting-partition condition, scanning blocks ascending
/// and vertices ascending; nullopt when p is a commuting partition of g.
std::optional<Violation> validate_partition(const Graph& g, const CommutingPartition& p);

using PartitionResult = std::variant<CommutingPartition, ForbiddenTriple>;

/// Greedy construction followed by validation. On failure the witness is read
/// off the first violation and the pivot that produced the offending part.
PartitionResult greedy_partition(const Graph& g, const PivotRule& rule = min_index_pivot());

/// Complement-component partition, or the lexicographic witness.
PartitionResult canonical_partition(const Graph& g);

}  // namespace raagv
