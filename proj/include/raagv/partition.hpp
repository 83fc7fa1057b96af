#pragma once

#include <vector>

#include "raagv/graph.hpp"

namespace raagv {

/// The block P_0 of universal vertices plus the independent parts P_1..P_n.
/// Every block is sorted ascending.
struct CommutingPartition {
    VertexSet p0;
    std::vector<VertexSet> parts;

    friend bool operator==(const CommutingPartition&, const CommutingPartition&) = default;
};

/// Sorts every block and orders the parts by minimum vertex, so that two
/// partitions with the same unordered family compare equal.
CommutingPartition normalized(CommutingPartition p);

}  // namespace raagv
