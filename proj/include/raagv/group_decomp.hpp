#pragma once

#include <string>
#include <variant>
#include <vector>

#include "raagv/classifier.hpp"
#include "raagv/graph.hpp"
#include "raagv/partition.hpp"

namespace raagv {

/// Z^abelian_rank x F_{free_ranks[0]} x F_{free_ranks[1]} x ...
struct GroupDecomposition {
    std::size_t abelian_rank = 0;
    std::vector<std::size_t> free_ranks;

    friend bool operator==(const GroupDecomposition&, const GroupDecomposition&) = default;
};

/// Raw decomposition read off a commuting partition: the universal block
/// generates a free abelian factor, each independent part a free factor.
GroupDecomposition decompose(const CommutingPartition& p);

/// Folds F_1 into the abelian factor and sorts the free ranks descending.
GroupDecomposition canonical_form(GroupDecomposition d);

/// "Z^a x F_r x ...", omitting Z^0; "1" for the trivial group.
std::string to_string(const GroupDecomposition& d);

struct Embeddable {
    CommutingPartition partition;
    GroupDecomposition group;  // canonical form
};

struct NotEmbeddable {
    ForbiddenTriple witness;
};

using Verdict = std::variant<Embeddable, NotEmbeddable>;

inline bool embeds(const Verdict& v) { return std::holds_alternative<Embeddable>(v); }

/// Decides whether the graph group of g embeds in Thompson's group V. With
/// `cross_check` set, the greedy construction is run as well and any
/// disagreement with the complement recognizer throws std::logic_error.
Verdict verdict(const Graph& g, bool cross_check = false);

/// Presentation with generators x0..x{n-1} and one commutator relation per
/// edge, e.g. "⟨x0,x1,x2 | x0x1=x1x0⟩".
std::string emit_presentation(const Graph& g);

}  // namespace raagv
