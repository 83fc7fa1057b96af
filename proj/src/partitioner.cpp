#include "raagv/partitioner.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

namespace raagv {

PivotRule min_index_pivot() {
    return [](std::span<const Vertex> remaining) { return remaining.front(); };
}

PivotRule random_pivot(std::uint64_t seed) {
    auto engine = std::make_shared<std::mt19937_64>(seed);
    return [engine](std::span<const Vertex> remaining) {
        std::uniform_int_distribution<std::size_t> pick(0, remaining.size() - 1);
        return remaining[pick(*engine)];
    };
}

GreedyPartitionBuilder::GreedyPartitionBuilder(const Graph& g) : g_(&g) {
    partial_.p0 = universal_vertices(g);
    assigned_ = partial_.p0;
    std::vector<bool> in_p0(g.order(), false);
    for (Vertex v : partial_.p0) in_p0[v] = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_p0[v]) remaining_.push_back(v);
    }
}

const VertexSet& GreedyPartitionBuilder::step(const PivotRule& rule) {
    if (done()) throw std::logic_error("GreedyPartitionBuilder::step on exhausted state");
    const Vertex w = rule(remaining_);
    if (!std::binary_search(remaining_.begin(), remaining_.end(), w)) {
        throw std::logic_error("pivot rule returned a vertex outside the remaining set");
    }
    VertexSet part;
    VertexSet rest;
    for (Vertex v : remaining_) {
        // w lands in its own part since the graph has no loops
        if (!g_->adjacent(w, v)) {
            part.push_back(v);
        } else {
            rest.push_back(v);
        }
    }
    remaining_ = std::move(rest);
    VertexSet merged;
    merged.reserve(assigned_.size() + part.size());
    std::merge(assigned_.begin(), assigned_.end(), part.begin(), part.end(), std::back_inserter(merged));
    assigned_ = std::move(merged);
    pivots_.push_back(w);
    partial_.parts.push_back(std::move(part));
    return partial_.parts.back();
}

namespace {

constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

std::vector<std::size_t> block_index(std::size_t n, const CommutingPartition& p) {
    std::vector<std::size_t> block(n, kNoBlock);
    auto claim = [&](const VertexSet& s, std::size_t idx) {
        for (Vertex v : s) {
            if (v >= n) {
                throw PartitionStructureError("vertex " + std::to_string(v) + " is out of range");
            }
            if (block[v] != kNoBlock) {
                throw PartitionStructureError("vertex " + std::to_string(v) + " appears in two blocks");
            }
            block[v] = idx;
        }
    };
    claim(p.p0, 0);
    for (std::size_t k = 0; k < p.parts.size(); ++k) {
        if (p.parts[k].empty()) {
            throw PartitionStructureError("part " + std::to_string(k + 1) + " is empty");
        }
        claim(p.parts[k], k + 1);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (block[v] == kNoBlock) {
            throw PartitionStructureError("vertex " + std::to_string(v) + " is not covered");
        }
    }
    return block;
}

}  // namespace

std::optional<Violation> validate_partition(const Graph& g, const CommutingPartition& p) {
    const std::size_t n = g.order();
    const auto block = block_index(n, p);

    std::vector<bool> universal(n, false);
    for (Vertex v : universal_vertices(g)) universal[v] = true;
    for (Vertex v = 0; v < n; ++v) {
        if (universal[v] != (block[v] == 0)) {
            return Violation{Violation::Kind::P0Mismatch, v, v, block[v], block[v]};
        }
    }

    std::vector<VertexSet> blocks;
    blocks.reserve(p.parts.size() + 1);
    blocks.push_back(p.p0);
    for (const auto& part : p.parts) blocks.push_back(part);
    for (auto& b : blocks) std::sort(b.begin(), b.end());

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex u : blocks[i]) {
            for (std::size_t j = i; j < blocks.size(); ++j) {
                for (Vertex v : blocks[j]) {
                    if (j == i) {
                        if (v <= u) continue;
                        if (i > 0 && g.adjacent(u, v)) {
                            return Violation{Violation::Kind::InternalEdge, u, v, i, i};
                        }
                    } else if (!g.adjacent(u, v)) {
                        return Violation{Violation::Kind::MissingCrossEdge, u, v, i, j};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

std::optional<ForbiddenTriple> witness_from_violation(const Graph& g, const Violation& bad,
                                                      const std::vector<Vertex>& pivots) {
    std::optional<ForbiddenTriple> t;
    switch (bad.kind) {
        case Violation::Kind::InternalEdge:
            // both endpoints are non-neighbours of the pivot of their part
            t = make_triple(bad.u, bad.v, pivots[bad.block_u - 1]);
            break;
        case Violation::Kind::MissingCrossEdge:
            // the later vertex was excluded from the earlier part by adjacency
            // to its pivot, the earlier one was included by non-adjacency
            if (bad.block_u > 0) t = make_triple(bad.v, pivots[bad.block_u - 1], bad.u);
            break;
        case Violation::Kind::P0Mismatch:
            break;
    }
    if (t && is_valid_triple(g, *t)) return t;
    return std::nullopt;
}

}  // namespace

PartitionResult greedy_partition(const Graph& g, const PivotRule& rule) {
    GreedyPartitionBuilder builder(g);
    while (!builder.done()) builder.step(rule);

    const auto bad = validate_partition(g, builder.partial());
    if (!bad) return normalized(builder.partial());

    if (auto t = witness_from_violation(g, *bad, builder.pivot_history())) return *t;
    if (auto t = find_forbidden_triple(g)) return *t;
    throw std::logic_error("greedy partition failed validation on a graph without a forbidden triple");
}

PartitionResult canonical_partition(const Graph& g) {
    if (auto p = recognize_multipartite(g)) return *p;
    if (auto t = find_forbidden_triple(g)) return *t;
    throw std::logic_error("complement recognizer and triple scan disagree");
}

}  // namespace raagv
