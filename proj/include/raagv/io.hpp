#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "raagv/graph.hpp"
#include "raagv/group_decomp.hpp"
#include "raagv/harness.hpp"
#include "raagv/partition.hpp"

namespace raagv {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    /// 1-based line of the offending input, or 0 when not line-oriented.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Bijection between vertex indices and user-facing labels.
class LabelMap {
public:
    LabelMap() = default;

    /// Labels "0".."n-1".
    static LabelMap identity(std::size_t n);

    /// Throws std::invalid_argument on empty or repeated labels.
    explicit LabelMap(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> find(std::string_view label) const;

    /// True when every vertex carries its own decimal index.
    bool is_identity() const;

    friend bool operator==(const LabelMap& a, const LabelMap& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
};

struct LabeledGraph {
    Graph graph;
    LabelMap labels;
};

/// Line format:
///   # comment
///   n <count>
///   e <label> <label>
///   v <label>            (declares a vertex label without an edge)
/// Labels that are all integers in 0..count-1 are used as indices directly;
/// otherwise indices follow first appearance.
LabeledGraph parse_edge_list(std::string_view text);

/// Writes the edge-list format; `v` lines are emitted only for non-numeric
/// labels that would otherwise be lost.
std::string emit_edge_list(const Graph& g, const LabelMap& labels);
std::string emit_edge_list(const Graph& g);

/// graph6 for 0 <= n <= 62. A single trailing newline is tolerated on input.
Graph parse_graph6(std::string_view bytes);
std::string emit_graph6(const Graph& g);

/// Graphviz description; with a partition, each block becomes a cluster.
std::string emit_dot(const Graph& g, const CommutingPartition* partition = nullptr,
                     const LabelMap* labels = nullptr);

/// Classification record with the fixed field order
/// embeddable, witness, partition, group, canonical.
std::string verdict_json(const Verdict& v);

std::string report_json(const std::vector<CrossCheckReport>& reports);
std::string report_table(const std::vector<CrossCheckReport>& reports);

}  // namespace raagv
