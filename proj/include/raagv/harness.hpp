#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "raagv/graph.hpp"
#include "raagv/partition.hpp"

namespace raagv {

/// Largest order accepted by the exhaustive enumeration (2^28 graphs).
inline constexpr std::size_t kMaxEnumerationOrder = 8;

inline constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline constexpr std::uint64_t graph_count(std::size_t n) { return std::uint64_t{1} << pair_count(n); }

/// Labeled graph whose upper-triangle adjacency, read in pair-lexicographic
/// order (0,1), (0,2), ..., (n-2,n-1), is the bit string of `code` starting
/// at the least significant bit.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Inverse of graph_from_code; requires n <= 11.
std::uint64_t code_of(const Graph& g);

/// Every labeled simple graph on n vertices, ordered by code.
class GraphEnumeration {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}

        Graph operator*() const { return graph_from_code(n_, code_); }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++code_;
            return old;
        }
        std::uint64_t code() const { return code_; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t code_ = 0;
    };

    explicit GraphEnumeration(std::size_t n);

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, graph_count(n_)}; }
    std::uint64_t size() const { return graph_count(n_); }

private:
    std::size_t n_;
};

/// Throws std::invalid_argument when n exceeds kMaxEnumerationOrder.
GraphEnumeration enumerate_graphs(std::size_t n);

struct CrossCheckReport {
    std::size_t n = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t nb_count = 0;          // no forbidden triple found
    std::uint64_t gp_count = 0;          // greedy construction succeeded
    std::uint64_t recognizer_count = 0;  // complement recognizer succeeded
    std::vector<std::uint64_t> mismatches;  // codes of disagreeing graphs, ascending

    friend bool operator==(const CrossCheckReport&, const CrossCheckReport&) = default;
};

/// True when the triple scan, the greedy construction and the complement
/// recognizer agree on g, and every partition or witness they return is valid.
bool methods_agree(const Graph& g);

/// Single-threaded reference scan over every labeled graph on n vertices.
CrossCheckReport cross_check_serial(std::size_t n);

/// Same report as cross_check_serial, computed over OpenMP shards of the code
/// range. `threads` = 0 uses the OpenMP default.
CrossCheckReport cross_check(std::size_t n, int threads = 0);

/// Each pair is an edge independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// A random p0 set plus random parts, not necessarily canonical: singleton
/// parts are allowed.
CommutingPartition random_block_family(std::size_t n, std::uint64_t seed);

/// Complete multipartite graph on the parts, joined to the p0 vertices.
Graph nb_graph_from_blocks(std::size_t n, const CommutingPartition& family);

Graph random_nb_graph(std::size_t n, std::uint64_t seed);

}  // namespace raagv
