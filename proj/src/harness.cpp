#include "raagv/harness.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <omp.h>

#include "raagv/classifier.hpp"
#include "raagv/partitioner.hpp"

namespace raagv {

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1U) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::uint64_t code_of(const Graph& g) {
    const std::size_t n = g.order();
    if (pair_count(n) > 64) throw std::invalid_argument("code_of: graph too large for a 64-bit code");
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (g.adjacent(u, v)) code |= std::uint64_t{1} << bit;
        }
    }
    return code;
}

GraphEnumeration::GraphEnumeration(std::size_t n) : n_(n) {
    if (n > kMaxEnumerationOrder) {
        throw std::invalid_argument("exhaustive enumeration is limited to n <= " +
                                    std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
    }
}

GraphEnumeration enumerate_graphs(std::size_t n) { return GraphEnumeration(n); }

namespace {

struct Tally {
    bool nb = false;
    bool gp = false;
    bool recognized = false;
    bool agree = false;
};

Tally examine(const Graph& g) {
    Tally t;
    const auto triple = find_forbidden_triple(g);
    const auto greedy = greedy_partition(g);
    const auto recognized = recognize_multipartite(g);
    t.nb = !triple.has_value();
    t.gp = std::holds_alternative<CommutingPartition>(greedy);
    t.recognized = recognized.has_value();

    t.agree = t.nb == t.gp && t.nb == t.recognized;
    if (triple) t.agree = t.agree && is_valid_triple(g, *triple);
    if (const auto* w = std::get_if<ForbiddenTriple>(&greedy)) t.agree = t.agree && is_valid_triple(g, *w);
    if (const auto* p = std::get_if<CommutingPartition>(&greedy)) {
        t.agree = t.agree && recognized && *p == *recognized && !validate_partition(g, *p);
    }
    return t;
}

void accumulate(CrossCheckReport& r, const Tally& t, std::uint64_t code) {
    ++r.total_graphs;
    r.nb_count += t.nb;
    r.gp_count += t.gp;
    r.recognizer_count += t.recognized;
    if (!t.agree) r.mismatches.push_back(code);
}

void merge_into(CrossCheckReport& into, const CrossCheckReport& part) {
    into.total_graphs += part.total_graphs;
    into.nb_count += part.nb_count;
    into.gp_count += part.gp_count;
    into.recognizer_count += part.recognizer_count;
    into.mismatches.insert(into.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
}

}  // namespace

bool methods_agree(const Graph& g) { return examine(g).agree; }

CrossCheckReport cross_check_serial(std::size_t n) {
    CrossCheckReport report;
    report.n = n;
    for (auto it = enumerate_graphs(n).begin(), end = enumerate_graphs(n).end(); it != end; ++it) {
        accumulate(report, examine(*it), it.code());
    }
    return report;
}

CrossCheckReport cross_check(std::size_t n, int threads) {
    const auto total = static_cast<std::int64_t>(enumerate_graphs(n).size());
    CrossCheckReport report;
    report.n = n;
    if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel num_threads(threads)
    {
        CrossCheckReport local;
#pragma omp for schedule(static) nowait
        for (std::int64_t code = 0; code < total; ++code) {
            const auto c = static_cast<std::uint64_t>(code);
            accumulate(local, examine(graph_from_code(n, c)), c);
        }
#pragma omp critical(raagv_cross_check_merge)
        merge_into(report, local);
    }

    std::sort(report.mismatches.begin(), report.mismatches.end());
    return report;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

CommutingPartition random_block_family(std::size_t n, std::uint64_t seed) {
    CommutingPartition family;
    if (n == 0) return family;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution to_p0(0.2);
    const std::size_t blocks = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    std::vector<VertexSet> parts(blocks);
    for (Vertex v = 0; v < n; ++v) {
        if (to_p0(rng)) {
            family.p0.push_back(v);
        } else {
            parts[pick(rng)].push_back(v);
        }
    }
    for (auto& part : parts) {
        if (!part.empty()) family.parts.push_back(std::move(part));
    }
    return normalized(std::move(family));
}

Graph nb_graph_from_blocks(std::size_t n, const CommutingPartition& family) {
    std::vector<std::size_t> block(n, 0);
    std::vector<bool> covered(n, false);
    auto claim = [&](Vertex v, std::size_t idx) {
        if (v >= n || covered[v]) throw std::invalid_argument("block family does not partition the vertex set");
        covered[v] = true;
        block[v] = idx;
    };
    for (Vertex v : family.p0) claim(v, 0);
    for (std::size_t k = 0; k < family.parts.size(); ++k) {
        for (Vertex v : family.parts[k]) claim(v, k + 1);
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw std::invalid_argument("block family does not cover the vertex set");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // vertices of one part stay independent; everything else is joined
            if (block[u] == 0 || block[u] != block[v]) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph random_nb_graph(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_nb_graph requires n >= 1");
    return nb_graph_from_blocks(n, random_block_family(n, seed));
}

}  // namespace raagv
