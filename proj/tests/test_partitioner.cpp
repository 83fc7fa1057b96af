#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "raagv/harness.hpp"
#include "raagv/partitioner.hpp"
#include "support/oracles.hpp"

using namespace raagv;

namespace {

CommutingPartition as_partition(const PartitionResult& r) {
    REQUIRE(std::holds_alternative<CommutingPartition>(r));
    return std::get<CommutingPartition>(r);
}

ForbiddenTriple as_witness(const PartitionResult& r) {
    REQUIRE(std::holds_alternative<ForbiddenTriple>(r));
    return std::get<ForbiddenTriple>(r);
}

}  // namespace

TEST_CASE("greedy partition on the worked examples") {
    const auto& p3 = as_partition(greedy_partition(path_graph(3)));
    CHECK(p3.p0 == VertexSet{1});
    CHECK(p3.parts == std::vector<VertexSet>{{0, 2}});
    CHECK_FALSE(validate_partition(path_graph(3), p3));

    const auto& k3 = as_partition(greedy_partition(complete_graph(3)));
    CHECK(k3.p0 == VertexSet{0, 1, 2});
    CHECK(k3.parts.empty());

    CHECK(as_witness(greedy_partition(Graph(3, {{0, 1}}))) == ForbiddenTriple{0, 1, 2});

    const auto& k0 = as_partition(greedy_partition(Graph(0)));
    CHECK(k0.p0.empty());
    CHECK(k0.parts.empty());

    const auto& k1 = as_partition(greedy_partition(Graph(1)));
    CHECK(k1.p0.empty());
    CHECK(k1.parts == std::vector<VertexSet>{{0}});
}

TEST_CASE("builder state follows the construction step by step") {
    // C4 plus a universal apex 4
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    GreedyPartitionBuilder b(g);
    CHECK(b.partial().p0 == VertexSet{4});
    CHECK(b.assigned() == VertexSet{4});
    CHECK(b.remaining() == VertexSet{0, 1, 2, 3});

    CHECK(b.step(min_index_pivot()) == VertexSet{0, 2});
    CHECK(b.assigned() == VertexSet{0, 2, 4});
    CHECK(b.remaining() == VertexSet{1, 3});
    CHECK(b.pivot_history() == std::vector<Vertex>{0});

    CHECK(b.step(min_index_pivot()) == VertexSet{1, 3});
    CHECK(b.done());
    CHECK(b.pivot_history() == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(b.step(min_index_pivot()), std::logic_error);
}

TEST_CASE("builder invariants hold under random pivots") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const Graph g = seed % 3 ? random_nb_graph(n, seed) : random_graph(n, 0.6, seed);
        GreedyPartitionBuilder b(g);
        const auto rule = random_pivot(seed * 31 + 1);
        std::size_t steps = 0;
        while (!b.done()) {
            const std::size_t before = b.remaining().size();
            const auto& part = b.step(rule);
            ++steps;
            CHECK(b.remaining().size() < before);
            CHECK(std::binary_search(part.begin(), part.end(), b.pivot_history().back()));
            VertexSet all = b.assigned();
            all.insert(all.end(), b.remaining().begin(), b.remaining().end());
            std::sort(all.begin(), all.end());
            CHECK(all.size() == n);
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        }
        CHECK(steps == b.partial().parts.size());
        CHECK(steps <= n);
    }
}

TEST_CASE("validate_partition") {
    const Graph c4 = cycle_graph(4);
    CHECK_FALSE(validate_partition(c4, {{}, {{0, 2}, {1, 3}}}));

    const auto bad = validate_partition(c4, {{}, {{0, 1}, {2, 3}}});
    REQUIRE(bad);
    CHECK(bad->kind == Violation::Kind::InternalEdge);
    CHECK(bad->u == 0);
    CHECK(bad->v == 1);
    CHECK(bad->block_u == 1);

    CHECK_FALSE(validate_partition(complete_graph(3), {{0, 1, 2}, {}}));

    const auto p0_wrong = validate_partition(complete_graph(3), {{0, 1}, {{2}}});
    REQUIRE(p0_wrong);
    CHECK(p0_wrong->kind == Violation::Kind::P0Mismatch);
    CHECK(p0_wrong->u == 2);

    // path 0-1-2 with 1 wrongly split off from 0's part keeps p0 right but
    // misses the cross edge 0-2
    const auto cross = validate_partition(path_graph(3), {{1}, {{0}, {2}}});
    REQUIRE(cross);
    CHECK(cross->kind == Violation::Kind::MissingCrossEdge);
    CHECK(cross->u == 0);
    CHECK(cross->v == 2);
    CHECK(cross->block_u == 1);
    CHECK(cross->block_v == 2);

    CHECK_THROWS_AS(validate_partition(c4, {{}, {{0, 2}, {1}}}), PartitionStructureError);
    CHECK_THROWS_AS(validate_partition(c4, {{}, {{0, 2}, {1, 3, 0}}}), PartitionStructureError);
    CHECK_THROWS_AS(validate_partition(c4, {{}, {{0, 2}, {1, 3}, {}}}), PartitionStructureError);
    CHECK_THROWS_AS(validate_partition(c4, {{}, {{0, 2}, {1, 7}}}), PartitionStructureError);
}

TEST_CASE("validate_partition agrees with a pairwise definition check") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 1 + seed % 7;
        const Graph g = random_graph(n, 0.6, seed);
        // random partition of the vertex set
        CommutingPartition p;
        std::vector<VertexSet> blocks(n + 1);
        for (Vertex v = 0; v < n; ++v) blocks[rng() % (n + 1)].push_back(v);
        p.p0 = blocks[0];
        for (std::size_t k = 1; k <= n; ++k)
            if (!blocks[k].empty()) p.parts.push_back(blocks[k]);

        bool ok = VertexSet(p.p0) == oracle::eccentricity_one(g);
        std::vector<std::size_t> owner(n);
        for (Vertex v : p.p0) owner[v] = 0;
        for (std::size_t k = 0; k < p.parts.size(); ++k)
            for (Vertex v : p.parts[k]) owner[v] = k + 1;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (owner[u] == owner[v] && owner[u] > 0 && g.adjacent(u, v)) ok = false;
                if (owner[u] != owner[v] && !g.adjacent(u, v)) ok = false;
            }
        CHECK(ok == !validate_partition(g, p).has_value());
    }
}

TEST_CASE("greedy succeeds exactly on NB, exhaustive n <= 6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto r = greedy_partition(g);
            const bool nb = !oracle::brute_force_triple(g).has_value();
            REQUIRE(std::holds_alternative<CommutingPartition>(r) == nb);
            if (const auto* p = std::get_if<CommutingPartition>(&r)) {
                CHECK_FALSE(validate_partition(g, *p));
                for (const auto& part : p->parts) {
                    // a singleton part adjacent to everything would belong in p0
                    if (part.size() == 1 && n >= 2) CHECK(g.degree(part.front()) < n - 1);
                }
            } else {
                CHECK(is_valid_triple(g, std::get<ForbiddenTriple>(r)));
            }
        }
    }
}

TEST_CASE("witness extraction from random pivots stays valid off the class") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 3 + seed % 15;
        const Graph g = random_graph(n, 0.5, seed);
        const auto r = greedy_partition(g, random_pivot(seed));
        if (const auto* t = std::get_if<ForbiddenTriple>(&r)) {
            CHECK(is_valid_triple(g, *t));
        } else {
            CHECK(is_nb(g));
        }
    }
}

TEST_CASE("pivot choice does not change the partition") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const Graph g = random_nb_graph(n, seed);
        const auto& canonical = as_partition(canonical_partition(g));
        for (std::uint64_t rule = 0; rule < 20; ++rule) {
            const auto& p = as_partition(greedy_partition(g, random_pivot(seed * 1000 + rule)));
            CHECK(oracle::family_of(p) == oracle::family_of(canonical));
            CHECK(p == canonical);
        }
    }
}

TEST_CASE("canonical partition") {
    const auto& c4 = as_partition(canonical_partition(cycle_graph(4)));
    CHECK(c4.p0.empty());
    CHECK(c4.parts == std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK(as_witness(canonical_partition(cycle_graph(5))) == ForbiddenTriple{0, 1, 3});
    const auto& k1 = as_partition(canonical_partition(Graph(1)));
    CHECK(k1.p0.empty());
    CHECK(k1.parts == std::vector<VertexSet>{{0}});
}
