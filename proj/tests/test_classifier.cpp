#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "raagv/classifier.hpp"
#include "raagv/harness.hpp"
#include "support/oracles.hpp"

using namespace raagv;

namespace {

std::optional<ForbiddenTriple> from_oracle(const Graph& g) {
    const auto t = oracle::brute_force_triple(g);
    if (!t) return std::nullopt;
    return ForbiddenTriple{(*t)[0], (*t)[1], (*t)[2]};
}

}  // namespace

TEST_CASE("forbidden triple on the small named graphs") {
    const Graph fig1a(3, {{0, 1}});
    CHECK(find_forbidden_triple(fig1a) == ForbiddenTriple{0, 1, 2});
    CHECK_FALSE(find_forbidden_triple(complete_graph(3)));
    // vertex 3 is the first one adjacent to neither 0 nor 1 on the pentagon
    CHECK(find_forbidden_triple(cycle_graph(5)) == ForbiddenTriple{0, 1, 3});
    CHECK(from_oracle(cycle_graph(5)) == ForbiddenTriple{0, 1, 3});

    CHECK(is_nb(path_graph(3)));
    CHECK_FALSE(is_nb(cycle_graph(5)));
    CHECK(is_nb(empty_graph(5)));
    CHECK(is_nb(Graph(0)));
    CHECK(is_nb(Graph(1)));
}

TEST_CASE("lexicographic witness matches the brute-force scan exhaustively for n <= 6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto got = find_forbidden_triple(g);
            REQUIRE(got == from_oracle(g));
            if (got) CHECK(is_valid_triple(g, *got));
        }
    }
}

TEST_CASE("witness is deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_graph(15, 0.5, seed);
        CHECK(find_forbidden_triple(g) == find_forbidden_triple(g));
    }
}

TEST_CASE("complement recognizer") {
    const auto c4 = recognize_multipartite(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->p0.empty());
    CHECK(c4->parts == std::vector<VertexSet>{{0, 2}, {1, 3}});

    const auto p3 = recognize_multipartite(path_graph(3));
    REQUIRE(p3);
    CHECK(p3->p0 == VertexSet{1});
    CHECK(p3->parts == std::vector<VertexSet>{{0, 2}});

    CHECK_FALSE(recognize_multipartite(Graph(3, {{0, 1}})));
    CHECK_FALSE(recognize_multipartite(cycle_graph(5)));

    const auto k1 = recognize_multipartite(Graph(1));
    REQUIRE(k1);
    CHECK(k1->p0.empty());
    CHECK(k1->parts == std::vector<VertexSet>{{0}});

    const auto k0 = recognize_multipartite(Graph(0));
    REQUIRE(k0);
    CHECK(k0->p0.empty());
    CHECK(k0->parts.empty());
}

TEST_CASE("recognizer succeeds exactly when no triple exists, exhaustive n <= 6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            REQUIRE(recognize_multipartite(g).has_value() == !find_forbidden_triple(g).has_value());
        }
    }
}

TEST_CASE("recognizer and triple scan agree on larger random graphs") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 7 + seed % 30;
        const Graph g = seed % 2 ? random_nb_graph(n, seed) : random_graph(n, 0.8, seed);
        const auto t = find_forbidden_triple(g);
        CHECK(recognize_multipartite(g).has_value() == !t.has_value());
        if (t) CHECK(is_valid_triple(g, *t));
    }
}

TEST_CASE("NB is closed under induced subgraphs") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 14;
        const Graph g = random_nb_graph(n, seed);
        REQUIRE(is_nb(g));
        VertexSet keep;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2) keep.push_back(v);
        CHECK(is_nb(g.induced(keep)));
    }
}

TEST_CASE("triple validity rejects malformed triples") {
    const Graph fig1a(3, {{0, 1}});
    CHECK(is_valid_triple(fig1a, {0, 1, 2}));
    CHECK_FALSE(is_valid_triple(fig1a, {1, 0, 2}));
    CHECK_FALSE(is_valid_triple(fig1a, {0, 2, 1}));
    CHECK_FALSE(is_valid_triple(fig1a, {0, 1, 1}));
    CHECK_FALSE(is_valid_triple(fig1a, {0, 1, 3}));
    CHECK(make_triple(1, 0, 2) == ForbiddenTriple{0, 1, 2});
}
