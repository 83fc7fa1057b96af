#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "raagv/group_decomp.hpp"
#include "raagv/harness.hpp"
#include "raagv/partitioner.hpp"

using namespace raagv;

TEST_CASE("decompose reads ranks off the blocks") {
    const auto k3 = decompose({{0, 1, 2}, {}});
    CHECK(k3.abelian_rank == 3);
    CHECK(k3.free_ranks.empty());

    const auto e3 = decompose({{}, {{0, 1, 2}}});
    CHECK(e3.abelian_rank == 0);
    CHECK(e3.free_ranks == std::vector<std::size_t>{3});

    const auto c4 = decompose(std::get<CommutingPartition>(canonical_partition(cycle_graph(4))));
    CHECK(c4.abelian_rank == 0);
    CHECK(c4.free_ranks == std::vector<std::size_t>{2, 2});
}

TEST_CASE("canonical form") {
    CHECK(canonical_form({1, {2, 1}}) == GroupDecomposition{2, {2}});
    CHECK(canonical_form({0, {2, 3}}) == GroupDecomposition{0, {3, 2}});
    CHECK(canonical_form({0, {1}}) == GroupDecomposition{1, {}});
    for (const GroupDecomposition& d : {GroupDecomposition{0, {1, 4, 1, 2}}, GroupDecomposition{3, {}},
                                        GroupDecomposition{0, {2, 5, 2}}}) {
        CHECK(canonical_form(canonical_form(d)) == canonical_form(d));
    }
}

TEST_CASE("text rendering") {
    CHECK(to_string({3, {}}) == "Z^3");
    CHECK(to_string({0, {3, 3}}) == "F_3 x F_3");
    CHECK(to_string({2, {4, 2}}) == "Z^2 x F_4 x F_2");
    CHECK(to_string({0, {}}) == "1");
    CHECK(to_string({1, {}}) == "Z^1");
}

TEST_CASE("verdicts on the named graphs") {
    const auto fig1a = verdict(Graph(3, {{0, 1}}));
    REQUIRE(std::holds_alternative<NotEmbeddable>(fig1a));
    CHECK(std::get<NotEmbeddable>(fig1a).witness == ForbiddenTriple{0, 1, 2});

    const auto c5 = verdict(cycle_graph(5));
    REQUIRE(std::holds_alternative<NotEmbeddable>(c5));
    CHECK(std::get<NotEmbeddable>(c5).witness == ForbiddenTriple{0, 1, 3});

    const auto k33 = verdict(complete_bipartite(3, 3), true);
    REQUIRE(embeds(k33));
    CHECK(std::get<Embeddable>(k33).group == GroupDecomposition{0, {3, 3}});
    CHECK(to_string(std::get<Embeddable>(k33).group) == "F_3 x F_3");

    const auto k1 = verdict(Graph(1));
    REQUIRE(embeds(k1));
    CHECK(to_string(std::get<Embeddable>(k1).group) == "Z^1");

    CHECK(to_string(std::get<Embeddable>(verdict(Graph(0))).group) == "1");
}

TEST_CASE("complete and empty graphs") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto v = verdict(complete_graph(n), true);
        REQUIRE(embeds(v));
        CHECK(std::get<Embeddable>(v).group == GroupDecomposition{n, {}});
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto v = verdict(empty_graph(n), true);
        REQUIRE(embeds(v));
        CHECK(std::get<Embeddable>(v).group == GroupDecomposition{0, {n}});
    }
}

TEST_CASE("generator count is preserved and canonical forms match block statistics") {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, GroupDecomposition> seen;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 1 + seed % 10;
        const auto v = verdict(random_nb_graph(n, seed), true);
        REQUIRE(embeds(v));
        const auto& e = std::get<Embeddable>(v);
        std::size_t total = e.group.abelian_rank;
        for (auto r : e.group.free_ranks) total += r;
        CHECK(total == n);

        std::vector<std::size_t> sizes;
        for (const auto& part : e.partition.parts) sizes.push_back(part.size());
        std::sort(sizes.begin(), sizes.end());
        const auto key = std::make_pair(e.partition.p0.size(), sizes);
        if (auto it = seen.find(key); it != seen.end()) CHECK(it->second == e.group);
        for (const auto& [other_key, other_group] : seen) {
            if (other_group == e.group) CHECK(other_key == key);
        }
        seen.emplace(key, e.group);
    }
}

TEST_CASE("presentation") {
    CHECK(emit_presentation(Graph(3, {{0, 1}})) == "⟨x0,x1,x2 | x0x1=x1x0⟩");
    CHECK(emit_presentation(empty_graph(2)) == "⟨x0,x1 | ⟩");
    CHECK(emit_presentation(complete_graph(2)) == "⟨x0,x1 | x0x1=x1x0⟩");
    CHECK(emit_presentation(path_graph(3)) == "⟨x0,x1,x2 | x0x1=x1x0, x1x2=x2x1⟩");
}
