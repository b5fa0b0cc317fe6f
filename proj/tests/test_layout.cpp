#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <sepwidth/layout.hpp>

using namespace sepwidth;

TEST_CASE("exact cutwidth") {
    SECTION("paths") {
        for (int n = 2; n <= 6; ++n) REQUIRE(cutwidth_exact(path_graph(n)).value == 1);
    }
    SECTION("K4") {
        REQUIRE(oracles::cutwidth_bruteforce(complete_graph(4)) == 4);
        REQUIRE(cutwidth_exact(complete_graph(4)).value == 4);
    }
    SECTION("C6") {
        REQUIRE(oracles::cutwidth_bruteforce(cycle_graph(6)) == 2);
        REQUIRE(cutwidth_exact(cycle_graph(6)).value == 2);
    }
    SECTION("matches permutation brute force, witness attains value") {
        std::mt19937 rng(83);
        for (int i = 0; i < 60; ++i) {
            Graph g = oracles::random_graph(rng, 1 + i % 7, 0.45);
            auto res = cutwidth_exact(g);
            REQUIRE(res.value == oracles::cutwidth_bruteforce(g));
            REQUIRE(oracles::cutwidth_of_order(g, res.layout.order) == res.value);
        }
    }
    SECTION("size limit") {
        REQUIRE_THROWS_AS(cutwidth_exact(Graph(21)), limit_error);
    }
}

TEST_CASE("exact pathwidth") {
    SECTION("paths") {
        for (int n = 2; n <= 6; ++n) REQUIRE(pathwidth_exact(path_graph(n)).width == 1);
    }
    SECTION("C5") {
        REQUIRE(oracles::vertex_separation_bruteforce(cycle_graph(5)) == 2);
        REQUIRE(pathwidth_exact(cycle_graph(5)).width == 2);
    }
    SECTION("complete binary tree of height 3") {
        Graph t = complete_binary_tree(3);
        REQUIRE(pathwidth_exact(t).width == 2);
    }
    SECTION("certificate is a valid path decomposition") {
        std::mt19937 rng(89);
        for (int i = 0; i < 60; ++i) {
            Graph g = oracles::random_graph(rng, 1 + i % 7, 0.45);
            auto res = pathwidth_exact(g);
            REQUIRE(res.width == oracles::vertex_separation_bruteforce(g));
            REQUIRE(validate_tree_decomposition(res.decomposition, g).ok());
            REQUIRE(res.decomposition.width() == res.width);
            // the decomposition tree is a path: every node has degree <= 2
            const Graph& tree = res.decomposition.tree;
            for (int v = 0; v < tree.vertex_count(); ++v) REQUIRE(tree.degree(v) <= 2);
        }
    }
}

TEST_CASE("exact sumcut") {
    SECTION("K1") { REQUIRE(sumcut_exact(complete_graph(1)).value == 0); }
    SECTION("K2") {
        REQUIRE(oracles::sumcut_bruteforce(complete_graph(2)) == 1);
        REQUIRE(sumcut_exact(complete_graph(2)).value == 1);
    }
    SECTION("P3") {
        REQUIRE(oracles::sumcut_bruteforce(path_graph(3)) == 2);
        REQUIRE(sumcut_exact(path_graph(3)).value == 2);
    }
    SECTION("matches permutation brute force, witness attains value") {
        std::mt19937 rng(97);
        for (int i = 0; i < 50; ++i) {
            Graph g = oracles::random_graph(rng, 1 + i % 7, 0.45);
            auto res = sumcut_exact(g);
            REQUIRE(res.value == oracles::sumcut_bruteforce(g));
            REQUIRE(oracles::sumcut_of_order(g, res.layout.order) == res.value);
        }
    }
    SECTION("size limit") {
        REQUIRE_THROWS_AS(sumcut_exact(Graph(19)), limit_error);
    }
}

TEST_CASE("classical chain tw <= pw <= cw") {
    std::mt19937 rng(101);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracles::random_graph(rng, 1 + i % 8, 0.4);
        int tw = treewidth_exact(g).width;
        int pw = pathwidth_exact(g).width;
        int cw = cutwidth_exact(g).value;
        REQUIRE(tw <= pw);
        REQUIRE(pw <= cw);
    }
}

TEST_CASE("layout profiles") {
    SECTION("path pathwidth profile is 1 from k = 2") {
        auto p = pathwidth_profile(path_graph(6), 6);
        REQUIRE(p.value_at(1) == 0);
        for (int k = 2; k <= 6; ++k) REQUIRE(p.value_at(k) == 1);
    }
    SECTION("K5 cutwidth profile, oracle derived") {
        std::vector<int> expect;
        for (int k = 1; k <= 5; ++k)
            expect.push_back(oracles::cutwidth_bruteforce(complete_graph(k)));
        REQUIRE(expect == std::vector<int>{0, 1, 2, 4, 6});
        auto p = cutwidth_profile(complete_graph(5), 5);
        for (int k = 1; k <= 5; ++k)
            REQUIRE(p.value_at(k) == expect[static_cast<std::size_t>(k - 1)]);
    }
    SECTION("star cutwidth profile, oracle derived") {
        Graph star = star_graph(4);
        auto p = cutwidth_profile(star, 5);
        std::vector<int> got;
        for (int k = 1; k <= 5; ++k) got.push_back(p.value_at(k));
        // oracle: max over connected induced subgraphs per size
        std::vector<int> expect(5, 0);
        for (const auto& s : connected_induced_subgraphs(star, 5)) {
            int v = oracles::cutwidth_bruteforce(induced_subgraph(star, s).graph);
            auto& slot = expect[s.size() - 1];
            slot = std::max(slot, v);
        }
        for (int k = 1; k < 5; ++k)
            expect[static_cast<std::size_t>(k)] =
                std::max(expect[static_cast<std::size_t>(k)], expect[static_cast<std::size_t>(k - 1)]);
        REQUIRE(expect == std::vector<int>{0, 1, 1, 2, 2});
        REQUIRE(got == expect);
    }
    SECTION("profile monotonicity for all three parameters") {
        std::mt19937 rng(103);
        for (int i = 0; i < 10; ++i) {
            Graph g = oracles::random_graph(rng, 4 + i % 4, 0.5);
            for (auto* fn : {&cutwidth_profile, &pathwidth_profile, &sumcut_profile}) {
                auto p = (*fn)(g, 7, ProfileOptions{});
                for (int k = 2; k <= 7; ++k) REQUIRE(p.value_at(k) >= p.value_at(k - 1));
            }
        }
    }
}
