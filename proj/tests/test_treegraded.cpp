#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <sepwidth/treegraded.hpp>

using namespace sepwidth;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

TreeGrading bowtie_grading() { return {bowtie(), {{0, 1, 2}, {2, 3, 4}}}; }

/// Blocks plus singleton pieces for isolated vertices: valid for any graph.
TreeGrading block_grading(const Graph& g) {
    TreeGrading tg{g, blocks(g).blocks};
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& p : tg.pieces)
        for (int v : p) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) tg.pieces.push_back({v});
    return tg;
}

GluingSpec chain_spec(std::vector<std::string> ids, std::map<std::string, Graph> templates) {
    GluingSpec spec;
    spec.templates = std::move(templates);
    spec.node_template = std::move(ids);
    for (int i = 1; i < static_cast<int>(spec.node_template.size()); ++i)
        spec.edges.push_back({i - 1, i, 0, 0});
    return spec;
}

} // namespace

TEST_CASE("tree grading validation") {
    SECTION("bowtie with its triangles") {
        REQUIRE(validate_tree_grading(bowtie_grading()).ok());
    }
    SECTION("C4 as two paths sharing both endpoints is fat") {
        TreeGrading tg{cycle_graph(4), {{0, 1, 2}, {0, 2, 3}}};
        auto check = validate_tree_grading(tg);
        REQUIRE(check.kind == TgValidation::Kind::FatIntersection);
    }
    SECTION("a single piece is allowed") {
        TreeGrading tg{cycle_graph(4), {{0, 1, 2, 3}}};
        REQUIRE(validate_tree_grading(tg).ok());
    }
    SECTION("uncovered edge") {
        TreeGrading tg{path_graph(3), {{0, 1}, {2}}};
        auto check = validate_tree_grading(tg);
        REQUIRE(check.kind == TgValidation::Kind::Cover);
    }
    SECTION("disconnected piece") {
        TreeGrading tg{path_graph(3), {{0, 2}, {0, 1}, {1, 2}}};
        REQUIRE(validate_tree_grading(tg).kind == TgValidation::Kind::PieceDisconnected);
    }
    SECTION("edge pieces of a cycle violate the loop condition") {
        TreeGrading tg{cycle_graph(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
        auto fast = validate_tree_grading(tg);
        REQUIRE(fast.kind == TgValidation::Kind::LoopCondition);
        auto slow = validate_tree_grading_by_cycles(tg);
        REQUIRE(slow.kind == TgValidation::Kind::LoopCondition);
    }
    SECTION("block and cycle paths agree on random piece families") {
        std::mt19937 rng(107);
        for (int i = 0; i < 60; ++i) {
            Graph g = oracles::random_graph(rng, 2 + i % 7, 0.45);
            // valid by construction
            TreeGrading good = block_grading(g);
            REQUIRE(validate_tree_grading(good).ok());
            REQUIRE(validate_tree_grading_by_cycles(good).ok());
            // edges as pieces: loop condition fails iff g has a cycle
            if (g.edge_count() > 0) {
                TreeGrading edges{g, {}};
                for (auto [u, v] : g.edges()) edges.pieces.push_back({u, v});
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (g.degree(v) == 0) edges.pieces.push_back({v});
                auto fast = validate_tree_grading(edges);
                auto slow = validate_tree_grading_by_cycles(edges);
                REQUIRE(fast.ok() == slow.ok());
                REQUIRE(fast.ok() == simple_cycles(g, 100000).empty());
            }
        }
    }
}

TEST_CASE("compose") {
    SECTION("star of three triangles at one hub") {
        GluingSpec spec;
        spec.templates.emplace("C3", complete_graph(3));
        spec.node_template = {"C3", "C3", "C3"};
        spec.edges.push_back({0, 1, 0, 0});
        spec.edges.push_back({0, 2, 0, 0});
        auto res = compose(spec);
        REQUIRE(res.grading.host.vertex_count() == 7);
        REQUIRE(res.grading.pieces.size() == 3);
        REQUIRE(validate_tree_grading(res.grading).ok());
        // all three pieces meet in the shared hub
        auto hub01 = vset::intersect(res.grading.pieces[0], res.grading.pieces[1]);
        auto hub02 = vset::intersect(res.grading.pieces[0], res.grading.pieces[2]);
        REQUIRE(hub01 == hub02);
        REQUIRE(hub01.size() == 1);
    }
    SECTION("K4 - K2 - K4 chain") {
        auto res = compose(chain_spec({"K4", "K2", "K4"},
                                      {{"K4", complete_graph(4)}, {"K2", complete_graph(2)}}));
        REQUIRE(res.grading.host.vertex_count() == 8);
        std::vector<int> widths;
        for (const auto& p : res.grading.pieces)
            widths.push_back(treewidth_exact(induced_subgraph(res.grading.host, p).graph).width);
        REQUIRE(widths == std::vector<int>{3, 1, 3});
    }
    SECTION("single node is the identity") {
        auto res = compose(chain_spec({"P4"}, {{"P4", path_graph(4)}}));
        REQUIRE(res.grading.host == path_graph(4));
        REQUIRE(res.grading.pieces == std::vector<VertexSet>{{0, 1, 2, 3}});
    }
    SECTION("spec validation errors") {
        GluingSpec spec;
        spec.templates.emplace("K2", complete_graph(2));
        spec.node_template = {"K2", "missing"};
        spec.edges.push_back({0, 1, 0, 0});
        REQUIRE_THROWS_AS(compose(spec), std::invalid_argument);

        GluingSpec treeless;
        treeless.templates.emplace("K2", complete_graph(2));
        treeless.node_template = {"K2", "K2"};
        REQUIRE_THROWS_AS(compose(treeless), std::invalid_argument); // missing edge

        GluingSpec cyclic;
        cyclic.templates.emplace("K2", complete_graph(2));
        cyclic.node_template = {"K2", "K2", "K2"};
        cyclic.edges.push_back({0, 1, 0, 0});
        cyclic.edges.push_back({1, 2, 1, 0});
        cyclic.edges.push_back({2, 0, 1, 1}); // node 0 becomes a child: no root
        REQUIRE_THROWS_AS(compose(cyclic), std::invalid_argument);

        GluingSpec badvertex;
        badvertex.templates.emplace("K2", complete_graph(2));
        badvertex.node_template = {"K2", "K2"};
        badvertex.edges.push_back({0, 1, 5, 0});
        REQUIRE_THROWS_AS(compose(badvertex), std::invalid_argument);

        GluingSpec disconnected_tpl;
        disconnected_tpl.templates.emplace("2K1", Graph(2));
        disconnected_tpl.node_template = {"2K1"};
        REQUIRE_THROWS_AS(compose(disconnected_tpl), std::invalid_argument);
    }
    SECTION("round trip: copies are isomorphic to their templates") {
        std::mt19937 rng(109);
        std::map<std::string, Graph> tpls{{"K2", complete_graph(2)},
                                          {"C3", cycle_graph(3)},
                                          {"C4", cycle_graph(4)},
                                          {"K4", complete_graph(4)},
                                          {"P4", path_graph(4)}};
        std::vector<std::string> names{"K2", "C3", "C4", "K4", "P4"};
        for (int i = 0; i < 40; ++i) {
            GluingSpec spec;
            spec.templates = tpls;
            int nodes = 1 + static_cast<int>(rng() % 5);
            for (int v = 0; v < nodes; ++v)
                spec.node_template.push_back(names[rng() % names.size()]);
            for (int v = 1; v < nodes; ++v) {
                int parent = static_cast<int>(rng() % static_cast<std::uint32_t>(v));
                int pv = static_cast<int>(
                    rng() % static_cast<std::uint32_t>(
                                tpls.at(spec.node_template[parent]).vertex_count()));
                int cv = static_cast<int>(
                    rng() % static_cast<std::uint32_t>(
                                tpls.at(spec.node_template[v]).vertex_count()));
                spec.edges.push_back({parent, v, pv, cv});
            }
            auto res = compose(spec);
            REQUIRE(validate_tree_grading(res.grading).ok());
            for (int node = 0; node < nodes; ++node) {
                const Graph& tpl = tpls.at(spec.node_template[node]);
                const auto& map = res.vertex_maps[static_cast<std::size_t>(node)];
                // the copy map is an edge-preserving bijection onto the piece
                for (auto [u, v] : tpl.edges())
                    REQUIRE(res.grading.host.has_edge(map[static_cast<std::size_t>(u)],
                                                      map[static_cast<std::size_t>(v)]));
                auto piece = res.grading.pieces[static_cast<std::size_t>(node)];
                REQUIRE(piece.size() == static_cast<std::size_t>(tpl.vertex_count()));
                int induced_edges =
                    induced_subgraph(res.grading.host, piece).graph.edge_count();
                REQUIRE(induced_edges == tpl.edge_count());
            }
        }
    }
}

TEST_CASE("induced grading") {
    SECTION("bowtie restricted to a triangle plus a neighbour across") {
        auto res = induced_grading(bowtie_grading(), {0, 1, 2, 3});
        REQUIRE(res.grading.host.vertex_count() == 4);
        REQUIRE(res.grading.pieces == std::vector<VertexSet>{{0, 1, 2}, {2, 3}});
        REQUIRE(res.piece_origin == std::vector<int>{0, 1});
        REQUIRE(validate_tree_grading(res.grading).ok());
    }
    SECTION("restriction to a full piece") {
        auto res = induced_grading(bowtie_grading(), {0, 1, 2});
        REQUIRE(res.grading.pieces == std::vector<VertexSet>{{0, 1, 2}});
    }
    SECTION("restriction to an edge inside a piece") {
        auto res = induced_grading(bowtie_grading(), {3, 4});
        REQUIRE(res.grading.pieces == std::vector<VertexSet>{{0, 1}});
        REQUIRE(res.old_of_new == std::vector<int>{3, 4});
    }
    SECTION("rejects disconnected or tiny restrictions") {
        REQUIRE_THROWS_AS(induced_grading(bowtie_grading(), {0, 3}), std::invalid_argument);
        REQUIRE_THROWS_AS(induced_grading(bowtie_grading(), {0}), std::invalid_argument);
    }
}

TEST_CASE("grading order") {
    SECTION("chain of three triangles") {
        auto res = compose(chain_spec(
            {"C3", "C3", "C3"}, {{"C3", complete_graph(3)}}));
        auto order = grading_order(res.grading);
        REQUIRE(order.piece_order == std::vector<int>{0, 1, 2});
        REQUIRE(order.attach_vertex[0] == -1);
        for (std::size_t m = 1; m < order.attach_vertex.size(); ++m)
            REQUIRE(order.attach_vertex[m] >= 0);
    }
    SECTION("single piece") {
        TreeGrading tg{complete_graph(3), {{0, 1, 2}}};
        auto order = grading_order(tg);
        REQUIRE(order.piece_order == std::vector<int>{0});
    }
    SECTION("star of four edges at a hub") {
        Graph star = star_graph(4);
        TreeGrading tg{star, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
        auto order = grading_order(tg);
        REQUIRE(order.piece_order == std::vector<int>{0, 1, 2, 3});
        for (std::size_t m = 1; m < order.attach_vertex.size(); ++m)
            REQUIRE(order.attach_vertex[m] == 0); // always the hub
    }
    SECTION("disconnected host rejected") {
        TreeGrading tg{Graph(2), {{0}, {1}}};
        REQUIRE_THROWS_AS(grading_order(tg), std::invalid_argument);
    }
}

TEST_CASE("treewidth via grading") {
    SECTION("bowtie") {
        auto res = tw_via_grading(bowtie_grading());
        REQUIRE(res.width == 2);
        REQUIRE(res.width == treewidth_exact(bowtie()).width);
        REQUIRE(validate_tree_decomposition(res.decomposition, bowtie()).ok());
    }
    SECTION("K4 - K2 - K4 chain") {
        auto comp = compose(chain_spec({"K4", "K2", "K4"},
                                       {{"K4", complete_graph(4)}, {"K2", complete_graph(2)}}));
        REQUIRE(tw_via_grading(comp.grading).width == 3);
    }
    SECTION("tree of edge pieces") {
        Graph t = complete_binary_tree(2);
        TreeGrading tg{t, {}};
        for (auto [u, v] : t.edges()) tg.pieces.push_back({u, v});
        REQUIRE(tw_via_grading(tg).width == 1);
    }
    SECTION("pipeline on random compositions and random connected restrictions") {
        std::mt19937 rng(113);
        std::map<std::string, Graph> tpls{{"K2", complete_graph(2)},
                                          {"C3", cycle_graph(3)},
                                          {"C4", cycle_graph(4)},
                                          {"K4", complete_graph(4)},
                                          {"P4", path_graph(4)}};
        std::vector<std::string> names{"K2", "C3", "C4", "K4", "P4"};
        for (int i = 0; i < 25; ++i) {
            GluingSpec spec;
            spec.templates = tpls;
            int nodes = 2 + static_cast<int>(rng() % 3);
            for (int v = 0; v < nodes; ++v)
                spec.node_template.push_back(names[rng() % names.size()]);
            for (int v = 1; v < nodes; ++v) {
                int parent = static_cast<int>(rng() % static_cast<std::uint32_t>(v));
                spec.edges.push_back(
                    {parent, v,
                     static_cast<int>(rng() % static_cast<std::uint32_t>(
                                                  tpls.at(spec.node_template[parent]).vertex_count())),
                     static_cast<int>(rng() % static_cast<std::uint32_t>(
                                                  tpls.at(spec.node_template[v]).vertex_count()))});
            }
            auto comp = compose(spec);
            const Graph& host = comp.grading.host;
            REQUIRE(tw_via_grading(comp.grading).width == treewidth_exact(host).width);

            auto subs = connected_induced_subgraphs(host, std::min(6, host.vertex_count()));
            for (std::size_t step = 0; step < subs.size(); step += 7) {
                const auto& s = subs[step];
                if (s.size() < 2) continue;
                auto ind = induced_grading(comp.grading, s);
                auto via = tw_via_grading(ind.grading);
                REQUIRE(via.width == treewidth_exact(ind.grading.host).width);
            }
        }
    }
}

TEST_CASE("treewidth profile via pieces") {
    SECTION("isomorphic pieces give the piece profile") {
        auto comp = compose(chain_spec({"C5", "C5", "C5"}, {{"C5", cycle_graph(5)}}));
        auto via = tw_profile_via_pieces(comp.grading, 5);
        auto direct = tw_profile(cycle_graph(5), 5);
        for (int k = 1; k <= 5; ++k) REQUIRE(via.value_at(k) == direct.value_at(k));
    }
    SECTION("pointwise max of K4 and C4") {
        auto comp = compose(chain_spec(
            {"K4", "C4"}, {{"K4", complete_graph(4)}, {"C4", cycle_graph(4)}}));
        auto via = tw_profile_via_pieces(comp.grading, 4);
        auto pk4 = tw_profile(complete_graph(4), 4);
        auto pc4 = tw_profile(cycle_graph(4), 4);
        for (int k = 1; k <= 4; ++k)
            REQUIRE(via.value_at(k) == std::max(pk4.value_at(k), pc4.value_at(k)));
    }
    SECTION("single piece grading is the identity") {
        TreeGrading tg{cycle_graph(6), {{0, 1, 2, 3, 4, 5}}};
        auto via = tw_profile_via_pieces(tg, 6);
        auto direct = tw_profile(cycle_graph(6), 6);
        for (int k = 1; k <= 6; ++k) REQUIRE(via.value_at(k) == direct.value_at(k));
    }
    SECTION("equals the host profile on compositions") {
        auto comp = compose(chain_spec({"K4", "C4", "P4"},
                                       {{"K4", complete_graph(4)},
                                        {"C4", cycle_graph(4)},
                                        {"P4", path_graph(4)}}));
        auto via = tw_profile_via_pieces(comp.grading, 8);
        auto host = tw_profile(comp.grading.host, 8);
        for (int k = 1; k <= 8; ++k) REQUIRE(via.value_at(k) == host.value_at(k));
    }
}
