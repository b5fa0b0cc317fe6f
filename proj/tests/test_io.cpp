#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <sepwidth/io.hpp>

using namespace sepwidth;

TEST_CASE("graph json round trip") {
    std::mt19937 rng(131);
    for (int i = 0; i < 40; ++i) {
        Graph g = oracles::random_graph(rng, 1 + i % 9, 0.4);
        if (i % 3 == 0) g.set_label(0, "root");
        Graph back = io::graph_from_json(io::graph_to_json(g));
        REQUIRE(back == g);
        REQUIRE(back.labels() == g.labels());
    }
}

TEST_CASE("graph json strictness") {
    REQUIRE_THROWS_AS(io::graph_from_json(io::parse_json_text("{\"n\": 0, \"edges\": []}")),
                      parse_error);
    REQUIRE_THROWS_AS(
        io::graph_from_json(io::parse_json_text("{\"n\": 2, \"edges\": [[0,1],[1,0]]}")),
        parse_error); // duplicate edge
    REQUIRE_THROWS_AS(io::graph_from_json(io::parse_json_text("{\"n\": 2, \"edges\": [[0,2]]}")),
                      parse_error);
    REQUIRE_THROWS_AS(io::graph_from_json(io::parse_json_text("{\"n\": 2, \"edges\": [[1,1]]}")),
                      parse_error);
    REQUIRE_THROWS_AS(
        io::graph_from_json(io::parse_json_text("{\"n\":1,\"edges\":[],\"labels\":{\"x\":\"y\"}}")),
        parse_error);
    REQUIRE_THROWS_AS(io::parse_json_text("{nope"), parse_error);
}

TEST_CASE("auto format sniffing") {
    Graph a = io::parse_graph_auto("3 1\n0 2");
    REQUIRE(a.has_edge(0, 2));
    Graph b = io::parse_graph_auto("  {\"n\": 3, \"edges\": [[0,2]]}");
    REQUIRE(a == b);
}

TEST_CASE("tree decomposition serialization") {
    std::mt19937 rng(137);
    for (int i = 0; i < 25; ++i) {
        Graph g = oracles::random_graph(rng, 1 + i % 8, 0.5);
        TreeDecomposition td = treewidth_exact(g).decomposition;

        TreeDecomposition via_json = io::td_from_json(io::td_to_json(td));
        REQUIRE(via_json.bags == td.bags);
        REQUIRE(via_json.tree == td.tree);
        REQUIRE(validate_tree_decomposition(via_json, g).ok());

        TreeDecomposition via_pace = io::td_from_pace(io::td_to_pace(td, g.vertex_count()));
        REQUIRE(via_pace.bags == td.bags);
        REQUIRE(via_pace.tree == td.tree);
        REQUIRE(validate_tree_decomposition(via_pace, g).ok());
    }
}

TEST_CASE("pace header and comments") {
    auto td = io::td_from_pace("c a comment\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    REQUIRE(td.bags == std::vector<VertexSet>{{0, 1}, {1, 2}});
    REQUIRE(td.tree.has_edge(0, 1));
    REQUIRE_THROWS_AS(io::td_from_pace("b 1 1 2\n"), parse_error);
}

TEST_CASE("certificate json shapes") {
    auto cut = cutsize_exact(path_graph(4));
    io::json jc = io::cutset_to_json(cut);
    REQUIRE(jc["value"] == 1);
    REQUIRE(jc["S"] == io::json::array({1}));

    auto bs = balanced_separator_min(path_graph(5));
    io::json jb = io::bsep_to_json(bs.separator);
    REQUIRE(jb["size"] == 1);
    REQUIRE(jb.contains("A"));
    REQUIRE(jb.contains("B"));

    auto cw = cutwidth_exact(path_graph(4));
    io::json jl = io::layout_to_json(cw.layout, cw.value, "cutwidth");
    REQUIRE(jl["parameter"] == "cutwidth");
    REQUIRE(jl["order"].size() == 4);
}

TEST_CASE("grading and gluing spec round trips") {
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    TreeGrading tg{bowtie, {{0, 1, 2}, {2, 3, 4}}};
    TreeGrading back = io::grading_from_json(io::grading_to_json(tg));
    REQUIRE(back.host == tg.host);
    REQUIRE(back.pieces == tg.pieces);

    GluingSpec spec;
    spec.templates.emplace("C3", complete_graph(3));
    spec.templates.emplace("K2", complete_graph(2));
    spec.node_template = {"C3", "K2"};
    spec.edges.push_back({0, 1, 2, 0});
    GluingSpec sback = io::gluing_spec_from_json(io::gluing_spec_to_json(spec));
    REQUIRE(sback.node_template == spec.node_template);
    REQUIRE(sback.templates.at("C3") == complete_graph(3));
    REQUIRE(sback.edges.size() == 1);
    REQUIRE(sback.edges[0].parent_vertex == 2);
    REQUIRE(compose(sback).grading.host == compose(spec).grading.host);
}

TEST_CASE("group spec round trips") {
    GroupSpec z;
    z.kind = GroupKind::CyclicInfinite;
    REQUIRE(io::group_spec_from_json(io::group_spec_to_json(z)).kind ==
            GroupKind::CyclicInfinite);

    GroupSpec z3;
    z3.kind = GroupKind::FiniteTable;
    z3.order = 3;
    z3.table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    z3.gens = {1, 2};
    GroupSpec back = io::group_spec_from_json(io::group_spec_to_json(z3));
    REQUIRE(back.order == 3);
    REQUIRE(back.table == z3.table);
    REQUIRE(back.gens == z3.gens);

    io::json pair = {{"g", io::group_spec_to_json(z3)}, {"h", io::group_spec_to_json(z)}};
    auto fp = io::free_product_spec_from_json(pair);
    REQUIRE(fp.g.kind == GroupKind::FiniteTable);
    REQUIRE(fp.h.kind == GroupKind::CyclicInfinite);

    REQUIRE_THROWS_AS(io::group_spec_from_json(io::parse_json_text("{\"kind\":\"nope\"}")),
                      parse_error);
}

TEST_CASE("profile csv is stable") {
    auto p = tw_profile(cycle_graph(6), 6);
    std::string csv = io::profile_to_csv(p);
    REQUIRE(csv == "k,value,flag,witness\n"
                   "1,0,exact,0\n"
                   "2,1,exact,0 5\n"
                   "3,1,exact,0 5\n"
                   "4,1,exact,0 5\n"
                   "5,1,exact,0 5\n"
                   "6,2,exact,0 1 2 3 4 5\n");
}

TEST_CASE("digest is stable") {
    REQUIRE(io::fnv1a_hex("") == "cbf29ce484222325");
    REQUIRE(io::fnv1a_hex("sepwidth") != io::fnv1a_hex("sepwidth "));
}
