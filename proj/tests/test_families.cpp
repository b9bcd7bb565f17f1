#include <catch2/catch_amalgamated.hpp>

#include "specgraph/families.hpp"
#include "specgraph/graph6.hpp"

using namespace specgraph;

TEST_CASE("base case is the bipartite complete graph minus one edge") {
    auto b6 = build_bn(6);
    REQUIRE(graph6_encode(b6.graph) == "EBz_");
    REQUIRE(b6.graph.size() == 8);
    REQUIRE_FALSE(b6.graph.has_edge(0, 3));
    REQUIRE(b6.parts.side == std::vector<int>{0, 0, 0, 1, 1, 1});
    REQUIRE(unsaturated_vertices(b6.graph, 3) == std::vector<int>{0, 3});
}

TEST_CASE("odd orders hang a pendant off the last open slot") {
    auto b7 = build_bn(7);
    REQUIRE(graph6_encode(b7.graph) == "FBz__");
    REQUIRE(b7.graph.has_edge(3, 6));
    REQUIRE(b7.graph.degree(6) == 1);
    REQUIRE(b7.parts.side[6] == 0);
    REQUIRE(unsaturated_vertices(b7.graph, 3) == std::vector<int>{0, 6});

    auto b9 = build_bn(9);
    REQUIRE(graph6_encode(b9.graph) == "HBz_cC@");
    REQUIRE(b9.graph.has_edge(7, 8));
    REQUIRE(unsaturated_vertices(b9.graph, 3) == std::vector<int>{6, 8});

    REQUIRE(graph6_encode(build_bn(11).graph) == "JBz_cC@?g?_");
    REQUIRE(unsaturated_vertices(build_bn(11).graph, 3) == std::vector<int>{8, 10});
}

TEST_CASE("even orders close both open slots at once") {
    auto b8 = build_bn(8);
    REQUIRE(graph6_encode(b8.graph) == "GBz_cC");
    REQUIRE(b8.graph.has_edge(0, 7));
    REQUIRE(b8.graph.has_edge(6, 7));
    REQUIRE(unsaturated_vertices(b8.graph, 3) == std::vector<int>{6, 7});

    REQUIRE(graph6_encode(build_bn(10).graph) == "IBz_cC@?g");
    REQUIRE(unsaturated_vertices(build_bn(10).graph, 3) == std::vector<int>{8, 9});
    REQUIRE(graph6_encode(build_bn(12).graph) == "KBz_cC@?g?_D");
    REQUIRE(unsaturated_vertices(build_bn(12).graph, 3) == std::vector<int>{10, 11});
}

TEST_CASE("the family stays connected subcubic bipartite with two open slots") {
    for (int n = 6; n <= 40; ++n) {
        auto bn = build_bn(n);
        REQUIRE(bn.graph.order() == n);
        REQUIRE(is_connected(bn.graph));
        REQUIRE(bn.graph.max_degree() == 3);
        REQUIRE(bipartition(bn.graph).is_bipartite());
        for (auto [u, v] : bn.graph.edges()) REQUIRE(bn.parts.side[u] != bn.parts.side[v]);
        auto uns = unsaturated_vertices(bn.graph, 3);
        REQUIRE(uns.size() == 2);
        if (n % 2 == 0)
            REQUIRE(bn.parts.side[uns[0]] != bn.parts.side[uns[1]]);
        else
            REQUIRE(bn.parts.side[uns[0]] == bn.parts.side[uns[1]]);
    }
}

TEST_CASE("construction rejects short orders") {
    REQUIRE_THROWS_AS(build_bn(5), std::invalid_argument);
    REQUIRE_THROWS_AS(unsaturated_vertices(build_bn(6).graph, 2), std::invalid_argument);
}

TEST_CASE("family catalog") {
    REQUIRE(graph6_encode(build_family({Family::path, 1, 0, 0})) == "@");
    REQUIRE(build_family({Family::cycle, 3, 0, 0}).size() == 3);
    REQUIRE(build_family({Family::complete, 6, 0, 0}).size() == 15);
    Graph kme = build_family({Family::complete_minus_edge, 5, 0, 0});
    REQUIRE(kme.size() == 9);
    REQUIRE_FALSE(kme.has_edge(0, 1));
    Graph kab = build_family({Family::complete_bipartite, 0, 2, 4});
    REQUIRE(kab.order() == 6);
    REQUIRE(kab.size() == 8);
    REQUIRE(kab.has_edge(0, 2));
    REQUIRE_FALSE(kab.has_edge(0, 1));
    Graph star = build_family({Family::star, 5, 0, 0});
    REQUIRE(star.order() == 6);
    REQUIRE(star.degree(0) == 5);
    Graph q4 = build_family({Family::hypercube, 4, 0, 0});
    REQUIRE(q4.order() == 16);
    REQUIRE(q4.size() == 32);
    REQUIRE(q4.is_regular());
    Graph pet = build_family({Family::petersen, 0, 0, 0});
    REQUIRE(pet.order() == 10);
    REQUIRE(pet.size() == 15);
    REQUIRE(pet.is_regular());
    REQUIRE_FALSE(bipartition(pet).is_bipartite());
}

TEST_CASE("family validation") {
    REQUIRE_THROWS_AS(build_family({Family::path, 0, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_family({Family::cycle, 2, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_family({Family::complete_minus_edge, 2, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_family({Family::complete_bipartite, 0, 0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_family({Family::star, 0, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_family({Family::hypercube, 17, 0, 0}), std::invalid_argument);
}

TEST_CASE("family names resolve") {
    REQUIRE(family_from_name("bn") == Family::bn);
    REQUIRE(family_from_name("petersen") == Family::petersen);
    REQUIRE(family_from_name("complete_bipartite") == Family::complete_bipartite);
    REQUIRE_THROWS_AS(family_from_name("moebius"), std::invalid_argument);
}
