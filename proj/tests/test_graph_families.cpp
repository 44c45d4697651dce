#include <catch2/catch_amalgamated.hpp>

#include <morsetilings/complex.hpp>
#include <morsetilings/families.hpp>
#include <morsetilings/graph.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>

using namespace morsetilings;

TEST_CASE("graph basics: ids, labels, validation", "[graph]") {
    Graph g;
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_vertex("z");
    int e0 = g.add_edge(0, 1, "xy");
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edge(e0).u == 0);
    CHECK(g.edge(e0).v == 1);
    CHECK(g.edge_label(e0) == "xy");
    CHECK(g.edge_by_label("xy") == e0);
    CHECK(g.vertex_label(2) == "z");
    REQUIRE(g.vertex_by_label("y").has_value());
    CHECK(*g.vertex_by_label("y") == 1);
    CHECK_FALSE(g.vertex_by_label("w").has_value());

    SECTION("loops, duplicate edges, duplicate labels rejected") {
        CHECK_THROWS_AS(g.add_edge(1, 1, "loop"), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(1, 0, "again"), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(1, 2, "xy"), std::invalid_argument);
        CHECK_THROWS_AS(g.add_vertex("x"), std::invalid_argument);
    }

    SECTION("neighborhoods and degrees") {
        g.add_edge(1, 2, "yz");
        CHECK(g.neighborhood(1) == std::vector<int>{0, 2});
        CHECK(g.degree(1) == 2);
        CHECK(g.degree(2) == 1);
    }
}

TEST_CASE("2 x n grid strip", "[families]") {
    SECTION("smallest strips") {
        Graph g1 = grid_2xn(1);
        CHECK(g1.vertex_count() == 2);
        REQUIRE(g1.edges().size() == 1);
        CHECK(g1.edge_label(0) == "a_1");
        CHECK_THROWS_AS(grid_2xn(0), std::invalid_argument);
    }
    SECTION("labels and incidences for n = 3") {
        Graph g = grid_2xn(3);
        REQUIRE(g.vertex_count() == 6);
        REQUIRE(g.edges().size() == 7);
        // verticals a_i join p_{i,1} to p_{i,2}
        for (int i = 1; i <= 3; ++i) {
            int e = g.edge_by_label(detail::sub1("a", i));
            auto lo = g.vertex_by_label("p_{" + std::to_string(i) + ",1}");
            auto hi = g.vertex_by_label("p_{" + std::to_string(i) + ",2}");
            REQUIRE(lo);
            REQUIRE(hi);
            std::set<int> ends{g.edge(e).u, g.edge(e).v};
            CHECK(ends == std::set<int>{*lo, *hi});
        }
        // b_i runs along the upper row, c_i along the lower
        int b1 = g.edge_by_label("b_1");
        CHECK(g.vertex_label(g.edge(b1).u).find(",2}") != std::string::npos);
        CHECK(g.vertex_label(g.edge(b1).v).find(",2}") != std::string::npos);
        int c2 = g.edge_by_label("c_2");
        CHECK(g.vertex_label(g.edge(c2).u).find(",1}") != std::string::npos);
        CHECK(g.vertex_label(g.edge(c2).v).find(",1}") != std::string::npos);
    }
    SECTION("counts scale as 2n vertices, 3n-2 edges") {
        for (int n = 1; n <= 10; ++n) {
            Graph g = grid_2xn(n);
            CHECK(static_cast<int>(g.vertex_count()) == 2 * n);
            CHECK(static_cast<int>(g.edges().size()) == 3 * n - 2);
        }
    }
}

TEST_CASE("m x n grid", "[families]") {
    Graph g = grid_mxn(3, 3);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edges().size() == 12);
    CHECK(g.family() == "gridmn");
    CHECK_THROWS_AS(grid_mxn(0, 2), std::invalid_argument);
    // corner has degree 2, center degree 4
    auto corner = g.vertex_by_label("v_{1,1}");
    auto center = g.vertex_by_label("v_{2,2}");
    REQUIRE(corner);
    REQUIRE(center);
    CHECK(g.degree(*corner) == 2);
    CHECK(g.degree(*center) == 4);
}

TEST_CASE("cycles and paths", "[families]") {
    Graph c6 = cycle(6);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edges().size() == 6);
    std::set<std::string> labels;
    for (const auto& e : c6.edges()) labels.insert(e.label);
    CHECK(labels == std::set<std::string>{"a", "b", "c", "d", "e", "f"});
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    Graph c4 = cycle(4);
    CHECK(c4.has_edge_label("e_1"));
    CHECK(c4.has_edge_label("e_4"));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    Graph p3 = path(3);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edges().size() == 2);
    CHECK(p3.degree(*p3.vertex_by_label("2")) == 2);
}

TEST_CASE("even tilings of 2n-gons", "[families][tilings]") {
    SECTION("frozen counts") {
        Graph g32 = even_tiling(3, 2);
        CHECK(g32.vertex_count() == 10);
        CHECK(g32.edges().size() == 11);
        Graph g43 = even_tiling(4, 3);
        CHECK(g43.vertex_count() == 20);
        CHECK(g43.edges().size() == 22);
    }
    SECTION("count formulas V = 2(n-1)k + 2, E = (2n-1)k + 1") {
        for (int n = 3; n <= 5; ++n)
            for (int k = 2; k <= 3; ++k) {
                Graph g = even_tiling(n, k);
                CHECK(static_cast<int>(g.vertex_count()) == 2 * (n - 1) * k + 2);
                CHECK(static_cast<int>(g.edges().size()) == (2 * n - 1) * k + 1);
            }
    }
    SECTION("each polygon closes into a 2n-cycle") {
        int n = 4, k = 3;
        Graph g = even_tiling(n, k);
        for (int j = 1; j <= k; ++j) {
            // walk a_j, the b_{j,*} row, a_{j+1}, back along c_{j,*}
            std::set<int> cyc_edges;
            cyc_edges.insert(g.edge_by_label(detail::sub1("a", j)));
            cyc_edges.insert(g.edge_by_label(detail::sub1("a", j + 1)));
            for (int t = 1; t <= n - 1; ++t) {
                cyc_edges.insert(g.edge_by_label(detail::sub2("b", j, t)));
                cyc_edges.insert(g.edge_by_label(detail::sub2("c", j, t)));
            }
            REQUIRE(cyc_edges.size() == static_cast<std::size_t>(2 * n));
            // every vertex touched by those edges is touched exactly twice
            std::map<int, int> touch;
            for (int e : cyc_edges) {
                touch[g.edge(e).u]++;
                touch[g.edge(e).v]++;
            }
            for (const auto& [v, cnt] : touch) CHECK(cnt == 2);
        }
    }
    SECTION("degenerate parameters rejected") {
        CHECK_THROWS_AS(even_tiling(2, 2), std::invalid_argument);
        CHECK_THROWS_AS(even_tiling(3, 1), std::invalid_argument);
    }
}

TEST_CASE("odd tilings, simple and alternate", "[families][tilings]") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= 2; ++k) {
            Graph s = odd_tiling_simple(n, k);
            Graph a = odd_tiling_alternate(n, k);
            CHECK(static_cast<int>(s.vertex_count()) == 2 + 2 * k * (2 * n - 1));
            CHECK(static_cast<int>(s.edges().size()) == 4 * k * n + 1);
            CHECK(s.vertex_count() == a.vertex_count());
            CHECK(s.edges().size() == a.edges().size());
            // 2k polygons means 2k+1 attaching edges
            for (int i = 1; i <= 2 * k + 1; ++i) {
                CHECK(s.has_edge_label(detail::sub1("a", i)));
                CHECK(a.has_edge_label(detail::sub1("a", i)));
            }
        }
    SECTION("frozen counts at n=2, k=2") {
        Graph s = odd_tiling_simple(2, 2);
        CHECK(s.vertex_count() == 14);
        CHECK(s.edges().size() == 17);
    }
    SECTION("simple vs alternate differ in the row split") {
        // polygon 2: simple keeps n upper edges, alternate drops to n-1
        Graph s = odd_tiling_simple(3, 2);
        Graph a = odd_tiling_alternate(3, 2);
        CHECK(s.has_edge_label("b_{2,3}"));
        CHECK_FALSE(a.has_edge_label("b_{2,3}"));
        CHECK(a.has_edge_label("c_{2,3}"));
    }
}

TEST_CASE("triangle strips identify degenerate side endpoints", "[families][tilings]") {
    for (int k = 2; k <= 5; ++k) {
        Graph g = triangle_tiling(k);
        CHECK(static_cast<int>(g.vertex_count()) == 2 * k + 2);
        CHECK(static_cast<int>(g.edges().size()) == 4 * k + 1);
    }
    Graph g = triangle_tiling(2);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edges().size() == 9);
    // each triangle's three sides form a closed walk
    for (int j = 1; j <= 4; ++j) {
        std::vector<int> sides = {g.edge_by_label(detail::sub1("a", j)),
                                  g.edge_by_label(detail::sub1("a", j + 1)),
                                  g.edge_by_label(j % 2 == 1 ? detail::sub2("b", j, 1)
                                                             : detail::sub2("c", j, 1))};
        std::map<int, int> touch;
        for (int e : sides) {
            touch[g.edge(e).u]++;
            touch[g.edge(e).v]++;
        }
        REQUIRE(touch.size() == 3);
        for (const auto& [v, cnt] : touch) CHECK(cnt == 2);
    }
}

TEST_CASE("family descriptors round-trip through make_family", "[families]") {
    FamilyDescriptor d;
    d.family = Family::EvenTiling;
    d.params = {{"n", 3}, {"k", 2}};
    Graph g = make_family(d);
    CHECK(g.family() == "even-tiling");
    CHECK(g.params().at("n") == 3);
    CHECK(family_from_name("grid2") == Family::Grid2xN);
    CHECK(family_name(Family::TriangleTiling) == "triangles");
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
    FamilyDescriptor bad;
    bad.family = Family::Grid2xN;
    CHECK_THROWS_AS(make_family(bad), std::invalid_argument);
}

TEST_CASE("labeled isomorphism and vertex deletion", "[graph]") {
    Graph a = grid_2xn(4);
    Graph b = grid_2xn(4);
    CHECK(labeled_isomorphic(a, b));
    CHECK_FALSE(labeled_isomorphic(a, grid_2xn(5)));

    Graph c = a.without_vertex(*a.vertex_by_label("p_{4,1}"));
    CHECK(c.vertex_count() == 7);
    CHECK_FALSE(labeled_isomorphic(a, c));
    CHECK_FALSE(c.has_edge_label("a_4"));
    CHECK_FALSE(c.has_edge_label("c_3"));
    CHECK(c.has_edge_label("b_3"));
}

TEST_CASE("serialization: json and dot", "[graph][io]") {
    Graph g = grid_2xn(2);
    json j = graph_to_json(g);
    CHECK(j["family"] == "grid2");
    CHECK(j["params"]["n"] == 2);
    CHECK(j["vertices"].size() == 4);
    CHECK(j["edges"].size() == 4);
    // deterministic: same graph serializes to identical bytes
    CHECK(j.dump() == graph_to_json(grid_2xn(2)).dump());

    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("p_{2,1}") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 8);
}

TEST_CASE("auxiliary graph on grid edge labels", "[families][aux]") {
    // frozen vertex/edge counts
    const std::vector<std::array<int, 3>> frozen = {
        {2, 4, 4}, {3, 7, 12}, {4, 10, 20}, {5, 13, 28}, {6, 16, 36}, {7, 19, 44}, {8, 22, 52}};
    for (auto [n, V, E] : frozen) {
        Graph x = aux_graph_xn(n);
        CHECK(static_cast<int>(x.vertex_count()) == V);
        CHECK(static_cast<int>(x.edges().size()) == E);
    }
    SECTION("adjacency = shared endpoint or non-extendable pair") {
        Graph x = aux_graph_xn(4);
        auto adjacent = [&](const std::string& p, const std::string& q) {
            int u = *x.vertex_by_label(p), v = *x.vertex_by_label(q);
            auto nb = x.neighborhood(u);
            return std::find(nb.begin(), nb.end(), v) != nb.end();
        };
        CHECK(adjacent("a_1", "b_1"));       // share p_{1,2}
        CHECK(adjacent("b_1", "b_2"));       // share p_{2,2}
        CHECK(adjacent("b_1", "c_2"));       // non-extendable pair
        CHECK(adjacent("c_1", "b_2"));       // non-extendable pair
        CHECK_FALSE(adjacent("b_1", "c_1")); // parallel rungs, extendable
        CHECK_FALSE(adjacent("a_1", "a_2")); // disjoint verticals
        CHECK_FALSE(adjacent("b_1", "b_3"));
    }
}
