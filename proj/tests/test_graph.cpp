#include <sstream>

#include "doctest.h"
#include "polarmin/errors.hpp"
#include "polarmin/graph.hpp"
#include "polarmin/graphgen.hpp"

using namespace polarmin;

namespace {
Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}
}  // namespace

TEST_CASE("edge list: basic parse") {
    Graph g = from_text("0 1\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.m == 2);
    CHECK(g.edges[0].w == 1.0);
    CHECK(g.w_min == 1.0);
    CHECK(g.w_max == 1.0);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("edge list: duplicate pairs merge by weight sum") {
    Graph g = from_text("0 1 2.0\n1 0 3.0\n");
    CHECK(g.n == 2);
    CHECK(g.m == 1);
    CHECK(g.edges[0].w == doctest::Approx(5.0));
}

TEST_CASE("edge list: self-loops dropped, vertices kept") {
    Graph g = from_text("1 1\n2 3\n");
    CHECK(g.n == 3);  // vertex 1 survives even though its only line is a loop
    CHECK(g.m == 1);
    CHECK(g.labels == std::vector<long long>{1, 2, 3});
}

TEST_CASE("edge list: comments, blanks, weights") {
    Graph g = from_text("# heading\n% also a comment\n\n0 1 0.5\n\n1 2 2.5\n");
    CHECK(g.n == 3);
    CHECK(g.m == 2);
    CHECK(g.w_min == doctest::Approx(0.5));
    CHECK(g.w_max == doctest::Approx(2.5));
}

TEST_CASE("edge list: malformed lines carry the line number") {
    CHECK_THROWS_AS(from_text("0 1\nx 2\n"), ParseError);
    try {
        from_text("0 1\nx 2\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(from_text("0 1 2.0 extra\n"), ParseError);
    CHECK_THROWS_AS(from_text("0\n"), ParseError);
}

TEST_CASE("edge list: nonpositive weights rejected") {
    CHECK_THROWS_AS(from_text("0 1 0\n"), ValidationError);
    CHECK_THROWS_AS(from_text("0 1 -2\n"), ValidationError);
}

TEST_CASE("edge list: ids compacted in ascending original order") {
    Graph g = from_text("10 30\n30 20\n");
    CHECK(g.n == 3);
    CHECK(g.labels == std::vector<long long>{10, 20, 30});
    CHECK(g.has_edge(0, 2));  // 10-30
    CHECK(g.has_edge(1, 2));  // 20-30
}

TEST_CASE("make_graph merges parallel edges and rejects loops") {
    Graph g = make_graph(3, {{2, 0, 1.0}, {0, 2, 0.5}, {0, 1, 1.0}});
    CHECK(g.m == 2);
    CHECK(g.edges[1].w == doctest::Approx(1.5));  // (0,2) merged
    CHECK_THROWS_AS(make_graph(2, {{0, 0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(make_graph(2, {{0, 2, 1.0}}), ValidationError);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(from_text("0 1\n1 2\n")));
    CHECK(!is_connected(from_text("0 1\n2 3\n")));
}

TEST_CASE("largest connected component: two triangles and a path tail") {
    // components {0,1,2} and {3,4,5,6}; the larger one wins
    Graph g = from_text("0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n5 6\n");
    std::vector<std::pair<long long, int>> mapping;
    Graph lcc = largest_connected_component(g, &mapping);
    CHECK(lcc.n == 4);
    CHECK(lcc.m == 4);
    CHECK(lcc.labels == std::vector<long long>{3, 4, 5, 6});
    REQUIRE(mapping.size() == 4);
    CHECK(mapping[0] == std::pair<long long, int>{3, 0});
    CHECK(mapping[3] == std::pair<long long, int>{6, 3});
}

TEST_CASE("largest connected component: ties go to the smallest original id") {
    Graph g = from_text("4 5\n0 1\n");
    Graph lcc = largest_connected_component(g);
    CHECK(lcc.n == 2);
    CHECK(lcc.labels == std::vector<long long>{0, 1});
}

TEST_CASE("id mapping writer") {
    std::ostringstream out;
    write_id_mapping({{7, 0}, {9, 1}}, out);
    CHECK(out.str() == "7 0\n9 1\n");
}

TEST_CASE("bundled social network dataset") {
    Graph g = load_edge_list(std::string(POLARMIN_DATA_DIR) + "/karate.txt");
    CHECK(g.n == 34);
    CHECK(g.m == 78);
    CHECK(is_connected(g));
    auto deg = [&](int v) { return g.adjacency[v].size(); };
    CHECK(deg(0) == 16);
    CHECK(deg(33) == 17);
    CHECK(deg(32) == 12);
}

TEST_CASE("generators: shapes and determinism") {
    CHECK(path_graph(5).m == 4);
    CHECK(cycle_graph(5).m == 5);
    CHECK(star_graph(6).m == 6);
    CHECK(star_graph(6).n == 7);
    CHECK(complete_graph(5).m == 10);
    CHECK(grid_graph(3, 4).n == 12);
    CHECK(grid_graph(3, 4).m == 17);  // 3*3 + 2*4
    Graph t = balanced_binary_tree(3);
    CHECK(t.n == 15);
    CHECK(t.m == 14);
    Graph r1 = ring_with_chords(50, 2, 9);
    Graph r2 = ring_with_chords(50, 2, 9);
    CHECK(r1.m == r2.m);
    CHECK(r1.m == 50 + 100);
    CHECK(is_connected(r1));
    Graph s = sparse_random_graph(60, 4.0, 11);
    CHECK(is_connected(s));
    CHECK(s.n == 60);
    Graph w = randomize_weights(s, 0.5, 2.0, 3);
    CHECK(w.m == s.m);
    CHECK(w.w_min >= 0.5);
    CHECK(w.w_max <= 2.0);
}
