#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.h"
#include "plankm/metric.h"

using namespace plankm;
using namespace plankm::testing;

TEST_CASE("path distances and parents") {
    EmbeddedGraph g = path_graph({1.0, 2.0});
    ShortestPathTree t = shortest_path_tree(g, 0);
    CHECK(t.dist[2] == 3.0);
    CHECK(t.parent_vertex[2] == 1);
    CHECK(t.path_to(2) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("tie on the unit 4-cycle resolves lexicographically") {
    EmbeddedGraph g = square_graph();
    ShortestPathTree t = shortest_path_tree(g, 0);
    CHECK(t.dist[2] == 2.0);
    // Paths 0-1-2 and 0-3-2 tie numerically; the smaller tag wins.
    CHECK(t.parent_vertex[2] == 1);

    // Same square with the edge list permuted: identical parents.
    std::vector<Coord> coords{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Edge> edges{{2, 3, 1.0, false, false},
                            {3, 0, 1.0, false, false},
                            {0, 1, 1.0, false, false},
                            {1, 2, 1.0, false, false}};
    EmbeddedGraph p = EmbeddedGraph::from_coordinates(coords, edges);
    ShortestPathTree tp = shortest_path_tree(p, 0);
    CHECK(tp.parent_vertex == t.parent_vertex);
}

TEST_CASE("grid distances match the Floyd-Warshall oracle") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::GridRandomWeights;
    spec.width = 3;
    spec.height = 3;
    spec.seed = 7;
    EmbeddedGraph g = generate(spec).graph;
    auto oracle = floyd_warshall(g);
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        ShortestPathTree t = shortest_path_tree(g, s);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            CHECK(t.dist[v] == doctest::Approx(oracle[s][v]).epsilon(1e-12));
        }
    }
    // Symmetry and the triangle inequality on the oracle matrix itself.
    for (std::size_t a = 0; a < g.num_vertices(); ++a) {
        for (std::size_t b = 0; b < g.num_vertices(); ++b) {
            CHECK(oracle[a][b] == oracle[b][a]);
            for (std::size_t c = 0; c < g.num_vertices(); ++c) {
                CHECK(oracle[a][b] <= oracle[a][c] + oracle[c][b] + 1e-9);
            }
        }
    }
}

TEST_CASE("dijkstra equals Bellman-Ford on mid-size graphs") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::GridRandomWeights;
    spec.width = 7;
    spec.height = 7;
    spec.seed = 21;
    EmbeddedGraph g = generate(spec).graph;
    for (std::size_t s : {std::size_t{0}, std::size_t{24}, std::size_t{48}}) {
        auto oracle = bellman_ford(g, s);
        ShortestPathTree t = shortest_path_tree(g, s);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            CHECK(t.dist[v] == doctest::Approx(oracle[v]).epsilon(1e-12));
        }
    }
}

TEST_CASE("unit-weight ties produce a unique parent function") {
    // Many equal-length paths; the parent function must be invariant under
    // permutations of the edge input order.
    GeneratorSpec spec;
    spec.width = 5;
    spec.height = 5;
    EmbeddedGraph g = generate(spec).graph;
    ShortestPathTree base = shortest_path_tree(g, 0);

    std::vector<Coord> coords;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) coords.push_back(g.coordinate(v));
    std::vector<Edge> edges = g.edges();
    std::mt19937_64 mix(123);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(edges.begin(), edges.end(), mix);
        EmbeddedGraph p = EmbeddedGraph::from_coordinates(coords, edges);
        ShortestPathTree t = shortest_path_tree(p, 0);
        CHECK(t.parent_vertex == base.parent_vertex);
        CHECK(t.dist == base.dist);
    }
}

TEST_CASE("multi-source owner ties break toward the smaller site") {
    EmbeddedGraph g = path_graph({1.0, 1.0});
    ShortestPathTree t = multi_source_tree(g, {0, 2});
    CHECK(t.owner[1] == 0);
    CHECK(t.owner[0] == 0);
    CHECK(t.owner[2] == 2);
}

TEST_CASE("unreachable vertices are flagged") {
    EmbeddedGraph g = path_graph({1.0, 5.0}).clipped(3.0);
    ShortestPathTree t = shortest_path_tree(g, 0);
    CHECK(t.reached[1]);
    CHECK(!t.reached[2]);
}

TEST_CASE("levels follow the strict inequality") {
    LevelScale half(0.5);
    CHECK(half.level(0.5) == 0);
    CHECK(half.level(0.0) == 0);
    CHECK(half.level(1.0) == 1);
    CHECK(half.level(1.5 * 1.5 * 1.5) == 4);

    LevelScale tiny(0.01);
    CHECK(tiny.level(0.999) == 0);
    for (double c : {1.0, 1.2, 3.7, 100.0, 12345.6}) {
        int l = tiny.level(c);
        CHECK(c < tiny.power(l));
        if (l > 0) CHECK(c >= tiny.power(l - 1));
    }
    // Exact powers land strictly above their own exponent.
    for (int i = 0; i < 40; ++i) {
        CHECK(half.level(half.power(i)) == i + 1);
    }
    CHECK_THROWS_AS(half.level(testing::INF), Error);
}

TEST_CASE("level is monotone") {
    LevelScale s(0.25);
    int prev = 0;
    for (double c = 0.0; c < 50.0; c += 0.37) {
        int l = s.level(c);
        CHECK(l >= prev);
        prev = l;
    }
}

TEST_CASE("scaling multiplies distances") {
    EmbeddedGraph g = grid_graph(3, 3);
    EmbeddedGraph doubled = scale_lengths(g, 2.0);
    ShortestPathTree a = shortest_path_tree(g, 0);
    ShortestPathTree b = shortest_path_tree(doubled, 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        CHECK(b.dist[v] == 2.0 * a.dist[v]);
    }
    EmbeddedGraph same = scale_lengths(g, 1.0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        CHECK(same.edge(e).length == g.edge(e).length);
    }
}

TEST_CASE("clipping splits the path instance") {
    EmbeddedGraph g = path_graph({1.0, 5.0});
    EmbeddedGraph c = clip_long_edges(g, 3.0);
    ShortestPathTree t = shortest_path_tree(c, 0);
    CHECK(!t.reached[2]);
}
