#include "doctest.h"

#include <set>

#include "helpers.h"
#include "plankm/embed.h"

using namespace plankm;
using namespace plankm::testing;

TEST_CASE("square from coordinates has two faces") {
    EmbeddedGraph g = square_graph();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.faces().size() == 2);
}

TEST_CASE("K4 has four faces") {
    EmbeddedGraph g = k4_graph();
    CHECK(g.faces().size() == 4);
    for (const Face& f : g.faces()) CHECK(f.size() == 3);
}

TEST_CASE("3x3 grid has five faces") {
    EmbeddedGraph g = grid_graph(3, 3);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 12);
    CHECK(g.faces().size() == 5);
}

TEST_CASE("explicit rotation matches the coordinate embedding of K4") {
    std::vector<Edge> edges{{0, 1, 1.0, false, false}, {0, 2, 1.0, false, false},
                            {0, 3, 1.0, false, false}, {1, 2, 1.0, false, false},
                            {1, 3, 1.0, false, false}, {2, 3, 1.0, false, false}};
    std::vector<std::vector<std::size_t>> rot{{0, 2, 1}, {3, 4, 0}, {1, 5, 3}, {2, 4, 5}};
    EmbeddedGraph g = EmbeddedGraph::from_rotation(4, edges, rot);
    CHECK(g.faces().size() == 4);
}

TEST_CASE("non-planar rotation is rejected") {
    // K4 with one vertex's cyclic order flipped embeds with positive genus.
    std::vector<Edge> edges{{0, 1, 1.0, false, false}, {0, 2, 1.0, false, false},
                            {0, 3, 1.0, false, false}, {1, 2, 1.0, false, false},
                            {1, 3, 1.0, false, false}, {2, 3, 1.0, false, false}};
    std::vector<std::vector<std::size_t>> rot{{0, 2, 1}, {3, 4, 0}, {1, 5, 3}, {2, 5, 4}};
    CHECK_THROWS_AS(EmbeddedGraph::from_rotation(4, edges, rot), Error);
}

TEST_CASE("duplicate edges are rejected") {
    std::vector<Coord> coords{{0, 0}, {1, 0}, {0, 1}};
    std::vector<Edge> edges{{0, 1, 1.0, false, false},
                            {1, 2, 1.0, false, false},
                            {0, 1, 2.0, false, false}};
    CHECK_THROWS_AS(EmbeddedGraph::from_coordinates(coords, edges), Error);
}

TEST_CASE("face walk lengths sum to twice the edge count") {
    for (const EmbeddedGraph& g :
         {square_graph(), k4_graph(), grid_graph(3, 3), grid_graph(4, 5)}) {
        std::size_t total = 0;
        for (const Face& f : g.faces()) total += f.size();
        CHECK(total == 2 * g.num_edges());
    }
}

TEST_CASE("triangulating the square adds one chord per quad face") {
    EmbeddedGraph t = square_graph().triangulated();
    CHECK(t.num_edges() == 6);
    CHECK(t.faces().size() == 4);
    std::size_t synthetic = 0;
    for (const Edge& e : t.edges()) {
        if (e.synthetic) {
            ++synthetic;
            CHECK(e.infinite);
        }
    }
    CHECK(synthetic == 2);
}

TEST_CASE("triangulating K4 is the identity") {
    EmbeddedGraph t = k4_graph().triangulated();
    CHECK(t.num_edges() == 6);
    CHECK(t.num_vertices() == 4);
    for (const Edge& e : t.edges()) CHECK(!e.synthetic);
}

TEST_CASE("triangulating the 3x3 grid adds nine synthetic edges") {
    // Ear-by-ear sweep: one chord per inner square, five for the outer 8-gon.
    EmbeddedGraph t = grid_graph(3, 3).triangulated();
    std::size_t synthetic = 0;
    for (const Edge& e : t.edges()) synthetic += e.synthetic ? 1 : 0;
    CHECK(synthetic == 9);
    for (const Face& f : t.faces()) CHECK(f.size() == 3);
    // Euler after the fact.
    CHECK(t.num_vertices() - t.num_edges() + t.faces().size() == 2);
}

TEST_CASE("triangulation keeps the graph simple") {
    for (std::size_t w = 2; w <= 5; ++w) {
        for (std::size_t h = 2; h <= 5; ++h) {
            EmbeddedGraph t = grid_graph(w, h).triangulated();
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (const Edge& e : t.edges()) {
                auto key = std::minmax(e.u, e.v);
                CHECK(e.u != e.v);
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("trees triangulate via chords") {
    EmbeddedGraph p = path_graph({1.0, 1.0});
    EmbeddedGraph t = p.triangulated();
    for (const Face& f : t.faces()) CHECK(f.size() == 3);
    CHECK(t.num_vertices() - t.num_edges() + t.faces().size() == 2);
}

TEST_CASE("subdividing splits lengths at the offset") {
    EmbeddedGraph g = path_graph({10.0});
    auto [h, x] = g.subdivide_edge(0, 4.0);
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 2);
    std::multiset<double> lens;
    for (const Edge& e : h.edges()) lens.insert(e.length);
    CHECK(lens == std::multiset<double>{4.0, 6.0});
    CHECK(h.degree(x) == 2);
}

TEST_CASE("subdivision rejects bad offsets and INFINITE edges") {
    EmbeddedGraph g = path_graph({10.0});
    CHECK_THROWS_AS(g.subdivide_edge(0, 0.0), Error);
    CHECK_THROWS_AS(g.subdivide_edge(0, 10.0), Error);
    EmbeddedGraph t = square_graph().triangulated();
    for (std::size_t e = 0; e < t.num_edges(); ++e) {
        if (t.edge(e).infinite) {
            CHECK_THROWS_AS(t.subdivide_edge(e, 0.5), Error);
            break;
        }
    }
}

TEST_CASE("subdividing preserves distances between original vertices") {
    EmbeddedGraph g = grid_graph(3, 3);
    auto before = floyd_warshall(g);
    auto [h, x] = g.subdivide_edge(3, 0.25);
    (void)x;
    auto after = floyd_warshall(h);
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            CHECK(after[u][v] == doctest::Approx(before[u][v]).epsilon(1e-12));
        }
    }
}

TEST_CASE("subdividing all triangle edges at midpoints keeps corner distances") {
    std::vector<Coord> coords{{0, 0}, {1, 0}, {0.5, 1}};
    std::vector<Edge> edges{{0, 1, 2.0, false, false},
                            {1, 2, 3.0, false, false},
                            {0, 2, 4.0, false, false}};
    EmbeddedGraph g = EmbeddedGraph::from_coordinates(coords, edges);
    auto before = floyd_warshall(g);
    std::vector<std::vector<double>> offs{{1.0}, {1.5}, {2.0}};
    std::vector<std::vector<std::size_t>> placed;
    EmbeddedGraph h = g.subdivide_edges(offs, &placed);
    CHECK(h.num_vertices() == 6);
    CHECK(h.num_edges() == 6);
    auto after = floyd_warshall(h);
    for (std::size_t u = 0; u < 3; ++u) {
        for (std::size_t v = 0; v < 3; ++v) {
            CHECK(after[u][v] == before[u][v]);
        }
    }
}

TEST_CASE("K4 is self-dual") {
    EmbeddedGraph g = k4_graph();
    DualGraph d = g.dual();
    CHECK(d.num_faces == 4);
    CHECK(d.edge_faces.size() == g.num_edges());
    // Every dual vertex has degree 3 and all dual edges join distinct faces.
    for (const auto& inc : d.incident) CHECK(inc.size() == 3);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto [a, b] : d.edge_faces) {
        CHECK(a != b);
        pairs.insert(std::minmax(a, b));
    }
    CHECK(pairs.size() == 6);
}

TEST_CASE("triangle dual is two vertices with three parallel edges") {
    std::vector<Coord> coords{{0, 0}, {1, 0}, {0.5, 1}};
    std::vector<Edge> edges{{0, 1, 1.0, false, false},
                            {1, 2, 1.0, false, false},
                            {0, 2, 1.0, false, false}};
    DualGraph d = EmbeddedGraph::from_coordinates(coords, edges).dual();
    CHECK(d.num_faces == 2);
    for (auto [a, b] : d.edge_faces) CHECK(a != b);
}

TEST_CASE("dual of the triangulated grid matches its face count") {
    EmbeddedGraph t = grid_graph(3, 3).triangulated();
    DualGraph d = t.dual();
    CHECK(d.num_faces == t.faces().size());
    CHECK(d.num_faces == 2 + t.num_edges() - t.num_vertices());
}

TEST_CASE("scaling and clipping adjust lengths") {
    EmbeddedGraph g = path_graph({1.0, 5.0});
    EmbeddedGraph s = g.scaled(2.0);
    CHECK(s.edge(0).length == 2.0);
    CHECK(s.edge(1).length == 10.0);
    CHECK_THROWS_AS(g.scaled(0.0), Error);

    EmbeddedGraph c = g.clipped(3.0);
    CHECK(!c.edge(0).infinite);
    CHECK(c.edge(1).infinite);
    EmbeddedGraph all = g.clipped(0.0);
    CHECK(all.edge(0).infinite);
    EmbeddedGraph none = g.clipped(5.0);
    CHECK(!none.edge(1).infinite);
}

TEST_CASE("contracting a grid cell keeps a valid embedding") {
    EmbeddedGraph g = grid_graph(3, 3);
    std::vector<std::size_t> vmap;
    EmbeddedGraph h = g.contract_edges({0, 1}, &vmap);
    CHECK(h.num_vertices() == 7);
    CHECK(vmap[0] == vmap[1]);
    EmbeddedGraph simple = h.simplified();
    for (const Edge& e : simple.edges()) CHECK(e.u != e.v);
}
