#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "plankm/embed.h"
#include "plankm/generator.h"
#include "plankm/instance.h"

namespace plankm::testing {

inline constexpr double INF = std::numeric_limits<double>::infinity();

/// w x h grid with unit lengths, embedded by coordinates.
inline EmbeddedGraph grid_graph(std::size_t w, std::size_t h) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Grid;
    spec.width = w;
    spec.height = h;
    spec.seed = 0;
    return generate(spec).graph;
}

inline EmbeddedGraph square_graph() {
    std::vector<Coord> coords{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Edge> edges{{0, 1, 1.0, false, false},
                            {1, 2, 1.0, false, false},
                            {2, 3, 1.0, false, false},
                            {3, 0, 1.0, false, false}};
    return EmbeddedGraph::from_coordinates(coords, edges);
}

inline EmbeddedGraph k4_graph() {
    std::vector<Coord> coords{{0, 0}, {4, 0}, {2, 4}, {2, 1.3}};
    std::vector<Edge> edges{{0, 1, 1.0, false, false}, {0, 2, 1.0, false, false},
                            {0, 3, 1.0, false, false}, {1, 2, 1.0, false, false},
                            {1, 3, 1.0, false, false}, {2, 3, 1.0, false, false}};
    return EmbeddedGraph::from_coordinates(coords, edges);
}

inline EmbeddedGraph path_graph(const std::vector<double>& lengths) {
    std::size_t n = lengths.size() + 1;
    std::vector<Coord> coords(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) coords[i] = Coord{static_cast<double>(i), 0.0};
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        edges.push_back(Edge{i, i + 1, lengths[i], false, false});
    }
    return EmbeddedGraph::from_coordinates(coords, edges);
}

/// Independent all-pairs oracle (Floyd-Warshall over finite edges).
inline std::vector<std::vector<double>> floyd_warshall(const EmbeddedGraph& g) {
    std::size_t n = g.num_vertices();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, INF));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0.0;
    for (const Edge& e : g.edges()) {
        if (e.infinite) continue;
        d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

/// Independent single-source oracle (Bellman-Ford).
inline std::vector<double> bellman_ford(const EmbeddedGraph& g, std::size_t source) {
    std::size_t n = g.num_vertices();
    std::vector<double> d(n, INF);
    d[source] = 0.0;
    for (std::size_t round = 0; round + 1 < n; ++round) {
        bool change = false;
        for (const Edge& e : g.edges()) {
            if (e.infinite) continue;
            if (d[e.u] + e.length < d[e.v]) {
                d[e.v] = d[e.u] + e.length;
                change = true;
            }
            if (d[e.v] + e.length < d[e.u]) {
                d[e.u] = d[e.v] + e.length;
                change = true;
            }
        }
        if (!change) break;
    }
    return d;
}

} // namespace plankm::testing
