#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "plankm/embed.h"
#include "plankm/metric.h"

namespace plankm {

/// Voronoi partition of the vertex set with respect to a site set: ownership
/// under the TieKey order plus the per-cell shortest-path trees (the
/// multi-source forest restricted to each cell).
struct VoronoiPartition {
    std::vector<std::size_t> sites; // sorted, unique
    ShortestPathTree forest;
    std::vector<std::vector<std::size_t>> cells; // aligned with sites, sorted

    std::size_t owner(std::size_t v) const { return forest.owner[v]; }
    std::size_t site_index(std::size_t site_vertex) const;
    /// Parent edges of the forest: exactly the union of the trees T(p).
    std::vector<std::size_t> tree_edges() const;
    /// Canonical shortest path from owner(u) to u.
    std::vector<std::size_t> spoke_path(std::size_t u) const { return forest.path_to(u); }
};

VoronoiPartition voronoi_partition(const EmbeddedGraph& g,
                                   const std::vector<std::size_t>& sites);

/// One edge of the Voronoi diagram multigraph, stored with its realizing
/// dual path. crossed_darts[t] is the dart of the crossed primal edge whose
/// left face is path_faces[t]; the cells flanking the oriented path are then
/// site_left = owner(target) and site_right = owner(origin) of every dart.
struct DiagramEdge {
    std::size_t f1 = NONE; // branching faces; f1 is the canonical start
    std::size_t f2 = NONE;
    std::vector<std::size_t> path_faces;    // f1, ..., f2
    std::vector<std::size_t> crossed_darts; // one per crossed primal edge
    std::size_t site_left = NONE;
    std::size_t site_right = NONE;

    std::size_t crossed_edge(std::size_t t) const { return crossed_darts[t] / 2; }
};

/// The diagram Vor_S: a connected 3-regular multigraph on branching nodes
/// (faces of G), with 2|S|-4 nodes and 3|S|-6 edges for |S| >= 3.
struct VoronoiDiagram {
    std::vector<std::size_t> branching_nodes; // face ids, ascending
    std::vector<DiagramEdge> edges;
    /// Per branching node: incident diagram edge ids (loops listed twice).
    std::vector<std::vector<std::size_t>> incident;

    std::size_t node_index(std::size_t face) const;
};

/// Degenerate site sets (|S| <= 2) yield no diagram; callers skip the
/// diamond machinery in that case.
std::optional<VoronoiDiagram> build_diagram(const EmbeddedGraph& g,
                                            const VoronoiPartition& part);

struct Incidence {
    std::size_t site = NONE;
    std::size_t corner = NONE; // vertex u on the branching face
    std::size_t face = NONE;
    std::vector<std::size_t> spoke; // canonical path site -> corner
    double spoke_length = 0.0;
};

/// Diamond of a diagram edge: four incidences in canonical order
/// (smaller-site side first, then smaller/start face), the two crossing
/// edges, the closed perimeter walk, and combinatorial membership.
struct Diamond {
    std::size_t diagram_edge = NONE;
    std::array<Incidence, 4> incidences;
    std::size_t cross_first = NONE; // primal edge ids
    std::size_t cross_last = NONE;
    std::vector<std::size_t> perimeter_walk; // closed vertex walk
    std::vector<std::size_t> perimeter_vertices; // sorted unique
    std::vector<std::size_t> perimeter_edges;    // sorted unique
    std::vector<std::size_t> interior_vertices;  // sorted
    std::vector<std::size_t> interior_faces;     // sorted
    std::vector<std::size_t> member_vertices;    // sorted: perimeter + interior

    bool contains(std::size_t v) const;
    bool strictly_interior(std::size_t v) const;
};

std::vector<Diamond> enumerate_diamonds(const EmbeddedGraph& g,
                                        const VoronoiPartition& part,
                                        const VoronoiDiagram& diagram);

/// Lemma-style separation check: for pairs (u in Diam(e), p in S) the
/// canonical shortest u-p path must intersect the perimeter.
struct SeparationReport {
    std::size_t checks = 0;
    // (diamond index, vertex, site) triples that failed; must stay empty.
    std::vector<std::array<std::size_t, 3>> violations;
};

SeparationReport check_perimeter_separation(const EmbeddedGraph& g,
                                            const VoronoiPartition& part,
                                            const std::vector<Diamond>& diamonds,
                                            std::size_t samples_per_diamond,
                                            std::uint64_t seed);

} // namespace plankm
