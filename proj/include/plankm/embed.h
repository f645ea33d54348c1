#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "plankm/error.h"

namespace plankm {

constexpr std::size_t NONE = std::numeric_limits<std::size_t>::max();

/// Edge of an embedded graph. Lengths are strictly positive reals or the
/// INFINITE sentinel (never a large float); `synthetic` marks edges added by
/// triangulation or other internal surgery.
struct Edge {
    std::size_t u = NONE;
    std::size_t v = NONE;
    double length = 0.0;
    bool infinite = false;
    bool synthetic = false;

    std::size_t other(std::size_t w) const { return w == u ? v : u; }
};

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

/// A face traced from the rotation system: the cyclic sequence of darts with
/// this face on their left.
struct Face {
    std::vector<std::size_t> darts;
    std::size_t size() const { return darts.size(); }
};

/// Dual multigraph: one vertex per face of the primal, one edge per primal
/// edge (the bijection is by index).
struct DualGraph {
    std::size_t num_faces = 0;
    /// endpoint faces of the dual edge for primal edge i (left of dart 2i,
    /// left of dart 2i+1); equal entries are loops.
    std::vector<std::pair<std::size_t, std::size_t>> edge_faces;
    std::vector<std::vector<std::size_t>> incident; // face -> primal edge ids
};

/// Planar graph with edge lengths and a combinatorial embedding (rotation
/// system). Immutable after construction; all surgery returns a new graph.
///
/// Darts: edge e owns darts 2e (origin edge.u) and 2e+1 (origin edge.v).
/// sigma(d) is the next dart counterclockwise around the origin of d, and
/// faces are the orbits of d -> sigma(alpha(d)) (face on the left of d).
class EmbeddedGraph {
public:
    EmbeddedGraph() = default; // empty graph

    /// Build from an explicit rotation system: per vertex, the incident edge
    /// ids in counterclockwise cyclic order. Validates simplicity,
    /// connectivity and the Euler relation.
    static EmbeddedGraph from_rotation(std::size_t vertex_count,
                                       const std::vector<Edge>& edges,
                                       const std::vector<std::vector<std::size_t>>& rotation);

    /// Build from straight-line coordinates; the rotation is derived by
    /// sorting incident edges by angle.
    static EmbeddedGraph from_coordinates(const std::vector<Coord>& coords,
                                          const std::vector<Edge>& edges);

    std::size_t num_vertices() const { return vertex_count_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_darts() const { return 2 * edges_.size(); }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_coordinates() const { return !coords_.empty(); }
    const Coord& coordinate(std::size_t v) const { return coords_[v]; }

    std::size_t dart_edge(std::size_t d) const { return d / 2; }
    std::size_t dart_origin(std::size_t d) const {
        const Edge& e = edges_[d / 2];
        return (d & 1) ? e.v : e.u;
    }
    std::size_t dart_target(std::size_t d) const { return dart_origin(d ^ 1); }
    static std::size_t alpha(std::size_t d) { return d ^ 1; }
    std::size_t sigma(std::size_t d) const { return sigma_[d]; }
    std::size_t dart_of(std::size_t e, std::size_t origin) const {
        return 2 * e + (edges_[e].u == origin ? 0 : 1);
    }

    /// Some dart with the given origin, or NONE for isolated vertices.
    std::size_t first_dart(std::size_t v) const { return vertex_dart_[v]; }
    std::size_t degree(std::size_t v) const;
    /// Incident edges in rotation order.
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t edge_between(std::size_t u, std::size_t v) const;

    const std::vector<Face>& faces() const { return faces_; }
    std::size_t face_of_dart(std::size_t d) const { return face_of_dart_[d]; }

    bool connected() const;
    std::vector<std::size_t> component_of(std::vector<std::size_t>& comp_count) const;

    /// Triangulation with synthetic INFINITE edges: chords between
    /// non-adjacent corners, star vertex fallback for unchordable faces.
    EmbeddedGraph triangulated() const;

    /// Split one finite edge at 0 < offset < length. Returns the new graph
    /// and the id of the inserted degree-2 vertex.
    std::pair<EmbeddedGraph, std::size_t> subdivide_edge(std::size_t e, double offset) const;

    /// Bulk subdivision: for each edge a sorted list of distinct offsets.
    /// Returns the new graph plus, per input edge, the vertex placed at each
    /// offset (aligned with the offset list).
    EmbeddedGraph subdivide_edges(const std::vector<std::vector<double>>& offsets,
                                  std::vector<std::vector<std::size_t>>* placed) const;

    DualGraph dual() const;

    EmbeddedGraph scaled(double factor) const;
    EmbeddedGraph clipped(double threshold) const;

    /// Induced embedded subgraph on `keep` (old vertex ids). `old_vertex`
    /// receives new-id -> old-id.
    EmbeddedGraph induced(const std::vector<std::size_t>& keep,
                          std::vector<std::size_t>* old_vertex) const;

    /// Contract the given edges (each merged into its lower-numbered side's
    /// representative), dropping loops and keeping parallel edges. Returns
    /// the contracted embedded multigraph and old-vertex -> new-vertex map.
    EmbeddedGraph contract_edges(const std::vector<std::size_t>& contract,
                                 std::vector<std::size_t>* vertex_map) const;

    /// Remove loops and all but the first of each parallel bundle, keeping
    /// the embedding. Vertex set unchanged.
    EmbeddedGraph simplified() const;

private:
    static EmbeddedGraph from_darts(std::size_t vertex_count,
                                    std::vector<Edge> edges,
                                    std::vector<Coord> coords,
                                    const std::vector<std::vector<std::size_t>>& darts,
                                    bool require_simple,
                                    bool require_connected);
    void trace_faces();
    void validate_euler() const;

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Coord> coords_;
    std::vector<std::size_t> sigma_;
    std::vector<std::size_t> vertex_dart_;
    std::vector<Face> faces_;
    std::vector<std::size_t> face_of_dart_;

    friend class MapSurgeon;
};

} // namespace plankm
