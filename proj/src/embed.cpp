#include "plankm/embed.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace plankm {

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

} // namespace

// ════════════════════════════════════════════════════════════════════
//  MapSurgeon: mutable rotation-system scratchpad behind the immutable
//  EmbeddedGraph. All surgery is expressed as sigma-cycle splices; the
//  result is rebuilt (and re-validated) through from_darts().
// ════════════════════════════════════════════════════════════════════

class MapSurgeon {
public:
    explicit MapSurgeon(const EmbeddedGraph& g)
        : edges(g.edges_),
          coords(g.coords_),
          vertex_count(g.vertex_count_),
          sigma(g.sigma_),
          prev(g.sigma_.size()),
          dead_dart(g.sigma_.size(), false) {
        for (std::size_t d = 0; d < sigma.size(); ++d) prev[sigma[d]] = d;
        vertex_dart = g.vertex_dart_;
    }

    std::vector<Edge> edges;
    std::vector<Coord> coords;
    std::size_t vertex_count;
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> prev;
    std::vector<bool> dead_dart;
    std::vector<std::size_t> vertex_dart;

    std::size_t dart_origin(std::size_t d) const {
        const Edge& e = edges[d / 2];
        return (d & 1) ? e.v : e.u;
    }

    std::size_t add_vertex(std::optional<Coord> c) {
        std::size_t v = vertex_count++;
        vertex_dart.push_back(NONE);
        if (!coords.empty()) coords.push_back(c.value_or(Coord{}));
        return v;
    }

    /// Append an edge and return its index; darts are registered but not yet
    /// linked into any rotation.
    std::size_t add_edge(Edge e) {
        std::size_t idx = edges.size();
        edges.push_back(e);
        sigma.push_back(NONE);
        sigma.push_back(NONE);
        prev.push_back(NONE);
        prev.push_back(NONE);
        dead_dart.push_back(false);
        dead_dart.push_back(false);
        return idx;
    }

    /// Insert dart `d` immediately after `after` in the rotation of their
    /// shared origin. `after == NONE` starts a singleton cycle.
    void insert_after(std::size_t d, std::size_t after) {
        if (after == NONE) {
            sigma[d] = d;
            prev[d] = d;
        } else {
            sigma[d] = sigma[after];
            prev[sigma[after]] = d;
            sigma[after] = d;
            prev[d] = after;
        }
        std::size_t v = dart_origin(d);
        if (vertex_dart[v] == NONE) vertex_dart[v] = d;
    }

    /// Unlink dart `d` from its rotation cycle.
    void remove_dart(std::size_t d) {
        std::size_t v = dart_origin(d);
        if (sigma[d] == d) {
            if (vertex_dart[v] == d) vertex_dart[v] = NONE;
        } else {
            sigma[prev[d]] = sigma[d];
            prev[sigma[d]] = prev[d];
            if (vertex_dart[v] == d) vertex_dart[v] = sigma[d];
        }
        dead_dart[d] = true;
    }

    std::vector<std::size_t> rotation_list(std::size_t v) const {
        std::vector<std::size_t> out;
        std::size_t start = vertex_dart[v];
        if (start == NONE) return out;
        std::size_t d = start;
        do {
            out.push_back(d);
            d = sigma[d];
        } while (d != start);
        return out;
    }

    EmbeddedGraph finish(bool require_simple, bool require_connected) const;
};

// ── Construction ──────────────────────────────────────────────────

EmbeddedGraph MapSurgeon::finish(bool require_simple, bool require_connected) const {
    // Compact surviving edges.
    std::vector<std::size_t> edge_map(edges.size(), NONE);
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (dead_dart[2 * e]) continue;
        edge_map[e] = kept.size();
        kept.push_back(edges[e]);
    }
    std::vector<std::vector<std::size_t>> darts(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        for (std::size_t d : rotation_list(v)) {
            darts[v].push_back(2 * edge_map[d / 2] + (d & 1));
        }
    }
    return EmbeddedGraph::from_darts(vertex_count, std::move(kept), coords, darts,
                                     require_simple, require_connected);
}

EmbeddedGraph EmbeddedGraph::from_darts(std::size_t vertex_count,
                                        std::vector<Edge> edges,
                                        std::vector<Coord> coords,
                                        const std::vector<std::vector<std::size_t>>& darts,
                                        bool require_simple,
                                        bool require_connected) {
    EmbeddedGraph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.coords_ = std::move(coords);
    g.sigma_.assign(2 * g.edges_.size(), NONE);
    g.vertex_dart_.assign(vertex_count, NONE);

    for (const Edge& e : g.edges_) {
        require(e.u < vertex_count && e.v < vertex_count, ErrorCode::InvalidArgument,
                "edge endpoint out of range");
        require(e.infinite || e.length > 0.0, ErrorCode::InvalidArgument,
                "finite edge length must be positive");
    }
    if (require_simple) {
        std::unordered_set<std::uint64_t> seen;
        for (const Edge& e : g.edges_) {
            require(e.u != e.v, ErrorCode::DuplicateEdge, "loop edge in simple graph");
            require(seen.insert(pair_key(e.u, e.v)).second, ErrorCode::DuplicateEdge,
                    "duplicate edge in simple graph");
        }
    }

    std::vector<bool> placed(2 * g.edges_.size(), false);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        const auto& list = darts[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::size_t d = list[i];
            require(d < 2 * g.edges_.size() && !placed[d], ErrorCode::InvalidArgument,
                    "rotation lists must mention each edge end exactly once");
            require(g.dart_origin(d) == v, ErrorCode::InvalidArgument,
                    "rotation entry does not originate at its vertex");
            placed[d] = true;
            g.sigma_[d] = list[(i + 1) % list.size()];
        }
        if (!list.empty()) g.vertex_dart_[v] = list[0];
    }
    for (std::size_t d = 0; d < placed.size(); ++d) {
        require(placed[d], ErrorCode::InvalidArgument, "edge end missing from rotation");
    }

    g.trace_faces();
    g.validate_euler();
    if (require_connected) {
        require(g.connected(), ErrorCode::Disconnected, "graph must be connected");
    }
    return g;
}

EmbeddedGraph EmbeddedGraph::from_rotation(std::size_t vertex_count,
                                           const std::vector<Edge>& edges,
                                           const std::vector<std::vector<std::size_t>>& rotation) {
    require(rotation.size() == vertex_count, ErrorCode::InvalidArgument,
            "rotation must list every vertex");
    std::vector<std::vector<std::size_t>> darts(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        for (std::size_t e : rotation[v]) {
            require(e < edges.size(), ErrorCode::InvalidArgument, "rotation names unknown edge");
            require(edges[e].u == v || edges[e].v == v, ErrorCode::InvalidArgument,
                    "rotation names non-incident edge");
            darts[v].push_back(2 * e + (edges[e].u == v ? 0 : 1));
        }
    }
    return from_darts(vertex_count, edges, {}, darts, true, true);
}

EmbeddedGraph EmbeddedGraph::from_coordinates(const std::vector<Coord>& coords,
                                              const std::vector<Edge>& edges) {
    std::size_t n = coords.size();
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        require(edges[e].u < n && edges[e].v < n, ErrorCode::InvalidArgument,
                "edge endpoint out of range");
        incident[edges[e].u].push_back(e);
        incident[edges[e].v].push_back(e);
    }
    std::vector<std::vector<std::size_t>> darts(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = incident[v];
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            std::size_t wa = edges[a].other(v), wb = edges[b].other(v);
            double ta = std::atan2(coords[wa].y - coords[v].y, coords[wa].x - coords[v].x);
            double tb = std::atan2(coords[wb].y - coords[v].y, coords[wb].x - coords[v].x);
            if (ta != tb) return ta < tb;
            if (wa != wb) return wa < wb;
            return a < b;
        });
        for (std::size_t e : list) {
            darts[v].push_back(2 * e + (edges[e].u == v ? 0 : 1));
        }
    }
    return from_darts(n, edges, coords, darts, true, true);
}

// ── Faces and validation ──────────────────────────────────────────

void EmbeddedGraph::trace_faces() {
    faces_.clear();
    face_of_dart_.assign(num_darts(), NONE);
    for (std::size_t d0 = 0; d0 < num_darts(); ++d0) {
        if (face_of_dart_[d0] != NONE) continue;
        Face f;
        std::size_t d = d0;
        do {
            face_of_dart_[d] = faces_.size();
            f.darts.push_back(d);
            d = sigma_[alpha(d)];
        } while (d != d0);
        faces_.push_back(std::move(f));
    }
}

void EmbeddedGraph::validate_euler() const {
    // Euler relation checked per connected component (isolated vertices are
    // single-point components with one face).
    std::vector<std::size_t> comp(vertex_count_, NONE);
    std::size_t comp_count = 0;
    for (std::size_t s = 0; s < vertex_count_; ++s) {
        if (comp[s] != NONE) continue;
        std::size_t c = comp_count++;
        std::queue<std::size_t> q;
        comp[s] = c;
        q.push(s);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            std::size_t start = vertex_dart_[v];
            if (start == NONE) continue;
            std::size_t d = start;
            do {
                std::size_t w = dart_target(d);
                if (comp[w] == NONE) {
                    comp[w] = c;
                    q.push(w);
                }
                d = sigma_[d];
            } while (d != start);
        }
    }
    std::vector<long long> vs(comp_count, 0), es(comp_count, 0), fs(comp_count, 0);
    for (std::size_t v = 0; v < vertex_count_; ++v) vs[comp[v]]++;
    for (const Edge& e : edges_) es[comp[e.u]]++;
    for (const Face& f : faces_) fs[comp[dart_origin(f.darts[0])]]++;
    for (std::size_t c = 0; c < comp_count; ++c) {
        if (vs[c] == 1 && es[c] == 0) continue; // isolated vertex
        require(vs[c] - es[c] + fs[c] == 2, ErrorCode::NonPlanarRotation,
                "rotation system violates the Euler relation");
    }
}

std::size_t EmbeddedGraph::degree(std::size_t v) const {
    std::size_t start = vertex_dart_[v];
    if (start == NONE) return 0;
    std::size_t deg = 0, d = start;
    do {
        ++deg;
        d = sigma_[d];
    } while (d != start);
    return deg;
}

std::vector<std::size_t> EmbeddedGraph::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    std::size_t start = vertex_dart_[v];
    if (start == NONE) return out;
    std::size_t d = start;
    do {
        out.push_back(d / 2);
        d = sigma_[d];
    } while (d != start);
    return out;
}

bool EmbeddedGraph::adjacent(std::size_t u, std::size_t v) const {
    return edge_between(u, v) != NONE;
}

std::size_t EmbeddedGraph::edge_between(std::size_t u, std::size_t v) const {
    std::size_t start = vertex_dart_[u];
    if (start == NONE) return NONE;
    std::size_t d = start;
    do {
        if (dart_target(d) == v) return d / 2;
        d = sigma_[d];
    } while (d != start);
    return NONE;
}

bool EmbeddedGraph::connected() const {
    if (vertex_count_ == 0) return true;
    std::vector<std::size_t> counts;
    component_of(counts);
    return counts.size() <= 1;
}

std::vector<std::size_t> EmbeddedGraph::component_of(std::vector<std::size_t>& comp_count) const {
    // comp_count receives the vertex count of each component.
    std::vector<std::size_t> comp(vertex_count_, NONE);
    comp_count.clear();
    for (std::size_t s = 0; s < vertex_count_; ++s) {
        if (comp[s] != NONE) continue;
        std::size_t c = comp_count.size();
        comp_count.push_back(0);
        std::queue<std::size_t> q;
        comp[s] = c;
        q.push(s);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            comp_count[c]++;
            std::size_t start = vertex_dart_[v];
            if (start == NONE) continue;
            std::size_t d = start;
            do {
                std::size_t w = dart_target(d);
                if (comp[w] == NONE) {
                    comp[w] = c;
                    q.push(w);
                }
                d = sigma_[d];
            } while (d != start);
        }
    }
    return comp;
}

// ── Triangulation ─────────────────────────────────────────────────

EmbeddedGraph EmbeddedGraph::triangulated() const {
    MapSurgeon s(*this);
    std::unordered_set<std::uint64_t> adj;
    for (const Edge& e : edges_) adj.insert(pair_key(e.u, e.v));

    std::vector<std::vector<std::size_t>> work;
    for (const Face& f : faces_) {
        if (f.size() > 3) work.push_back(f.darts);
    }

    auto corner = [&](const std::vector<std::size_t>& walk, std::size_t i) {
        return s.dart_origin(walk[i]);
    };

    while (!work.empty()) {
        std::vector<std::size_t> walk = std::move(work.back());
        work.pop_back();
        std::size_t n = walk.size();
        if (n <= 3) continue;

        // Chord search: ears first, then any non-adjacent corner pair.
        std::size_t ci = NONE, cj = NONE;
        for (std::size_t gap = 2; gap + 1 < n && ci == NONE; ++gap) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = (i + gap) % n;
                std::size_t a = corner(walk, i), b = corner(walk, j);
                if (a == b) continue;
                if (adj.count(pair_key(a, b))) continue;
                ci = i;
                cj = j;
                break;
            }
        }

        if (ci != NONE) {
            std::size_t a = corner(walk, ci), b = corner(walk, cj);
            std::size_t e = s.add_edge(Edge{a, b, 0.0, true, true});
            std::size_t c = 2 * e;       // a -> b
            std::size_t cr = 2 * e + 1;  // b -> a
            // Insert into the face wedge at each endpoint.
            std::size_t before_i = walk[(ci + n - 1) % n];
            std::size_t before_j = walk[(cj + n - 1) % n];
            s.insert_after(c, alpha(before_i));
            s.insert_after(cr, alpha(before_j));
            adj.insert(pair_key(a, b));

            std::vector<std::size_t> fa, fb;
            for (std::size_t t = ci; t != cj; t = (t + 1) % n) fa.push_back(walk[t]);
            fa.push_back(cr);
            for (std::size_t t = cj; t != ci; t = (t + 1) % n) fb.push_back(walk[t]);
            fb.push_back(c);
            if (fa.size() > 3) work.push_back(std::move(fa));
            if (fb.size() > 3) work.push_back(std::move(fb));
            continue;
        }

        // No simple chord exists: star the face from a fresh center vertex.
        std::unordered_set<std::size_t> distinct;
        for (std::size_t i = 0; i < n; ++i) distinct.insert(corner(walk, i));
        require(distinct.size() == n, ErrorCode::CannotTriangulate,
                "face with repeated corners admits no simple triangulation");
        std::optional<Coord> center;
        if (!s.coords.empty()) {
            Coord c{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) {
                c.x += s.coords[corner(walk, i)].x;
                c.y += s.coords[corner(walk, i)].y;
            }
            c.x /= static_cast<double>(n);
            c.y /= static_cast<double>(n);
            center = c;
        }
        std::size_t x = s.add_vertex(center);
        std::vector<std::size_t> spoke_dart(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t w = corner(walk, i);
            std::size_t e = s.add_edge(Edge{w, x, 0.0, true, true});
            std::size_t before = walk[(i + n - 1) % n];
            s.insert_after(2 * e, alpha(before)); // dart w -> x in the wedge
            spoke_dart[i] = 2 * e + 1;            // dart x -> w
        }
        // Rotation at the center runs in reverse walk order so that each
        // triangle (w_i, w_{i+1}, x) closes.
        s.insert_after(spoke_dart[n - 1], NONE);
        for (std::size_t i = n - 1; i-- > 0;) {
            s.insert_after(spoke_dart[i], spoke_dart[i + 1]);
        }
    }

    return s.finish(true, true);
}

// ── Subdivision ───────────────────────────────────────────────────

std::pair<EmbeddedGraph, std::size_t> EmbeddedGraph::subdivide_edge(std::size_t e,
                                                                    double offset) const {
    require(e < edges_.size(), ErrorCode::InvalidArgument, "edge out of range");
    require(!edges_[e].infinite, ErrorCode::InfiniteLength,
            "cannot subdivide an INFINITE edge");
    require(offset > 0.0 && offset < edges_[e].length, ErrorCode::InvalidArgument,
            "subdivision offset out of range");
    std::vector<std::vector<double>> offsets(edges_.size());
    offsets[e] = {offset};
    std::vector<std::vector<std::size_t>> placed;
    EmbeddedGraph g = subdivide_edges(offsets, &placed);
    return {std::move(g), placed[e][0]};
}

EmbeddedGraph EmbeddedGraph::subdivide_edges(const std::vector<std::vector<double>>& offsets,
                                             std::vector<std::vector<std::size_t>>* placed) const {
    require(offsets.size() == edges_.size(), ErrorCode::InvalidArgument,
            "offset table must cover every edge");
    std::vector<Edge> edges = edges_;
    std::vector<Coord> coords = coords_;
    std::size_t vertex_count = vertex_count_;

    // Start from the current rotation lists; dart ids of original edges stay
    // valid because subdivision only rewrites one endpoint's entry.
    std::vector<std::vector<std::size_t>> darts(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        std::size_t start = vertex_dart_[v];
        if (start == NONE) continue;
        std::size_t d = start;
        do {
            darts[v].push_back(d);
            d = sigma_[d];
        } while (d != start);
    }

    if (placed) placed->assign(edges_.size(), {});

    for (std::size_t e = 0; e < offsets.size(); ++e) {
        const auto& offs = offsets[e];
        if (offs.empty()) continue;
        require(!edges_[e].infinite, ErrorCode::InfiniteLength,
                "cannot subdivide an INFINITE edge");
        double len = edges_[e].length;
        for (std::size_t i = 0; i < offs.size(); ++i) {
            require(offs[i] > 0.0 && offs[i] < len, ErrorCode::InvalidArgument,
                    "subdivision offset out of range");
            require(i == 0 || offs[i] > offs[i - 1], ErrorCode::InvalidArgument,
                    "subdivision offsets must be strictly increasing");
        }

        std::size_t u = edges_[e].u, v = edges_[e].v;
        bool synthetic = edges_[e].synthetic;
        std::size_t m = offs.size();
        std::vector<std::size_t> chain(m);
        for (std::size_t i = 0; i < m; ++i) {
            chain[i] = vertex_count++;
            darts.emplace_back();
            if (!coords.empty()) {
                double t = offs[i] / len;
                coords.push_back(Coord{coords[u].x + t * (coords[v].x - coords[u].x),
                                       coords[u].y + t * (coords[v].y - coords[u].y)});
            }
        }
        if (placed) (*placed)[e] = chain;

        // Edge e keeps its id for the first segment; the rest are appended.
        edges[e] = Edge{u, chain[0], offs[0], false, synthetic};
        std::size_t prev_vertex = chain[0];
        std::size_t prev_dart_back = 2 * e + 1; // chain[0] -> u
        for (std::size_t i = 1; i <= m; ++i) {
            std::size_t to = (i == m) ? v : chain[i];
            double seg = (i == m ? len : offs[i]) - offs[i - 1];
            std::size_t ne = edges.size();
            edges.push_back(Edge{prev_vertex, to, seg, false, synthetic});
            // Degree-2 rotation at prev_vertex: [toward u side, toward v side].
            darts[prev_vertex] = {prev_dart_back, 2 * ne};
            prev_vertex = to;
            prev_dart_back = 2 * ne + 1;
        }
        // v's rotation entry for dart 2e+1 becomes the last segment's dart.
        for (auto& d : darts[v]) {
            if (d == 2 * e + 1) d = prev_dart_back;
        }
    }

    return from_darts(vertex_count, std::move(edges), std::move(coords), darts, false, false);
}

// ── Dual, scaling, clipping ───────────────────────────────────────

DualGraph EmbeddedGraph::dual() const {
    DualGraph d;
    d.num_faces = faces_.size();
    d.edge_faces.resize(edges_.size());
    d.incident.resize(faces_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::size_t f1 = face_of_dart_[2 * e];
        std::size_t f2 = face_of_dart_[2 * e + 1];
        d.edge_faces[e] = {f1, f2};
        d.incident[f1].push_back(e);
        if (f2 != f1) d.incident[f2].push_back(e);
    }
    return d;
}

EmbeddedGraph EmbeddedGraph::scaled(double factor) const {
    require(factor > 0.0, ErrorCode::InvalidArgument, "scale factor must be positive");
    EmbeddedGraph g = *this;
    for (Edge& e : g.edges_) {
        if (!e.infinite) e.length *= factor;
    }
    return g;
}

EmbeddedGraph EmbeddedGraph::clipped(double threshold) const {
    require(threshold >= 0.0, ErrorCode::InvalidArgument, "threshold must be nonnegative");
    EmbeddedGraph g = *this;
    for (Edge& e : g.edges_) {
        if (!e.infinite && e.length > threshold) e.infinite = true;
    }
    return g;
}

// ── Induced subgraph, contraction, simplification ─────────────────

EmbeddedGraph EmbeddedGraph::induced(const std::vector<std::size_t>& keep,
                                     std::vector<std::size_t>* old_vertex) const {
    std::vector<std::size_t> new_id(vertex_count_, NONE);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] < vertex_count_ && new_id[keep[i]] == NONE,
                ErrorCode::InvalidArgument, "induced vertex list must be unique");
        new_id[keep[i]] = i;
    }
    std::vector<std::size_t> edge_map(edges_.size(), NONE);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (new_id[edges_[e].u] == NONE || new_id[edges_[e].v] == NONE) continue;
        edge_map[e] = edges.size();
        Edge ne = edges_[e];
        ne.u = new_id[ne.u];
        ne.v = new_id[ne.v];
        edges.push_back(ne);
    }
    std::vector<Coord> coords;
    if (!coords_.empty()) {
        coords.reserve(keep.size());
        for (std::size_t v : keep) coords.push_back(coords_[v]);
    }
    std::vector<std::vector<std::size_t>> darts(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::size_t start = vertex_dart_[keep[i]];
        if (start == NONE) continue;
        std::size_t d = start;
        do {
            if (edge_map[d / 2] != NONE) {
                darts[i].push_back(2 * edge_map[d / 2] + (d & 1));
            }
            d = sigma_[d];
        } while (d != start);
    }
    if (old_vertex) *old_vertex = keep;
    return from_darts(keep.size(), std::move(edges), std::move(coords), darts, false, false);
}

EmbeddedGraph EmbeddedGraph::contract_edges(const std::vector<std::size_t>& contract,
                                            std::vector<std::size_t>* vertex_map) const {
    MapSurgeon s(*this);
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    // Unlink a dart from its cycle, maintaining vertex_dart under the
    // representative index (the raw origin may already be merged away).
    auto unlink = [&](std::size_t d, std::size_t rep) {
        if (s.sigma[d] == d) {
            s.vertex_dart[rep] = NONE;
        } else {
            s.sigma[s.prev[d]] = s.sigma[d];
            s.prev[s.sigma[d]] = s.prev[d];
            if (s.vertex_dart[rep] == d) s.vertex_dart[rep] = s.sigma[d];
        }
        s.dead_dart[d] = true;
    };

    for (std::size_t e : contract) {
        require(e < edges_.size(), ErrorCode::InvalidArgument, "contract edge out of range");
        std::size_t a = 2 * e, b = 2 * e + 1;
        std::size_t u = find(s.dart_origin(a)), v = find(s.dart_origin(b));
        if (u == v) {
            // Already merged: the edge is a loop now; just drop its darts.
            unlink(a, u);
            unlink(b, u);
            continue;
        }
        std::size_t keep = std::min(u, v), gone = std::max(u, v);
        // Splice the two rotations together while removing both darts.
        std::size_t sa = s.sigma[a], sb = s.sigma[b];
        std::size_t pa = s.prev[a], pb = s.prev[b];
        if (sa == a && sb == b) {
            s.vertex_dart[u] = NONE;
            s.vertex_dart[v] = NONE;
        } else if (sa == a) {
            s.sigma[pb] = sb;
            s.prev[sb] = pb;
            s.vertex_dart[u] = sb;
            s.vertex_dart[v] = sb;
        } else if (sb == b) {
            s.sigma[pa] = sa;
            s.prev[sa] = pa;
            s.vertex_dart[u] = sa;
            s.vertex_dart[v] = sa;
        } else {
            s.sigma[pa] = sb;
            s.prev[sb] = pa;
            s.sigma[pb] = sa;
            s.prev[sa] = pb;
            s.vertex_dart[u] = sa;
            s.vertex_dart[v] = sa;
        }
        s.dead_dart[a] = true;
        s.dead_dart[b] = true;
        parent[gone] = keep;
        s.vertex_dart[keep] = s.vertex_dart[u];
    }

    // Dense ids for representatives, in ascending old-id order.
    std::vector<std::size_t> rep_id(vertex_count_, NONE);
    std::size_t next = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (find(v) == v) rep_id[v] = next++;
    }
    std::vector<std::size_t> vmap(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) vmap[v] = rep_id[find(v)];
    if (vertex_map) *vertex_map = vmap;

    // Rebuild: surviving edges remapped onto representatives.
    std::vector<std::size_t> edge_map(s.edges.size(), NONE);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        if (s.dead_dart[2 * e]) continue;
        edge_map[e] = edges.size();
        Edge ne = s.edges[e];
        ne.u = vmap[ne.u];
        ne.v = vmap[ne.v];
        edges.push_back(ne);
    }
    std::vector<Coord> coords;
    if (!coords_.empty()) {
        coords.resize(next);
        for (std::size_t v = 0; v < vertex_count_; ++v) {
            if (find(v) == v) coords[rep_id[v]] = coords_[v];
        }
    }
    std::vector<std::vector<std::size_t>> darts(next);
    std::vector<bool> done(vertex_count_, false);
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        std::size_t r = find(v);
        if (done[r]) continue;
        done[r] = true;
        std::size_t start = s.vertex_dart[r];
        if (start == NONE) continue;
        std::size_t d = start;
        do {
            darts[rep_id[r]].push_back(2 * edge_map[d / 2] + (d & 1));
            d = s.sigma[d];
        } while (d != start);
    }
    return from_darts(next, std::move(edges), std::move(coords), darts, false, false);
}

EmbeddedGraph EmbeddedGraph::simplified() const {
    MapSurgeon s(*this);
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u == ed.v || !seen.insert(pair_key(ed.u, ed.v)).second) {
            s.remove_dart(2 * e);
            s.remove_dart(2 * e + 1);
        }
    }
    return s.finish(false, false);
}

} // namespace plankm
