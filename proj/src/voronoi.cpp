#include "plankm/voronoi.h"

#include <algorithm>
#include <queue>

#include "plankm/rng.h"

namespace plankm {

std::size_t VoronoiPartition::site_index(std::size_t site_vertex) const {
    auto it = std::lower_bound(sites.begin(), sites.end(), site_vertex);
    require(it != sites.end() && *it == site_vertex, ErrorCode::InvalidArgument,
            "not a site");
    return static_cast<std::size_t>(it - sites.begin());
}

std::vector<std::size_t> VoronoiPartition::tree_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < forest.parent_edge.size(); ++v) {
        if (forest.parent_edge[v] != NONE) out.push_back(forest.parent_edge[v]);
    }
    return out;
}

VoronoiPartition voronoi_partition(const EmbeddedGraph& g,
                                   const std::vector<std::size_t>& sites) {
    require(!sites.empty(), ErrorCode::InvalidArgument, "site set must be nonempty");
    VoronoiPartition part;
    part.sites = sites;
    std::sort(part.sites.begin(), part.sites.end());
    part.sites.erase(std::unique(part.sites.begin(), part.sites.end()), part.sites.end());
    part.forest = multi_source_tree(g, part.sites);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        require(part.forest.reached[v], ErrorCode::Unreachable,
                "every vertex must be at finite distance from the sites");
    }
    part.cells.assign(part.sites.size(), {});
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        part.cells[part.site_index(part.forest.owner[v])].push_back(v);
    }
    return part;
}

// ── Diagram construction ──────────────────────────────────────────

std::size_t VoronoiDiagram::node_index(std::size_t face) const {
    auto it = std::lower_bound(branching_nodes.begin(), branching_nodes.end(), face);
    require(it != branching_nodes.end() && *it == face, ErrorCode::InvalidArgument,
            "not a branching node");
    return static_cast<std::size_t>(it - branching_nodes.begin());
}

std::optional<VoronoiDiagram> build_diagram(const EmbeddedGraph& g,
                                            const VoronoiPartition& part) {
    if (part.sites.size() < 3) return std::nullopt;
    for (const Face& f : g.faces()) {
        require(f.size() == 3, ErrorCode::InvalidArgument,
                "diagram construction requires a triangulated graph");
    }

    // Dual minus the duals of all tree edges T(p).
    std::vector<bool> alive(g.num_edges(), true);
    for (std::size_t e : part.tree_edges()) alive[e] = false;

    std::size_t nfaces = g.faces().size();
    std::vector<std::size_t> deg(nfaces, 0);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!alive[e]) continue;
        deg[g.face_of_dart(2 * e)]++;
        deg[g.face_of_dart(2 * e + 1)]++;
    }

    // Exhaustively remove faces of degree 1.
    std::queue<std::size_t> q;
    for (std::size_t f = 0; f < nfaces; ++f) {
        if (deg[f] == 1) q.push(f);
    }
    while (!q.empty()) {
        std::size_t f = q.front();
        q.pop();
        if (deg[f] != 1) continue;
        for (std::size_t d : g.faces()[f].darts) {
            std::size_t e = d / 2;
            if (!alive[e]) continue;
            alive[e] = false;
            for (std::size_t side : {g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1)}) {
                if (--deg[side] == 1) q.push(side);
            }
            break;
        }
    }

    VoronoiDiagram dia;
    for (std::size_t f = 0; f < nfaces; ++f) {
        require(deg[f] == 0 || deg[f] == 2 || deg[f] == 3, ErrorCode::InvalidArgument,
                "pruned dual has unexpected degree");
        if (deg[f] == 3) dia.branching_nodes.push_back(f);
    }
    std::size_t s = part.sites.size();
    require(dia.branching_nodes.size() == 2 * s - 4, ErrorCode::InvalidArgument,
            "diagram branching-node count violates 2|S|-4");

    // Contract maximal 2-paths into diagram edges, retaining the realizing
    // dual path. Walks start from branching nodes in ascending face order.
    std::vector<bool> consumed(g.num_edges(), false);
    std::vector<bool> branching(nfaces, false);
    for (std::size_t f : dia.branching_nodes) branching[f] = true;

    auto alive_edges_of = [&](std::size_t f) {
        std::vector<std::size_t> out;
        for (std::size_t d : g.faces()[f].darts) {
            if (alive[d / 2]) out.push_back(d / 2);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    for (std::size_t f : dia.branching_nodes) {
        for (std::size_t e0 : alive_edges_of(f)) {
            if (consumed[e0]) continue;
            DiagramEdge de;
            de.path_faces.push_back(f);
            std::size_t cur_face = f;
            std::size_t cur_edge = e0;
            while (true) {
                consumed[cur_edge] = true;
                std::size_t d = 2 * cur_edge;
                if (g.face_of_dart(d) != cur_face) d ^= 1;
                require(g.face_of_dart(d) == cur_face, ErrorCode::InvalidArgument,
                        "dual walk lost its face");
                de.crossed_darts.push_back(d);
                std::size_t next_face = g.face_of_dart(d ^ 1);
                de.path_faces.push_back(next_face);
                if (branching[next_face]) break;
                // Degree-2 interior face: continue through its other edge.
                std::size_t other = NONE;
                for (std::size_t e : alive_edges_of(next_face)) {
                    if (!consumed[e]) other = std::min(other, e);
                }
                require(other != NONE, ErrorCode::InvalidArgument,
                        "dual walk stuck at interior face");
                cur_face = next_face;
                cur_edge = other;
            }
            de.f1 = de.path_faces.front();
            de.f2 = de.path_faces.back();

            // Canonical orientation: loops pick the direction with the
            // lexicographically smaller crossed-edge sequence.
            if (de.f1 == de.f2) {
                std::vector<std::size_t> fwd, rev;
                for (std::size_t dd : de.crossed_darts) fwd.push_back(dd / 2);
                rev.assign(fwd.rbegin(), fwd.rend());
                if (rev < fwd) {
                    std::reverse(de.path_faces.begin(), de.path_faces.end());
                    std::reverse(de.crossed_darts.begin(), de.crossed_darts.end());
                    for (std::size_t& dd : de.crossed_darts) dd ^= 1;
                }
            }

            // Flanking cells: target side is the left of the oriented path.
            std::size_t left = NONE, right = NONE;
            for (std::size_t dd : de.crossed_darts) {
                std::size_t l = part.owner(g.dart_target(dd));
                std::size_t r = part.owner(g.dart_origin(dd));
                if (left == NONE) {
                    left = l;
                    right = r;
                } else {
                    require(left == l && right == r, ErrorCode::InvalidArgument,
                            "diagram edge flanked by inconsistent cells");
                }
            }
            de.site_left = left;
            de.site_right = right;
            dia.edges.push_back(std::move(de));
        }
    }

    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        require(!alive[e] || consumed[e], ErrorCode::InvalidArgument,
                "pruned dual contains a floating cycle");
    }
    require(dia.edges.size() == 3 * s - 6, ErrorCode::InvalidArgument,
            "diagram edge count violates 3|S|-6");

    dia.incident.assign(dia.branching_nodes.size(), {});
    for (std::size_t i = 0; i < dia.edges.size(); ++i) {
        dia.incident[dia.node_index(dia.edges[i].f1)].push_back(i);
        dia.incident[dia.node_index(dia.edges[i].f2)].push_back(i);
    }
    for (const auto& inc : dia.incident) {
        require(inc.size() == 3, ErrorCode::InvalidArgument,
                "diagram is not 3-regular");
    }
    return dia;
}

// ── Diamonds ──────────────────────────────────────────────────────

bool Diamond::contains(std::size_t v) const {
    return std::binary_search(member_vertices.begin(), member_vertices.end(), v);
}

bool Diamond::strictly_interior(std::size_t v) const {
    return std::binary_search(interior_vertices.begin(), interior_vertices.end(), v);
}

namespace {

void sort_unique(std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Incidence make_incidence(const VoronoiPartition& part, std::size_t site,
                         std::size_t corner, std::size_t face) {
    require(part.owner(corner) == site, ErrorCode::InvalidArgument,
            "incidence corner not owned by its site");
    Incidence inc;
    inc.site = site;
    inc.corner = corner;
    inc.face = face;
    inc.spoke = part.spoke_path(corner);
    inc.spoke_length = part.forest.dist[corner];
    return inc;
}

} // namespace

std::vector<Diamond> enumerate_diamonds(const EmbeddedGraph& g,
                                        const VoronoiPartition& part,
                                        const VoronoiDiagram& diagram) {
    std::vector<Diamond> out;
    out.reserve(diagram.edges.size());

    for (std::size_t ei = 0; ei < diagram.edges.size(); ++ei) {
        const DiagramEdge& de = diagram.edges[ei];
        Diamond dm;
        dm.diagram_edge = ei;

        std::size_t d_first = de.crossed_darts.front();
        std::size_t d_last = de.crossed_darts.back();
        dm.cross_first = d_first / 2;
        dm.cross_last = d_last / 2;

        std::size_t uL1 = g.dart_target(d_first), uR1 = g.dart_origin(d_first);
        std::size_t uL2 = g.dart_target(d_last), uR2 = g.dart_origin(d_last);

        // Canonical slots: smaller-site side first (left wins ties), then
        // path-start face before path-end face.
        bool left_first = de.site_left <= de.site_right;
        std::size_t lo_site = left_first ? de.site_left : de.site_right;
        std::size_t hi_site = left_first ? de.site_right : de.site_left;
        std::size_t lo1 = left_first ? uL1 : uR1, lo2 = left_first ? uL2 : uR2;
        std::size_t hi1 = left_first ? uR1 : uL1, hi2 = left_first ? uR2 : uL2;
        dm.incidences[0] = make_incidence(part, lo_site, lo1, de.f1);
        dm.incidences[1] = make_incidence(part, lo_site, lo2, de.f2);
        dm.incidences[2] = make_incidence(part, hi_site, hi1, de.f1);
        dm.incidences[3] = make_incidence(part, hi_site, hi2, de.f2);

        // Perimeter walk: spoke to the f1 crossing, across it, back down to
        // the other site, out to the f2 crossing, across, and back.
        auto append_path = [&](std::vector<std::size_t>& walk,
                               const std::vector<std::size_t>& path, bool reversed) {
            if (!reversed) {
                for (std::size_t v : path) {
                    if (walk.empty() || walk.back() != v) walk.push_back(v);
                }
            } else {
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                    if (walk.empty() || walk.back() != *it) walk.push_back(*it);
                }
            }
        };
        const auto spokeL1 = part.spoke_path(uL1);
        const auto spokeR1 = part.spoke_path(uR1);
        const auto spokeR2 = part.spoke_path(uR2);
        const auto spokeL2 = part.spoke_path(uL2);
        append_path(dm.perimeter_walk, spokeL1, false);  // site_left .. uL1
        append_path(dm.perimeter_walk, {uR1}, false);    // crossing edge f1
        append_path(dm.perimeter_walk, spokeR1, true);   // uR1 .. site_right
        append_path(dm.perimeter_walk, spokeR2, false);  // site_right .. uR2
        append_path(dm.perimeter_walk, {uL2}, false);    // crossing edge f2
        append_path(dm.perimeter_walk, spokeL2, true);   // uL2 .. site_left

        // Perimeter sets.
        for (const Incidence& inc : dm.incidences) {
            for (std::size_t v : inc.spoke) dm.perimeter_vertices.push_back(v);
            for (std::size_t v : inc.spoke) {
                std::size_t pe = part.forest.parent_edge[v];
                if (pe != NONE && v != inc.spoke.front()) dm.perimeter_edges.push_back(pe);
            }
        }
        dm.perimeter_edges.push_back(dm.cross_first);
        dm.perimeter_edges.push_back(dm.cross_last);
        sort_unique(dm.perimeter_vertices);
        sort_unique(dm.perimeter_edges);

        // Interior faces: flood from the intermediate faces of the realizing
        // dual path, never crossing a perimeter edge or entering f1/f2.
        std::vector<bool> in_region(g.faces().size(), false);
        std::vector<bool> blocked(g.faces().size(), false);
        blocked[de.f1] = true;
        blocked[de.f2] = true;
        std::queue<std::size_t> q;
        for (std::size_t t = 1; t + 1 < de.path_faces.size(); ++t) {
            std::size_t f = de.path_faces[t];
            if (!in_region[f] && !blocked[f]) {
                in_region[f] = true;
                q.push(f);
            }
        }
        auto perim_edge = [&](std::size_t e) {
            return std::binary_search(dm.perimeter_edges.begin(), dm.perimeter_edges.end(), e);
        };
        while (!q.empty()) {
            std::size_t f = q.front();
            q.pop();
            for (std::size_t d : g.faces()[f].darts) {
                if (perim_edge(d / 2)) continue;
                std::size_t nf = g.face_of_dart(d ^ 1);
                if (!in_region[nf] && !blocked[nf]) {
                    in_region[nf] = true;
                    q.push(nf);
                }
            }
        }
        for (std::size_t f = 0; f < g.faces().size(); ++f) {
            if (in_region[f]) dm.interior_faces.push_back(f);
        }
        for (std::size_t f : dm.interior_faces) {
            for (std::size_t d : g.faces()[f].darts) {
                std::size_t v = g.dart_origin(d);
                if (!std::binary_search(dm.perimeter_vertices.begin(),
                                        dm.perimeter_vertices.end(), v)) {
                    dm.interior_vertices.push_back(v);
                }
            }
        }
        sort_unique(dm.interior_vertices);

        dm.member_vertices = dm.perimeter_vertices;
        dm.member_vertices.insert(dm.member_vertices.end(), dm.interior_vertices.begin(),
                                  dm.interior_vertices.end());
        sort_unique(dm.member_vertices);
        out.push_back(std::move(dm));
    }
    return out;
}

// ── Perimeter separation ──────────────────────────────────────────

SeparationReport check_perimeter_separation(const EmbeddedGraph& g,
                                            const VoronoiPartition& part,
                                            const std::vector<Diamond>& diamonds,
                                            std::size_t samples_per_diamond,
                                            std::uint64_t seed) {
    SeparationReport report;
    // One canonical tree per site serves every query against that site.
    std::vector<ShortestPathTree> trees;
    trees.reserve(part.sites.size());
    for (std::size_t p : part.sites) trees.push_back(shortest_path_tree(g, p));

    Rng rng(seed);
    for (std::size_t di = 0; di < diamonds.size(); ++di) {
        const Diamond& dm = diamonds[di];
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (samples_per_diamond == 0) {
            for (std::size_t u : dm.member_vertices) {
                for (std::size_t si = 0; si < part.sites.size(); ++si) {
                    pairs.emplace_back(u, si);
                }
            }
        } else {
            for (std::size_t t = 0; t < samples_per_diamond; ++t) {
                std::size_t u =
                    dm.member_vertices[rng.next_below(dm.member_vertices.size())];
                std::size_t si = rng.next_below(part.sites.size());
                pairs.emplace_back(u, si);
            }
        }
        for (auto [u, si] : pairs) {
            ++report.checks;
            bool hit = false;
            for (std::size_t v : trees[si].path_to(u)) {
                if (std::binary_search(dm.perimeter_vertices.begin(),
                                       dm.perimeter_vertices.end(), v)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) report.violations.push_back({di, u, part.sites[si]});
        }
    }
    return report;
}

} // namespace plankm
