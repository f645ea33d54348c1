#include "plankm/metric.h"

#include <algorithm>
#include <cmath>
#include <queue>

namespace plankm {

std::vector<std::size_t> ShortestPathTree::path_to(std::size_t v) const {
    std::vector<std::size_t> path;
    std::size_t x = v;
    while (x != NONE) {
        path.push_back(x);
        x = parent_vertex[x];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

TieKey ShortestPathTree::key(std::size_t v) const {
    return TieKey{dist[v], path_to(v)};
}

namespace {

struct HeapEntry {
    double dist;
    std::size_t vertex;
    std::size_t parent_vertex;
    std::size_t parent_edge;

    bool operator>(const HeapEntry& o) const {
        if (dist != o.dist) return dist > o.dist;
        return vertex > o.vertex; // arbitrary but fixed pop order on ties
    }
};

/// Compare candidate path (path(pu) + [v]) against the incumbent
/// (path(pv) + [v]) lexicographically; numeric parts are already equal.
/// Both parents are settled, so their parent chains are final.
bool tag_improves(const ShortestPathTree& t, std::size_t cand_parent,
                  std::size_t cur_parent, std::size_t v) {
    if (cur_parent == cand_parent) return false;
    std::vector<std::size_t> a = t.path_to(cand_parent);
    std::vector<std::size_t> b = t.path_to(cur_parent);
    a.push_back(v);
    b.push_back(v);
    return a < b;
}

ShortestPathTree run_dijkstra(const EmbeddedGraph& g,
                              const std::vector<std::size_t>& sources) {
    require(!sources.empty(), ErrorCode::InvalidArgument, "need at least one source");
    std::size_t n = g.num_vertices();
    ShortestPathTree t;
    t.sources = sources;
    t.dist.assign(n, 0.0);
    t.reached.assign(n, false);
    t.parent_vertex.assign(n, NONE);
    t.parent_edge.assign(n, NONE);
    t.owner.assign(n, NONE);
    std::vector<bool> settled(n, false);
    std::vector<bool> seen(n, false);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> heap;
    // Seeds in ascending id order; duplicate sources collapse to the smaller.
    std::vector<std::size_t> seeds = sources;
    std::sort(seeds.begin(), seeds.end());
    for (std::size_t s : seeds) {
        require(s < n, ErrorCode::InvalidArgument, "source out of range");
        if (seen[s]) continue;
        seen[s] = true;
        t.dist[s] = 0.0;
        t.owner[s] = s;
        heap.push(HeapEntry{0.0, s, NONE, NONE});
    }

    while (!heap.empty()) {
        HeapEntry top = heap.top();
        heap.pop();
        std::size_t v = top.vertex;
        if (settled[v]) continue;
        if (top.dist != t.dist[v] || top.parent_vertex != t.parent_vertex[v]) continue;
        settled[v] = true;
        t.reached[v] = true;

        std::size_t start = g.first_dart(v);
        if (start == NONE) continue;
        std::size_t d = start;
        do {
            const Edge& e = g.edge(d / 2);
            if (!e.infinite) {
                std::size_t w = g.dart_target(d);
                if (!settled[w]) {
                    double nd = t.dist[v] + e.length;
                    bool better = false;
                    if (!seen[w] || nd < t.dist[w]) {
                        better = true;
                    } else if (nd == t.dist[w]) {
                        better = tag_improves(t, v, t.parent_vertex[w], w);
                    }
                    if (better) {
                        seen[w] = true;
                        t.dist[w] = nd;
                        t.parent_vertex[w] = v;
                        t.parent_edge[w] = d / 2;
                        t.owner[w] = t.owner[v];
                        heap.push(HeapEntry{nd, w, v, d / 2});
                    }
                }
            }
            d = g.sigma(d);
        } while (d != start);
    }
    return t;
}

} // namespace

ShortestPathTree shortest_path_tree(const EmbeddedGraph& g, std::size_t source) {
    return run_dijkstra(g, {source});
}

ShortestPathTree multi_source_tree(const EmbeddedGraph& g,
                                   const std::vector<std::size_t>& sources) {
    return run_dijkstra(g, sources);
}

// ── Levels ────────────────────────────────────────────────────────

LevelScale::LevelScale(double epsilon) : epsilon_(epsilon) {
    require(epsilon > 0.0, ErrorCode::InvalidArgument, "epsilon must be positive");
    powers_.push_back(1.0);
}

double LevelScale::power(int i) const {
    while (static_cast<int>(powers_.size()) <= i) {
        powers_.push_back(powers_.back() * (1.0 + epsilon_));
    }
    return powers_[i];
}

int LevelScale::level(double c) const {
    require(c >= 0.0, ErrorCode::InvalidArgument, "level of a negative value");
    require(std::isfinite(c), ErrorCode::InfiniteLength,
            "level is only defined for finite values");
    if (c < 1.0) return 0;
    // Logarithmic estimate, then correct against the cached exact powers so
    // boundary values (c equal to a power) follow the strict inequality.
    int l = static_cast<int>(std::ceil(std::log(c) / std::log1p(epsilon_)));
    if (l < 0) l = 0;
    while (l > 0 && c < power(l - 1)) --l;
    while (!(c < power(l))) ++l;
    return l;
}

EmbeddedGraph scale_lengths(const EmbeddedGraph& g, double factor) {
    return g.scaled(factor);
}

EmbeddedGraph clip_long_edges(const EmbeddedGraph& g, double threshold) {
    return g.clipped(threshold);
}

} // namespace plankm
