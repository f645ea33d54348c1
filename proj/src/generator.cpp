#include "plankm/generator.h"

#include <algorithm>
#include <queue>

#include "plankm/rng.h"

namespace plankm {

GeneratorKind generator_kind_from_string(const std::string& s) {
    if (s == "grid") return GeneratorKind::Grid;
    if (s == "grid-random-weights") return GeneratorKind::GridRandomWeights;
    if (s == "grid-with-deletions") return GeneratorKind::GridWithDeletions;
    fail(ErrorCode::InvalidArgument, "unknown generator kind: " + s);
}

namespace {

bool edges_connected(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n;
}

} // namespace

Instance generate(const GeneratorSpec& spec) {
    require(spec.width >= 2 && spec.height >= 2, ErrorCode::InvalidArgument,
            "grid must be at least 2x2");
    require(spec.weight_min > 0.0 && spec.weight_max >= spec.weight_min,
            ErrorCode::InvalidArgument, "invalid weight range");

    Rng rng(spec.seed);
    std::size_t w = spec.width, h = spec.height;
    std::size_t n = w * h;
    auto vid = [&](std::size_t x, std::size_t y) { return y * w + x; };

    std::vector<Coord> coords(n);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            coords[vid(x, y)] = Coord{static_cast<double>(x), static_cast<double>(y)};
        }
    }

    auto edge_length = [&]() {
        if (spec.kind == GeneratorKind::Grid) return 1.0;
        return rng.uniform(spec.weight_min, spec.weight_max);
    };

    std::vector<Edge> edges;
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            if (x + 1 < w) edges.push_back(Edge{vid(x, y), vid(x + 1, y), edge_length(), false, false});
            if (y + 1 < h) edges.push_back(Edge{vid(x, y), vid(x, y + 1), edge_length(), false, false});
        }
    }

    if (spec.kind == GeneratorKind::GridWithDeletions) {
        bool ok = false;
        for (std::size_t attempt = 0; attempt < spec.max_resamples && !ok; ++attempt) {
            std::vector<Edge> trial;
            for (const Edge& e : edges) {
                if (rng.next_double() >= spec.delete_fraction) trial.push_back(e);
            }
            if (edges_connected(n, trial)) {
                edges = std::move(trial);
                ok = true;
            }
        }
        require(ok, ErrorCode::InvalidArgument,
                "deletions kept disconnecting the grid; gave up after max resamples");
    }

    Instance inst;
    inst.graph = EmbeddedGraph::from_coordinates(coords, edges);

    // Bernoulli vertex sampling; forced nonempty by falling back to the
    // deterministic extremes.
    for (std::size_t v = 0; v < n; ++v) {
        if (rng.next_double() < spec.client_fraction) inst.clients.push_back(v);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (rng.next_double() < spec.facility_fraction) inst.facilities.push_back(v);
    }
    if (inst.clients.empty()) inst.clients.push_back(0);
    if (inst.facilities.empty()) inst.facilities.push_back(n - 1);

    inst.k = std::min(spec.k, inst.facilities.size());
    if (inst.k == 0) inst.k = 1;
    inst.vertex_labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) inst.vertex_labels[v] = static_cast<long long>(v);
    inst.validate();
    return inst;
}

} // namespace plankm
