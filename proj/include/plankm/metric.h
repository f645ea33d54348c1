#pragma once

#include <cstddef>
#include <vector>

#include "plankm/embed.h"

namespace plankm {

/// Deterministic distance key: numeric length first, then the vertex-id
/// sequence of the realizing path (source included). The order is total and
/// distinct shortest paths to the same target always compare differently,
/// which stands in for the paper-style perturbation of edge lengths.
struct TieKey {
    double length = 0.0;
    std::vector<std::size_t> tag;

    bool operator<(const TieKey& o) const {
        if (length != o.length) return length < o.length;
        return tag < o.tag;
    }
    bool operator==(const TieKey& o) const {
        return length == o.length && tag == o.tag;
    }
};

/// Shortest-path forest from one or more sources under the TieKey order.
/// INFINITE edges never relax; unreachable vertices are flagged.
struct ShortestPathTree {
    std::vector<std::size_t> sources;
    std::vector<double> dist;
    std::vector<bool> reached;
    std::vector<std::size_t> parent_vertex; // NONE at sources / unreachable
    std::vector<std::size_t> parent_edge;
    std::vector<std::size_t> owner; // source vertex owning each vertex

    /// Canonical path source -> v as a vertex sequence.
    std::vector<std::size_t> path_to(std::size_t v) const;
    TieKey key(std::size_t v) const;
};

ShortestPathTree shortest_path_tree(const EmbeddedGraph& g, std::size_t source);
ShortestPathTree multi_source_tree(const EmbeddedGraph& g,
                                   const std::vector<std::size_t>& sources);

/// Distance-level scale: level(c) is the least nonnegative integer l with
/// c < (1+eps)^l. Powers are cached and levels are corrected against the
/// cached powers so that exact boundary values obey the strict inequality.
class LevelScale {
public:
    explicit LevelScale(double epsilon);

    double epsilon() const { return epsilon_; }
    int level(double c) const;
    /// (1+eps)^i, exact repeated multiplication, cached.
    double power(int i) const;

    void set_max_level(int l) { max_level_ = l; }
    int max_level() const { return max_level_; }

private:
    double epsilon_;
    int max_level_ = 0;
    mutable std::vector<double> powers_;
};

EmbeddedGraph scale_lengths(const EmbeddedGraph& g, double factor);
EmbeddedGraph clip_long_edges(const EmbeddedGraph& g, double threshold);

} // namespace plankm
