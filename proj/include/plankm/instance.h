#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plankm/embed.h"
#include "plankm/metric.h"

namespace plankm {

/// Client weight function with explicit support; entries are kept sorted by
/// vertex id so iteration order is deterministic.
class WeightFn {
public:
    WeightFn() = default;

    static WeightFn unit(const std::vector<std::size_t>& clients);

    void set(std::size_t v, double w);
    double at(std::size_t v) const;
    double total() const;
    std::vector<std::size_t> support() const;
    std::size_t support_size() const;
    const std::map<std::size_t, double>& entries() const { return weights_; }

    bool operator==(const WeightFn&) const = default;

private:
    std::map<std::size_t, double> weights_;
};

/// k-Median / UFL instance. `vertex_labels` carries external ids for I/O and
/// reporting; internally everything is dense indices.
struct Instance {
    EmbeddedGraph graph;
    std::vector<std::size_t> clients;
    std::vector<std::size_t> facilities;
    std::size_t k = 0;
    std::optional<double> open_cost;
    std::optional<WeightFn> weights;
    std::vector<long long> vertex_labels;

    void validate() const;
    /// Instance weights if present, otherwise unit weights on the clients.
    WeightFn effective_weights() const;
};

struct SolveStats {
    std::size_t coreset_support = 0;
    std::size_t f0_size = 0;
    std::size_t regions = 0;
    std::size_t boundary_total = 0;
    std::size_t iterations = 0;
    std::size_t repetitions = 0;
    std::vector<std::pair<std::string, double>> stage_ms;
};

struct Solution {
    std::vector<std::size_t> open; // sorted facility vertex ids
    double connection_cost = 0.0;
    double total_cost = 0.0; // connection + opening (UFL); == connection otherwise
    std::vector<std::size_t> assignment; // per graph vertex: serving facility or NONE
    SolveStats stats;
};

/// Weighted connection cost of opening D, via one multi-source run.
/// Empty D costs +infinity by convention.
double conn_cost(const EmbeddedGraph& g, const WeightFn& w,
                 const std::vector<std::size_t>& open);
double conn_cost(const Instance& inst, const std::vector<std::size_t>& open);

/// Distance rows from each facility to every vertex, shared by the
/// enumerating solvers. Assignment ties break toward the smaller facility id.
class FacilityDistances {
public:
    FacilityDistances(const EmbeddedGraph& g, std::vector<std::size_t> facilities);

    const std::vector<std::size_t>& facilities() const { return facilities_; }
    double dist(std::size_t facility_index, std::size_t v) const {
        return rows_[facility_index][v];
    }
    bool facility_reaches(std::size_t facility_index, std::size_t v) const {
        return reach_[facility_index][v];
    }

    /// Weighted cost of a set of facility indices; +inf if some client is
    /// unreachable from every open facility.
    double cost(const std::vector<std::size_t>& open_indices, const WeightFn& w) const;

    /// Serving facility (as index into facilities()) for vertex v among
    /// open_indices; NONE if unreachable.
    std::size_t nearest(const std::vector<std::size_t>& open_indices, std::size_t v) const;

private:
    std::vector<std::size_t> facilities_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::vector<bool>> reach_;
};

} // namespace plankm
