#include "plankm/instance.h"

#include <algorithm>
#include <limits>

namespace plankm {

WeightFn WeightFn::unit(const std::vector<std::size_t>& clients) {
    WeightFn w;
    for (std::size_t c : clients) w.weights_[c] = 1.0;
    return w;
}

void WeightFn::set(std::size_t v, double w) {
    require(w >= 0.0, ErrorCode::InvalidArgument, "weights must be nonnegative");
    if (w == 0.0) {
        weights_.erase(v);
    } else {
        weights_[v] = w;
    }
}

double WeightFn::at(std::size_t v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? 0.0 : it->second;
}

double WeightFn::total() const {
    double t = 0.0;
    for (const auto& [v, w] : weights_) t += w;
    return t;
}

std::vector<std::size_t> WeightFn::support() const {
    std::vector<std::size_t> s;
    s.reserve(weights_.size());
    for (const auto& [v, w] : weights_) s.push_back(v);
    return s;
}

std::size_t WeightFn::support_size() const { return weights_.size(); }

void Instance::validate() const {
    require(!clients.empty(), ErrorCode::InvalidArgument, "instance needs clients");
    require(!facilities.empty(), ErrorCode::InvalidArgument, "instance needs facilities");
    for (std::size_t c : clients) {
        require(c < graph.num_vertices(), ErrorCode::InvalidArgument, "client out of range");
    }
    for (std::size_t f : facilities) {
        require(f < graph.num_vertices(), ErrorCode::InvalidArgument, "facility out of range");
    }
}

WeightFn Instance::effective_weights() const {
    if (weights) return *weights;
    return WeightFn::unit(clients);
}

double conn_cost(const EmbeddedGraph& g, const WeightFn& w,
                 const std::vector<std::size_t>& open) {
    if (open.empty()) return std::numeric_limits<double>::infinity();
    ShortestPathTree t = multi_source_tree(g, open);
    double total = 0.0;
    for (const auto& [v, weight] : w.entries()) {
        if (!t.reached[v]) return std::numeric_limits<double>::infinity();
        total += weight * t.dist[v];
    }
    return total;
}

double conn_cost(const Instance& inst, const std::vector<std::size_t>& open) {
    return conn_cost(inst.graph, inst.effective_weights(), open);
}

FacilityDistances::FacilityDistances(const EmbeddedGraph& g,
                                     std::vector<std::size_t> facilities)
    : facilities_(std::move(facilities)) {
    std::sort(facilities_.begin(), facilities_.end());
    facilities_.erase(std::unique(facilities_.begin(), facilities_.end()), facilities_.end());
    rows_.reserve(facilities_.size());
    reach_.reserve(facilities_.size());
    for (std::size_t f : facilities_) {
        ShortestPathTree t = shortest_path_tree(g, f);
        rows_.push_back(std::move(t.dist));
        reach_.push_back(std::move(t.reached));
    }
}

double FacilityDistances::cost(const std::vector<std::size_t>& open_indices,
                               const WeightFn& w) const {
    if (open_indices.empty()) return std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (const auto& [v, weight] : w.entries()) {
        double best = std::numeric_limits<double>::infinity();
        bool ok = false;
        for (std::size_t fi : open_indices) {
            if (!reach_[fi][v]) continue;
            if (!ok || rows_[fi][v] < best) {
                best = rows_[fi][v];
                ok = true;
            }
        }
        if (!ok) return std::numeric_limits<double>::infinity();
        total += weight * best;
    }
    return total;
}

std::size_t FacilityDistances::nearest(const std::vector<std::size_t>& open_indices,
                                       std::size_t v) const {
    std::size_t best = NONE;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t fi : open_indices) {
        if (!reach_[fi][v]) continue;
        double d = rows_[fi][v];
        // Strict improvement keeps the smallest facility id on ties as long
        // as open_indices are scanned in ascending id order.
        if (best == NONE || d < best_d) {
            best = fi;
            best_d = d;
        }
    }
    return best;
}

} // namespace plankm
