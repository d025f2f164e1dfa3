#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "mstme/entropy.hpp"
#include "mstme/point_set.hpp"
#include "mstme/union_find.hpp"

namespace mstme {

/// Acyclic edge set under construction over a fixed vertex set, with the
/// degree histogram and total weight maintained incrementally. Edge
/// removal is stack-disciplined (last added first) and restores every
/// field exactly, including the floating-point total.
class SpanningForest {
public:
    explicit SpanningForest(int n_vertices)
        : n_(n_vertices), uf_(n_vertices), degree_(n_vertices, 0), hist_(n_vertices) {
        if (n_vertices < 2) throw std::invalid_argument("SpanningForest: need at least 2 vertices");
    }

    int n_vertices() const { return n_; }
    std::span<const WeightedEdge> edges() const { return edges_; }
    double total_weight() const { return total_weight_; }
    const DegreeHistogram& histogram() const { return hist_; }
    double entropy_bits(bool include_isolated = true) const { return hist_.entropy_bits(include_isolated); }

    bool is_spanning_tree() const { return static_cast<int>(edges_.size()) == n_ - 1; }

    bool would_cycle(const WeightedEdge& e) const {
        check_endpoints(e);
        return uf_.same_component(e.u, e.v);
    }

    /// Pre: !would_cycle(e).
    void add_edge(const WeightedEdge& e) {
        check_endpoints(e);
        uf_.unite(e.u, e.v);  // throws if e closes a cycle
        prev_totals_.push_back(total_weight_);
        edges_.push_back(e);
        hist_.move_vertex(degree_[e.u], degree_[e.u] + 1);
        ++degree_[e.u];
        hist_.move_vertex(degree_[e.v], degree_[e.v] + 1);
        ++degree_[e.v];
        total_weight_ += e.w;
    }

    /// Pre: e is the most recently added edge.
    void remove_last_edge(const WeightedEdge& e) {
        if (edges_.empty() || !(edges_.back() == e))
            throw std::logic_error("remove_last_edge: not the most recently added edge");
        edges_.pop_back();
        uf_.undo_last_union();
        hist_.move_vertex(degree_[e.u], degree_[e.u] - 1);
        --degree_[e.u];
        hist_.move_vertex(degree_[e.v], degree_[e.v] - 1);
        --degree_[e.v];
        total_weight_ = prev_totals_.back();
        prev_totals_.pop_back();
    }

private:
    void check_endpoints(const WeightedEdge& e) const {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v)
            throw std::invalid_argument("edge endpoints out of range");
    }

    int n_;
    std::vector<WeightedEdge> edges_;
    std::vector<double> prev_totals_;
    RollbackUnionFind uf_;
    std::vector<int> degree_;
    DegreeHistogram hist_;
    double total_weight_ = 0.0;
};

}  // namespace mstme
