#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mstme {

/// Union-find with exact undo of the most recent union. Union by rank,
/// no path compression: keeping parents untouched by find() is what
/// makes the O(1) rollback possible.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int size() const { return static_cast<int>(parent_.size()); }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    bool same_component(int a, int b) const { return find(a) == find(b); }

    /// Pre: a and b are in different components.
    void unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) throw std::logic_error("unite: endpoints already connected");
        if (rank_[ra] > rank_[rb]) std::swap(ra, rb);
        const bool bump = rank_[ra] == rank_[rb];
        log_.push_back({ra, bump});
        parent_[ra] = rb;
        if (bump) ++rank_[rb];
    }

    /// Reverts the latest unite(); LIFO only.
    void undo_last_union() {
        if (log_.empty()) throw std::logic_error("undo_last_union: nothing to undo");
        const Record rec = log_.back();
        log_.pop_back();
        const int root = parent_[rec.child_root];
        parent_[rec.child_root] = rec.child_root;
        if (rec.rank_bumped) --rank_[root];
    }

    int union_count() const { return static_cast<int>(log_.size()); }

private:
    struct Record {
        int child_root;
        bool rank_bumped;
    };

    std::vector<int> parent_;
    std::vector<std::uint8_t> rank_;
    std::vector<Record> log_;
};

}  // namespace mstme
