#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace mstme {

/// Degree histogram over a fixed vertex set: degree value -> number of
/// vertices with that degree. Zero-count entries are removed; isolated
/// vertices appear under degree 0.
class DegreeHistogram {
public:
    explicit DegreeHistogram(int n_vertices) : n_vertices_(n_vertices) {
        if (n_vertices < 1) throw std::invalid_argument("DegreeHistogram: need at least 1 vertex");
        counts_[0] = n_vertices;
    }

    static DegreeHistogram from_degrees(std::span<const int> degrees) {
        DegreeHistogram h(static_cast<int>(degrees.size()));
        h.counts_.clear();
        for (int d : degrees) ++h.counts_[d];
        return h;
    }

    int n_vertices() const { return n_vertices_; }
    const std::map<int, int>& counts() const { return counts_; }

    /// Moves one vertex between degree buckets (the add/remove-edge delta).
    void move_vertex(int old_degree, int new_degree) {
        if (old_degree == new_degree) return;
        auto it = counts_.find(old_degree);
        if (it == counts_.end()) throw std::logic_error("DegreeHistogram: no vertex with the old degree");
        if (--it->second == 0) counts_.erase(it);
        ++counts_[new_degree];
    }

    /// Shannon entropy in bits of p(d) = count(d) / |V|. With
    /// include_isolated = false, degree-0 vertices are dropped from both
    /// the counts and the normalizer. Terms are accumulated in descending
    /// count order so the result is reproducible bit for bit.
    double entropy_bits(bool include_isolated = true) const {
        std::vector<std::pair<int, int>> terms;  // (count, degree)
        terms.reserve(counts_.size());
        long long denom = 0;
        for (const auto& [degree, count] : counts_) {
            if (!include_isolated && degree == 0) continue;
            terms.push_back({count, degree});
            denom += count;
        }
        if (denom == 0) return 0.0;
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
        double h = 0.0;
        for (const auto& [count, degree] : terms) {
            const double p = static_cast<double>(count) / static_cast<double>(denom);
            h -= p * std::log2(p);
        }
        return h < 0.0 ? 0.0 : h;  // -0.0 from the single-bucket case
    }

private:
    int n_vertices_;
    std::map<int, int> counts_;
};

inline double shannon_entropy(const DegreeHistogram& h) { return h.entropy_bits(true); }

/// Bi-criteria objective: total edge weight minus lambda times entropy.
inline double objective_cost(double total_weight, double entropy_bits, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("objective_cost: lambda must be >= 0");
    return total_weight - lambda * entropy_bits;
}

}  // namespace mstme
