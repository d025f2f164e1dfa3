#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mstme/entropy.hpp"
#include "mstme/point_set.hpp"
#include "mstme/spanning_forest.hpp"

namespace mstme {

enum class TreeAlgorithm { greedy_mstme, kruskal, exact_oracle };

inline const char* to_string(TreeAlgorithm a) {
    switch (a) {
        case TreeAlgorithm::greedy_mstme: return "greedy_mstme";
        case TreeAlgorithm::kruskal: return "kruskal";
        case TreeAlgorithm::exact_oracle: return "exact_oracle";
    }
    throw std::invalid_argument("unknown algorithm");
}

struct SolverConfig {
    double lambda = 0.5;
    bool isolated_vertices_in_entropy = true;
};

struct TreeResult {
    std::vector<WeightedEdge> edges;  // canonical, sorted by (u, v)
    double total_weight = 0.0;
    double entropy_bits = 0.0;
    double objective = 0.0;
    TreeAlgorithm algorithm = TreeAlgorithm::kruskal;
};

namespace detail {

inline void sort_by_endpoints(std::vector<WeightedEdge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
}

inline void validate_config(const SolverConfig& cfg) {
    if (!std::isfinite(cfg.lambda) || cfg.lambda < 0.0)
        throw std::invalid_argument("SolverConfig: lambda must be finite and >= 0");
}

}  // namespace detail

/// Greedy tree construction: one edge is committed per round. Every
/// remaining non-cycle edge is scored in canonical (w, u, v) order as
/// its weight minus lambda times the entropy the forest would have with
/// it added; the strictly best score wins, so the first-scanned edge
/// keeps ties. Runs n-1 rounds over the complete graph, O(n^3) overall.
inline TreeResult greedy_mstme(const PointSet& ps, const SolverConfig& cfg) {
    detail::validate_config(cfg);
    const int n = static_cast<int>(ps.size());
    if (n < 2) throw std::invalid_argument("greedy_mstme: need at least 2 points");

    const std::vector<WeightedEdge> all = pairwise_distances(ps);
    std::vector<char> in_tree(all.size(), 0);
    SpanningForest forest(n);

    for (int round = 0; round < n - 1; ++round) {
        double best_cost = std::numeric_limits<double>::infinity();
        std::size_t best_index = all.size();
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (in_tree[i]) continue;
            const WeightedEdge& e = all[i];
            if (forest.would_cycle(e)) continue;
            forest.add_edge(e);
            const double ecost = e.w - cfg.lambda * forest.entropy_bits(cfg.isolated_vertices_in_entropy);
            forest.remove_last_edge(e);
            if (ecost < best_cost) {
                best_cost = ecost;
                best_index = i;
            }
        }
        // A forest with fewer than n-1 edges always admits another edge.
        if (best_index == all.size()) throw std::logic_error("greedy_mstme: no admissible edge found");
        forest.add_edge(all[best_index]);
        in_tree[best_index] = 1;
    }

    TreeResult result;
    result.edges.assign(forest.edges().begin(), forest.edges().end());
    detail::sort_by_endpoints(result.edges);
    result.total_weight = forest.total_weight();
    result.entropy_bits = forest.entropy_bits(cfg.isolated_vertices_in_entropy);
    result.objective = objective_cost(result.total_weight, result.entropy_bits, cfg.lambda);
    result.algorithm = TreeAlgorithm::greedy_mstme;
    return result;
}

/// Classic minimum spanning tree (sorted-edge greedy with union-find).
/// Reported objective uses lambda = 0, i.e. equals the total weight.
inline TreeResult kruskal_mst(const PointSet& ps) {
    const int n = static_cast<int>(ps.size());
    if (n < 2) throw std::invalid_argument("kruskal_mst: need at least 2 points");

    SpanningForest forest(n);
    for (const WeightedEdge& e : pairwise_distances(ps)) {
        if (forest.is_spanning_tree()) break;
        if (!forest.would_cycle(e)) forest.add_edge(e);
    }

    TreeResult result;
    result.edges.assign(forest.edges().begin(), forest.edges().end());
    detail::sort_by_endpoints(result.edges);
    result.total_weight = forest.total_weight();
    result.entropy_bits = forest.entropy_bits();
    result.objective = result.total_weight;
    result.algorithm = TreeAlgorithm::kruskal;
    return result;
}

/// Enumerates every labeled tree on n vertices exactly once by decoding
/// all n^(n-2) Prufer sequences. fn receives the edge list with u < v,
/// sorted by (u, v). Usable up to n = 9 or so.
template <class Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n < 2) throw std::invalid_argument("for_each_labeled_tree: need n >= 2");
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(n - 1));
    if (n == 2) {
        edges[0] = {0, 1};
        fn(std::as_const(edges));
        return;
    }

    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    std::vector<int> degree(static_cast<std::size_t>(n));
    while (true) {
        // Decode: repeatedly attach the smallest remaining leaf.
        std::fill(degree.begin(), degree.end(), 1);
        for (int x : seq) ++degree[x];
        std::size_t out = 0;
        for (int x : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v) {
                if (degree[v] == 1) {
                    leaf = v;
                    break;
                }
            }
            edges[out++] = {std::min(leaf, x), std::max(leaf, x)};
            degree[leaf] = 0;
            --degree[x];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 1) {
                if (a < 0) a = v; else b = v;
            }
        }
        edges[out] = {a, b};
        std::sort(edges.begin(), edges.end());
        fn(std::as_const(edges));

        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

/// Exact minimizer of the bi-criteria objective by full spanning-tree
/// enumeration; ties go to the lexicographically smallest sorted edge
/// list. Exponential in n, so n is capped at 9.
inline TreeResult exact_mstme(const PointSet& ps, const SolverConfig& cfg) {
    detail::validate_config(cfg);
    const int n = static_cast<int>(ps.size());
    if (n < 2 || n > 9) throw std::invalid_argument("exact_mstme: supported range is 2 <= n <= 9");

    // Dense distance lookup; entropy comes straight from the degree array.
    std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(u) * n + v] = euclidean_distance(ps[u], ps[v]);

    bool have_best = false;
    double best_objective = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, int>> best_edges;
    double best_weight = 0.0, best_entropy = 0.0;
    std::vector<int> degree(static_cast<std::size_t>(n));

    for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
        std::fill(degree.begin(), degree.end(), 0);
        double weight = 0.0;
        for (const auto& [u, v] : edges) {
            ++degree[u];
            ++degree[v];
            weight += dist[static_cast<std::size_t>(u) * n + v];
        }
        const double entropy = DegreeHistogram::from_degrees(degree).entropy_bits();
        const double objective = weight - cfg.lambda * entropy;
        if (!have_best || objective < best_objective ||
            (objective == best_objective && edges < best_edges)) {
            have_best = true;
            best_objective = objective;
            best_edges = edges;
            best_weight = weight;
            best_entropy = entropy;
        }
    });

    TreeResult result;
    result.edges.reserve(best_edges.size());
    for (const auto& [u, v] : best_edges)
        result.edges.push_back({u, v, dist[static_cast<std::size_t>(u) * n + v]});
    result.total_weight = best_weight;
    result.entropy_bits = best_entropy;
    result.objective = best_objective;
    result.algorithm = TreeAlgorithm::exact_oracle;
    return result;
}

}  // namespace mstme
