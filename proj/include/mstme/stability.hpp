#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mstme/delaunay.hpp"
#include "mstme/point_set.hpp"
#include "mstme/rng.hpp"
#include "mstme/solver.hpp"

namespace mstme {

/// Graph edges identified purely by point indices, canonical and sorted.
using EdgeSet = std::vector<std::pair<int, int>>;

struct NoiseSpec {
    int trials = 30;
    std::uint64_t seed = 0;
    /// false: radius uniform in [0, r*eps]; true: uniform over the disk.
    bool disk_uniform = false;
};

/// Displaces every point independently by a random (length, angle) with
/// angle uniform in [0, 2*pi) and length at most r * epsilon. Point
/// indices are preserved. Two rng draws per point, angle first.
inline PointSet perturb(const PointSet& ps, int r, double epsilon, DeterministicRng& rng,
                        bool disk_uniform = false) {
    if (r < 0) throw std::invalid_argument("perturb: noise level must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("perturb: epsilon must be positive");
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double max_radius = static_cast<double>(r) * epsilon;
    PointSet out;
    out.points.reserve(ps.size());
    for (const Point2D& p : ps.points) {
        const double angle = two_pi * rng.uniform01();
        const double u = rng.uniform01();
        const double len = disk_uniform ? max_radius * std::sqrt(u) : max_radius * u;
        out.points.push_back({p.x + len * std::cos(angle), p.y + len * std::sin(angle)});
    }
    return out;
}

struct StabilityFractions {
    std::vector<double> per_trial;  // |baseline intersect trial_i| / |baseline|
    double intersection = 1.0;      // |baseline intersect all trials| / |baseline|
};

/// Fraction of baseline edges that reappear in each trial graph, and in
/// all of them at once. Edges compare by index pair only; geometry is
/// irrelevant here.
inline StabilityFractions edge_stability(const EdgeSet& baseline, std::span<const EdgeSet> trial_graphs) {
    if (baseline.empty()) throw std::invalid_argument("edge_stability: empty baseline");
    StabilityFractions out;
    out.per_trial.reserve(trial_graphs.size());
    EdgeSet common = baseline;
    EdgeSet scratch;
    for (const EdgeSet& trial : trial_graphs) {
        scratch.clear();
        std::set_intersection(baseline.begin(), baseline.end(), trial.begin(), trial.end(),
                              std::back_inserter(scratch));
        out.per_trial.push_back(static_cast<double>(scratch.size()) / static_cast<double>(baseline.size()));
        scratch.clear();
        std::set_intersection(common.begin(), common.end(), trial.begin(), trial.end(),
                              std::back_inserter(scratch));
        common.swap(scratch);
    }
    out.intersection = static_cast<double>(common.size()) / static_cast<double>(baseline.size());
    return out;
}

/// Linear interpolation between closest ranks (the "type 7" convention).
inline double quantile_type7(std::span<const double> sorted_values, double p) {
    if (sorted_values.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (sorted_values.size() == 1) return sorted_values[0];
    const double h = p * static_cast<double>(sorted_values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted_values.size()) return sorted_values.back();
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

struct LevelStability {
    int r = 0;
    std::vector<int> trial_ids;      // indices of the trials that built successfully
    std::vector<double> per_trial;   // aligned with trial_ids
    double intersection = std::numeric_limits<double>::quiet_NaN();
    double median = std::numeric_limits<double>::quiet_NaN();
    double q1 = std::numeric_limits<double>::quiet_NaN();
    double q3 = std::numeric_limits<double>::quiet_NaN();
    double min = std::numeric_limits<double>::quiet_NaN();
    double max = std::numeric_limits<double>::quiet_NaN();
    int failed_trials = 0;
};

struct StabilityReport {
    std::string algorithm;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    std::vector<LevelStability> levels;
};

/// Noise-stability protocol against an arbitrary graph builder. epsilon
/// and the baseline come from the unperturbed set; each (level, trial)
/// has its own child rng stream, so levels and trials are independent
/// and the whole report is reproducible from the seed. A builder that
/// raises DegenerateInput marks a failed trial, excluded from statistics.
template <class BuildGraph>
StabilityReport run_stability_experiment_with(BuildGraph&& build, std::string algorithm_name, double lambda,
                                              const PointSet& ps, const NoiseSpec& noise,
                                              std::span<const int> levels) {
    if (levels.empty()) throw std::invalid_argument("stability experiment: levels must be nonempty");
    if (noise.trials < 1) throw std::invalid_argument("stability experiment: trials must be >= 1");

    StabilityReport report;
    report.algorithm = std::move(algorithm_name);
    report.lambda = lambda;
    report.seed = noise.seed;
    report.epsilon = min_pairwise_distance(ps);

    const EdgeSet baseline = build(ps);  // errors on the unperturbed set propagate

    for (int r : levels) {
        LevelStability level;
        level.r = r;
        std::vector<EdgeSet> trial_sets;
        trial_sets.reserve(static_cast<std::size_t>(noise.trials));
        for (int t = 0; t < noise.trials; ++t) {
            auto rng = DeterministicRng::child(noise.seed, static_cast<std::uint32_t>(r),
                                               static_cast<std::uint32_t>(t));
            const PointSet moved = perturb(ps, r, report.epsilon, rng, noise.disk_uniform);
            try {
                trial_sets.push_back(build(moved));
                level.trial_ids.push_back(t);
            } catch (const DegenerateInput&) {
                ++level.failed_trials;
            }
        }
        if (!trial_sets.empty()) {
            const StabilityFractions fr = edge_stability(baseline, trial_sets);
            level.per_trial = fr.per_trial;
            level.intersection = fr.intersection;
            std::vector<double> sorted = fr.per_trial;
            std::sort(sorted.begin(), sorted.end());
            level.median = quantile_type7(sorted, 0.5);
            level.q1 = quantile_type7(sorted, 0.25);
            level.q3 = quantile_type7(sorted, 0.75);
            level.min = sorted.front();
            level.max = sorted.back();
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

enum class GraphAlgorithm { greedy_mstme, kruskal, delaunay };

inline const char* to_string(GraphAlgorithm a) {
    switch (a) {
        case GraphAlgorithm::greedy_mstme: return "greedy_mstme";
        case GraphAlgorithm::kruskal: return "kruskal";
        case GraphAlgorithm::delaunay: return "delaunay";
    }
    throw std::invalid_argument("unknown algorithm");
}

inline EdgeSet tree_result_edges(const TreeResult& result) {
    EdgeSet out;
    out.reserve(result.edges.size());
    for (const WeightedEdge& e : result.edges) out.push_back({e.u, e.v});
    return out;
}

inline EdgeSet build_graph_edges(GraphAlgorithm algorithm, const SolverConfig& cfg, const PointSet& ps) {
    switch (algorithm) {
        case GraphAlgorithm::greedy_mstme: return tree_result_edges(greedy_mstme(ps, cfg));
        case GraphAlgorithm::kruskal: return tree_result_edges(kruskal_mst(ps));
        case GraphAlgorithm::delaunay: return delaunay_triangulate(ps).edges;
    }
    throw std::invalid_argument("unknown algorithm");
}

inline StabilityReport run_stability_experiment(const PointSet& ps, GraphAlgorithm algorithm,
                                                const SolverConfig& cfg, const NoiseSpec& noise,
                                                std::span<const int> levels) {
    const double lambda = algorithm == GraphAlgorithm::greedy_mstme ? cfg.lambda : 0.0;
    return run_stability_experiment_with(
        [&](const PointSet& p) { return build_graph_edges(algorithm, cfg, p); }, to_string(algorithm),
        lambda, ps, noise, levels);
}

namespace detail {

inline nlohmann::ordered_json json_number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

inline std::string shortest_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const StabilityReport& report) {
    nlohmann::ordered_json j;
    j["algorithm"] = report.algorithm;
    j["lambda"] = report.lambda;
    j["seed"] = report.seed;
    j["epsilon"] = report.epsilon;
    j["levels"] = nlohmann::ordered_json::array();
    for (const LevelStability& level : report.levels) {
        nlohmann::ordered_json lj;
        lj["r"] = level.r;
        lj["per_trial"] = level.per_trial;
        lj["intersection"] = detail::json_number_or_null(level.intersection);
        lj["median"] = detail::json_number_or_null(level.median);
        lj["q1"] = detail::json_number_or_null(level.q1);
        lj["q3"] = detail::json_number_or_null(level.q3);
        lj["min"] = detail::json_number_or_null(level.min);
        lj["max"] = detail::json_number_or_null(level.max);
        lj["failed_trials"] = level.failed_trials;
        j["levels"].push_back(std::move(lj));
    }
    return j;
}

inline void write_report_json(const StabilityReport& report, std::ostream& out) {
    out << report_to_json(report).dump(2) << '\n';
}

/// One row per successfully built (level, trial) pair; failed trials
/// show up as gaps in the trial column.
inline void write_report_csv(const StabilityReport& report, std::ostream& out) {
    out << "level,trial,stability\n";
    for (const LevelStability& level : report.levels) {
        for (std::size_t i = 0; i < level.per_trial.size(); ++i) {
            out << level.r << ',' << level.trial_ids[i] << ',' << detail::shortest_double(level.per_trial[i])
                << '\n';
        }
    }
}

}  // namespace mstme
