#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mstme/delaunay.hpp"
#include "mstme/entropy.hpp"
#include "mstme/point_set.hpp"
#include "mstme/solver.hpp"
#include "mstme/stability.hpp"

namespace mstme::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitInternal = 4;

/// Maps library exceptions onto the documented exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegenerateInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

/// "A..B" (inclusive, ascending) or a single "A"; noise levels are
/// nonnegative integers.
inline std::vector<int> parse_levels(std::string_view spec) {
    const auto parse_int = [&](std::string_view s) {
        int value = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value < 0)
            throw std::invalid_argument("bad level spec: " + std::string(spec));
        return value;
    };
    const std::size_t dots = spec.find("..");
    int lo = 0, hi = 0;
    if (dots == std::string_view::npos) {
        lo = hi = parse_int(spec);
    } else {
        lo = parse_int(spec.substr(0, dots));
        hi = parse_int(spec.substr(dots + 2));
    }
    if (hi < lo) throw std::invalid_argument("bad level spec: " + std::string(spec));
    std::vector<int> levels;
    for (int r = lo; r <= hi; ++r) levels.push_back(r);
    return levels;
}

/// Edge-list document: "# key value" metadata, then one "u v w" line per
/// edge, canonical and sorted by (u, v). All header fields can be
/// recomputed from the edge records and the input point set.
struct GraphOutput {
    std::string algorithm;
    double lambda = 0.0;
    int n = 0;
    double total_weight = 0.0;
    double entropy_bits = 0.0;
    double objective = 0.0;
    std::vector<WeightedEdge> edges;
};

inline GraphOutput make_graph_output(std::string algorithm, double lambda, const PointSet& ps,
                                     std::vector<WeightedEdge> edges) {
    mstme::detail::sort_by_endpoints(edges);
    GraphOutput out;
    out.algorithm = std::move(algorithm);
    out.lambda = lambda;
    out.n = static_cast<int>(ps.size());
    std::vector<int> degree(ps.size(), 0);
    for (const WeightedEdge& e : edges) {
        out.total_weight += e.w;
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    out.entropy_bits = DegreeHistogram::from_degrees(degree).entropy_bits();
    out.objective = objective_cost(out.total_weight, out.entropy_bits, lambda);
    out.edges = std::move(edges);
    return out;
}

inline void write_graph_output(const GraphOutput& g, std::ostream& out) {
    std::string line;
    const auto header_double = [&](const char* key, double v) {
        line.clear();
        line += "# ";
        line += key;
        line += ' ';
        mstme::detail::format_double(line, v);
        line += '\n';
        out << line;
    };
    out << "# algorithm " << g.algorithm << '\n';
    header_double("lambda", g.lambda);
    out << "# n " << g.n << '\n';
    header_double("total_weight", g.total_weight);
    header_double("entropy", g.entropy_bits);
    header_double("objective", g.objective);
    for (const WeightedEdge& e : g.edges) {
        line.clear();
        line += std::to_string(e.u);
        line += ' ';
        line += std::to_string(e.v);
        line += ' ';
        mstme::detail::format_double(line, e.w);
        line += '\n';
        out << line;
    }
}

enum class CliAlgorithm { mstme, mst, delaunay };

inline const char* to_string(CliAlgorithm a) {
    switch (a) {
        case CliAlgorithm::mstme: return "mstme";
        case CliAlgorithm::mst: return "mst";
        case CliAlgorithm::delaunay: return "delaunay";
    }
    throw std::invalid_argument("unknown algorithm");
}

inline CliAlgorithm algorithm_from_string(std::string_view name) {
    if (name == "mstme") return CliAlgorithm::mstme;
    if (name == "mst") return CliAlgorithm::mst;
    if (name == "delaunay") return CliAlgorithm::delaunay;
    throw std::invalid_argument("unknown algorithm: " + std::string(name) + " (expected mstme|mst|delaunay)");
}

inline GraphAlgorithm to_graph_algorithm(CliAlgorithm a) {
    switch (a) {
        case CliAlgorithm::mstme: return GraphAlgorithm::greedy_mstme;
        case CliAlgorithm::mst: return GraphAlgorithm::kruskal;
        case CliAlgorithm::delaunay: return GraphAlgorithm::delaunay;
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path.string());
    out << contents;
    if (!out) throw std::invalid_argument("write failed: " + path.string());
}

inline std::vector<WeightedEdge> weighted_edges_of(const PointSet& ps, const EdgeSet& pairs) {
    std::vector<WeightedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs)
        edges.push_back({u, v, euclidean_distance(ps[static_cast<std::size_t>(u)], ps[static_cast<std::size_t>(v)])});
    return edges;
}

}  // namespace detail

struct BuildOptions {
    std::string input;
    std::string output;  // empty = stdout
    CliAlgorithm algorithm = CliAlgorithm::mstme;
    double lambda = 0.5;
    bool isolated_in_entropy = true;
};

inline int cmd_build(const BuildOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PointSet ps = load_pointset_file(opt.input);
        SolverConfig cfg{opt.lambda, opt.isolated_in_entropy};
        GraphOutput g;
        switch (opt.algorithm) {
            case CliAlgorithm::mstme:
                g = make_graph_output("mstme", opt.lambda, ps, greedy_mstme(ps, cfg).edges);
                break;
            case CliAlgorithm::mst:
                g = make_graph_output("mst", 0.0, ps, kruskal_mst(ps).edges);
                break;
            case CliAlgorithm::delaunay: {
                if (ps.size() < 3) throw std::invalid_argument("delaunay needs at least 3 points");
                const Triangulation tri = delaunay_triangulate(ps);
                g = make_graph_output("delaunay", 0.0, ps, detail::weighted_edges_of(ps, tri.edges));
                break;
            }
        }
        if (opt.output.empty()) {
            write_graph_output(g, out);
        } else {
            std::ostringstream buf;
            write_graph_output(g, buf);
            detail::write_file(opt.output, buf.str());
        }
        return kExitOk;
    });
}

struct StabilityOptions {
    std::string input;
    CliAlgorithm algorithm = CliAlgorithm::mstme;
    double lambda = 0.5;
    std::string levels = "1..10";
    int trials = 30;
    std::uint64_t seed = 0;
    std::string out_json;
    std::string out_csv;
    bool isolated_in_entropy = true;
    bool disk_uniform_noise = false;
};

inline int cmd_stability(const StabilityOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PointSet ps = load_pointset_file(opt.input);
        const std::vector<int> levels = parse_levels(opt.levels);
        const SolverConfig cfg{opt.lambda, opt.isolated_in_entropy};
        const NoiseSpec noise{opt.trials, opt.seed, opt.disk_uniform_noise};
        const StabilityReport report =
            run_stability_experiment(ps, to_graph_algorithm(opt.algorithm), cfg, noise, levels);

        if (!opt.out_json.empty()) {
            std::ostringstream buf;
            write_report_json(report, buf);
            detail::write_file(opt.out_json, buf.str());
        }
        if (!opt.out_csv.empty()) {
            std::ostringstream buf;
            write_report_csv(report, buf);
            detail::write_file(opt.out_csv, buf.str());
        }

        bool enough_successes = true;
        for (const LevelStability& level : report.levels) {
            out << "r=" << level.r << " median=" << mstme::detail::shortest_double(level.median)
                << " intersection=" << mstme::detail::shortest_double(level.intersection);
            if (level.failed_trials > 0) out << " failed=" << level.failed_trials;
            out << '\n';
            if (2 * static_cast<int>(level.per_trial.size()) < opt.trials) enough_successes = false;
        }
        return enough_successes ? kExitOk : kExitDegenerate;
    });
}

struct OracleCheckOptions {
    int n = 5;
    int instances = 20;
    double lambda = 1.0;
    std::uint64_t seed = 0;
};

/// Random instances solved both exactly and greedily; the greedy
/// objective may never beat the exact one.
inline int cmd_oracle_check(const OracleCheckOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.n < 3 || opt.n > 9) throw std::invalid_argument("oracle-check: n must be in [3, 9]");
        if (opt.instances < 1) throw std::invalid_argument("oracle-check: need at least 1 instance");
        DeterministicRng rng(opt.seed);
        const SolverConfig cfg{opt.lambda, true};
        double mean_gap = 0.0;
        double max_gap = -std::numeric_limits<double>::infinity();
        bool sound = true;
        for (int i = 0; i < opt.instances; ++i) {
            PointSet ps;
            for (int k = 0; k < opt.n; ++k) ps.points.push_back({rng.uniform01(), rng.uniform01()});
            const TreeResult exact = exact_mstme(ps, cfg);
            const TreeResult greedy = greedy_mstme(ps, cfg);
            const double gap = greedy.objective - exact.objective;
            out << "instance " << i << ": exact=" << mstme::detail::shortest_double(exact.objective)
                << " greedy=" << mstme::detail::shortest_double(greedy.objective)
                << " gap=" << mstme::detail::shortest_double(gap) << '\n';
            mean_gap += gap;
            max_gap = std::max(max_gap, gap);
            if (gap < -1e-9) sound = false;
        }
        mean_gap /= static_cast<double>(opt.instances);
        out << "mean gap " << mstme::detail::shortest_double(mean_gap) << '\n';
        out << "max gap " << mstme::detail::shortest_double(max_gap) << '\n';
        if (!sound) {
            err << "internal error: greedy objective beat the exact oracle\n";
            return kExitInternal;
        }
        return kExitOk;
    });
}

struct GenerateOptions {
    std::string shape = "ring";
    int n = 60;
    std::uint64_t seed = 0;
    std::string output;  // empty = stdout
};

inline int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PointSet ps = generate_silhouette(silhouette_from_string(opt.shape), opt.n, opt.seed);
        if (opt.output.empty()) {
            serialize_pointset(ps, out);
        } else {
            std::ostringstream buf;
            serialize_pointset(ps, buf);
            detail::write_file(opt.output, buf.str());
        }
        return kExitOk;
    });
}

}  // namespace mstme::cli
