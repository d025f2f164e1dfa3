// Minimal library tour: build the three graph flavors over one point set
// and compare how well their edges survive noise.

#include <cstdio>

#include "mstme/mstme.hpp"

using namespace mstme;

int main(int argc, char** argv) try {
    const PointSet ps = argc > 1 ? load_pointset_file(argv[1])
                                 : generate_silhouette(Silhouette::ring_with_appendage, 60, 42);
    std::printf("%zu points, shortest pairwise distance %.4f\n\n", ps.size(), min_pairwise_distance(ps));

    std::printf("spanning trees as lambda trades weight for degree diversity:\n");
    for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
        const TreeResult r = greedy_mstme(ps, {lambda, true});
        std::printf("  lambda %.1f  weight %8.4f  entropy %6.4f  objective %8.4f\n", lambda,
                    r.total_weight, r.entropy_bits, r.objective);
    }

    const Triangulation tri = delaunay_triangulate(ps);
    std::printf("delaunay baseline: %zu triangles, %zu edges\n\n", tri.triangles.size(), tri.edges.size());

    const NoiseSpec noise{30, 7, false};
    const std::vector<int> levels{1, 3, 5};
    std::printf("median edge stability under noise (fraction of baseline edges kept):\n");
    std::printf("%5s %10s %10s\n", "r", "mstme", "delaunay");
    const StabilityReport tree_report =
        run_stability_experiment(ps, GraphAlgorithm::greedy_mstme, {0.5, true}, noise, levels);
    const StabilityReport tri_report =
        run_stability_experiment(ps, GraphAlgorithm::delaunay, {0.5, true}, noise, levels);
    for (std::size_t i = 0; i < levels.size(); ++i)
        std::printf("%5d %10.3f %10.3f\n", levels[i], tree_report.levels[i].median,
                    tri_report.levels[i].median);
    return 0;
} catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
}
