#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mstme/cli.hpp"

namespace cli = mstme::cli;

int main(int argc, char** argv) {
    CLI::App app{"Point-set data graphs: entropy-regularized spanning trees, "
                 "Delaunay baseline, and noise-stability experiments"};
    app.require_subcommand(1);

    std::string algorithm = "mstme";
    const auto algorithm_flag = [&](CLI::App* cmd) {
        cmd->add_option("--algorithm", algorithm, "Graph algorithm: mstme|mst|delaunay")
            ->check(CLI::IsMember({"mstme", "mst", "delaunay"}));
    };

    cli::BuildOptions build;
    CLI::App* cmd_build = app.add_subcommand("build", "Build one data graph and write its edge list");
    cmd_build->add_option("input", build.input, "Point file (x y per line)")->required();
    algorithm_flag(cmd_build);
    cmd_build->add_option("--lambda", build.lambda, "Entropy weight (mstme only)");
    cmd_build->add_option("--out", build.output, "Output path (default: stdout)");
    cmd_build->add_option("--isolated-in-entropy", build.isolated_in_entropy,
                          "Count isolated vertices in intermediate entropy");

    cli::StabilityOptions stab;
    CLI::App* cmd_stab = app.add_subcommand("stability", "Run the noise-perturbation stability experiment");
    cmd_stab->add_option("input", stab.input, "Point file (x y per line)")->required();
    algorithm_flag(cmd_stab);
    cmd_stab->add_option("--lambda", stab.lambda, "Entropy weight (mstme only)");
    cmd_stab->add_option("--levels", stab.levels, "Noise level range, e.g. 1..10");
    cmd_stab->add_option("--trials", stab.trials, "Perturbed datasets per level");
    cmd_stab->add_option("--seed", stab.seed, "64-bit experiment seed");
    cmd_stab->add_option("--out", stab.out_json, "Stability report JSON path");
    cmd_stab->add_option("--out-csv", stab.out_csv, "Boxplot-ready CSV path");
    cmd_stab->add_option("--isolated-in-entropy", stab.isolated_in_entropy,
                         "Count isolated vertices in intermediate entropy");
    cmd_stab->add_option("--disk-uniform-noise", stab.disk_uniform_noise,
                         "Sample noise uniformly over the disk instead of the radius");

    cli::OracleCheckOptions oracle;
    CLI::App* cmd_oracle = app.add_subcommand("oracle-check", "Compare the greedy solver against exact enumeration");
    cmd_oracle->add_option("--n", oracle.n, "Points per instance (3..9)");
    cmd_oracle->add_option("--instances", oracle.instances, "Number of random instances");
    cmd_oracle->add_option("--lambda", oracle.lambda, "Entropy weight");
    cmd_oracle->add_option("--seed", oracle.seed, "64-bit seed");

    cli::GenerateOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("generate", "Generate a synthetic silhouette point set");
    cmd_gen->add_option("--shape", gen.shape, "ring|ring_with_appendage");
    cmd_gen->add_option("--n", gen.n, "Number of points (>= 8)");
    cmd_gen->add_option("--seed", gen.seed, "64-bit seed");
    cmd_gen->add_option("--out", gen.output, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (cmd_build->parsed()) {
            build.algorithm = cli::algorithm_from_string(algorithm);
            return cli::cmd_build(build, std::cout, std::cerr);
        }
        if (cmd_stab->parsed()) {
            stab.algorithm = cli::algorithm_from_string(algorithm);
            return cli::cmd_stability(stab, std::cout, std::cerr);
        }
        if (cmd_oracle->parsed()) return cli::cmd_oracle_check(oracle, std::cout, std::cerr);
        if (cmd_gen->parsed()) return cli::cmd_generate(gen, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return cli::kExitInternal;
    }
    return cli::kExitUsage;
}
