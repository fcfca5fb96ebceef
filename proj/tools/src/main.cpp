#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "version.hpp"

namespace {

using klab::cli::RunConfig;

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-i,--input", cfg.input_path, "hypergraph in .hg format")
        ->check(CLI::ExistingFile);
    cmd->add_option("--n", cfg.n, "use the complete k-subset base on {1..n} instead of a file");
    cmd->add_option("--k", cfg.k, "subset size accompanying --n");
}

void add_q_option(CLI::App* cmd, RunConfig& cfg, const std::string& desc) {
    cmd->add_option("--q", cfg.q, desc)->check(CLI::PositiveNumber);
}

void add_budget_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--budget-ms", cfg.budget_ms, "wall clock budget in ms, 0 = unlimited")
        ->envname("KLAB_BUDGET_MS");
}

void add_edge_cap_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--edge-cap", cfg.edge_cap, "refuse Kneser hypergraphs with more edges")
        ->envname("KLAB_EDGE_CAP");
}

void add_alt_tuning_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--inner-cap", cfg.inner_cap,
                    "largest n the exact signed-vector search accepts")
        ->envname("KLAB_ALT_INNER_CAP");
    cmd->add_option("--outer-cap", cfg.outer_cap,
                    "largest n the exact permutation scan accepts")
        ->envname("KLAB_ALT_OUTER_CAP");
    cmd->add_option("--restarts", cfg.restarts, "seeded restarts of the heuristic ordering search");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-o,--output", cfg.output_path, "write the JSON report here instead of stdout");
    cmd->add_flag("--timings", cfg.timings, "include elapsed_ms in the report");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    CLI::App app{"exact Kneser hypergraph invariants, lower bounds, and verifiers"};
    app.require_subcommand(1);
    app.set_version_flag("--version",
                         std::string(klab::cli::kToolName) + " " + klab::cli::kToolVersion);

    auto* kneser = app.add_subcommand("kneser", "Kneser hypergraph constructions");
    kneser->require_subcommand(1);
    auto* build = kneser->add_subcommand(
        "build", "materialize the q-th Kneser hypergraph as .hg plus a vertex-map sidecar");
    add_input_options(build, cfg);
    add_q_option(build, cfg, "uniformity of the Kneser construction (default 2)");
    add_edge_cap_option(build, cfg);
    build->add_option("-o,--output", cfg.build_output, "destination .hg path")->required();
    build->add_flag("--timings", cfg.timings, "include elapsed_ms in the report");
    build->callback([&cfg] { cfg.subcommand = "kneser-build"; });

    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
    add_input_options(chromatic, cfg);
    add_q_option(chromatic, cfg,
                 "color the q-th Kneser hypergraph of the input instead of the input itself");
    add_edge_cap_option(chromatic, cfg);
    add_budget_option(chromatic, cfg);
    add_output_options(chromatic, cfg);
    chromatic->callback([&cfg] { cfg.subcommand = "chromatic"; });

    auto* local = app.add_subcommand("local-chromatic",
                                     "minimum over proper colorings of the largest closed "
                                     "neighborhood palette");
    add_input_options(local, cfg);
    add_q_option(local, cfg,
                 "color the q-th Kneser hypergraph of the input instead of the input itself");
    add_edge_cap_option(local, cfg);
    local->add_option("--max-t", cfg.max_t,
                      "color budget of the minimization (default: chromatic number + 2)");
    add_budget_option(local, cfg);
    add_output_options(local, cfg);
    local->callback([&cfg] { cfg.subcommand = "local-chromatic"; });

    auto* defect = app.add_subcommand(
        "defect", "fewest vertex deletions leaving a q-colorable subhypergraph");
    add_input_options(defect, cfg);
    add_q_option(defect, cfg, "color count of the target (default 2)");
    add_budget_option(defect, cfg);
    add_output_options(defect, cfg);
    defect->callback([&cfg] { cfg.subcommand = "defect"; });

    auto* alt = app.add_subcommand("alt", "alternation number over signed vectors");
    add_input_options(alt, cfg);
    add_q_option(alt, cfg, "number of nonzero symbols (default 2)");
    alt->add_option("--mode", cfg.alt_mode, "exact, heuristic, inner, or auto (by size)")
        ->check(CLI::IsMember({"auto", "exact", "heuristic", "inner"}));
    alt->add_option("--seed", cfg.seed, "seed for heuristic restarts");
    add_alt_tuning_options(alt, cfg);
    add_budget_option(alt, cfg);
    add_output_options(alt, cfg);
    alt->callback([&cfg] { cfg.subcommand = "alt"; });

    auto* report = app.add_subcommand(
        "report", "defect and alternation invariants with every applicable lower bound");
    add_input_options(report, cfg);
    add_q_option(report, cfg, "uniformity of the Kneser construction (default 2)");
    report->add_flag("--exact", cfg.exact,
                     "also compute the chromatic and local chromatic numbers exactly");
    report->add_option("--alt-mode", cfg.alt_mode, "exact, heuristic, off, or auto (by size)")
        ->check(CLI::IsMember({"auto", "exact", "heuristic", "off"}));
    report->add_option("--max-t", cfg.max_t, "color budget of the local minimization");
    report->add_option("--seed", cfg.seed, "seed for heuristic alternation search");
    add_alt_tuning_options(report, cfg);
    add_edge_cap_option(report, cfg);
    add_budget_option(report, cfg);
    add_output_options(report, cfg);
    report->callback([&cfg] { cfg.subcommand = "report"; });

    auto* rainbow = app.add_subcommand(
        "verify-rainbow",
        "sweep proper colorings of the p-th Kneser hypergraph for rainbow p-partite witnesses");
    add_input_options(rainbow, cfg);
    rainbow->add_option("--p", cfg.q, "number of parts (default 2)")->check(CLI::PositiveNumber);
    rainbow->add_option("--r-mode", cfg.r_mode,
                        "witness size source: cd (defect) or alt (n minus alternation)")
        ->check(CLI::IsMember({"cd", "alt"}));
    rainbow->add_option("--max-t", cfg.max_t,
                        "sweep colorings with up to this many colors (default: chromatic + 1)");
    rainbow->add_option("--enum-cap", cfg.enum_cap,
                        "canonical colorings enumerated before switching to sampling")
        ->envname("KLAB_ENUM_CAP");
    rainbow->add_option("--samples", cfg.samples, "sampled colorings after the cap");
    rainbow->add_option("--seed", cfg.seed, "seed for sampling");
    rainbow->add_flag("--force", cfg.force, "run even when p is not prime");
    rainbow->add_option("--artifacts-dir", cfg.artifacts_dir,
                        "directory for persisted counterexample colorings");
    add_alt_tuning_options(rainbow, cfg);
    add_edge_cap_option(rainbow, cfg);
    add_budget_option(rainbow, cfg);
    add_output_options(rainbow, cfg);
    rainbow->callback([&cfg] { cfg.subcommand = "verify-rainbow"; });

    auto* fan = app.add_subcommand(
        "fan-check", "exhaust equivariant labelings of a join subdivision for alternating chains");
    add_q_option(fan, cfg, "group order (default 2)");
    fan->add_option("--n", cfg.fan_n, "join factors")->required();
    fan->add_option("--m", cfg.fan_m, "absolute values available to labels")->required();
    fan->add_option("--enum-cap", cfg.fan_enum_cap,
                    "largest labeling count checked exhaustively")
        ->envname("KLAB_ENUM_CAP");
    fan->add_option("--samples", cfg.fan_samples,
                    "sampled labelings when over the cap (0 = refuse)");
    fan->add_option("--seed", cfg.seed, "seed for sampling");
    fan->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    fan->add_option("--vertex-cap", cfg.sd_vertex_cap,
                    "refuse subdivision domains with more vertices")
        ->envname("KLAB_SD_VERTEX_CAP");
    add_budget_option(fan, cfg);
    add_output_options(fan, cfg);
    fan->callback([&cfg] { cfg.subcommand = "fan-check"; });

    auto* hardness = app.add_subcommand(
        "hardness-demo",
        "check on one graph that the join construction ties alternation to independence");
    add_input_options(hardness, cfg);
    hardness->add_flag("--random-rho", cfg.random_rho, "renumber the join by a seeded shuffle");
    hardness->add_option("--seed", cfg.seed, "seed for --random-rho");
    hardness->add_option("--inner-cap", cfg.inner_cap,
                         "largest join size the exact alternation search accepts")
        ->envname("KLAB_ALT_INNER_CAP");
    add_budget_option(hardness, cfg);
    add_output_options(hardness, cfg);
    hardness->callback([&cfg] { cfg.subcommand = "hardness-demo"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? klab::cli::kExitOk : klab::cli::kExitUsage;
    }

    return klab::cli::run(cfg);
}
