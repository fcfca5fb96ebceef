#pragma once

#include <cstdint>
#include <string>

#include "klab/bounds.hpp"
#include "klab/fan.hpp"
#include "klab/kneser_graph.hpp"
#include "klab/rainbow.hpp"

namespace klab::cli {

/// Everything a subcommand needs, populated by the argument parser. Fields
/// irrelevant to the chosen subcommand keep their defaults and are ignored.
struct RunConfig {
    std::string subcommand;

    // Input: a .hg file, or the complete k-subsets of [n] when n > 0.
    std::string input_path;
    int n = 0;
    int k = 0;

    // Uniformity q (also the number of parts p). 0 on the coloring commands
    // means "color the input itself"; q > 0 colors its Kneser hypergraph.
    int q = 0;

    std::uint64_t seed = 0;
    std::int64_t budget_ms = 0;
    std::int64_t edge_cap = kDefaultKgEdgeCap;
    /// Include elapsed_ms in the report. Off by default so reruns with equal
    /// config and seed are byte-identical.
    bool timings = false;
    /// Report destination; empty = stdout.
    std::string output_path;

    // kneser build: destination of the materialized .hg (the JSON report
    // keeps the usual output_path/stdout routing).
    std::string build_output;

    // chromatic / local-chromatic / verify-rainbow
    int max_t = 0;

    // alt / report
    std::string alt_mode = "auto";
    int restarts = 3;
    int inner_cap = 22;
    int outer_cap = 9;

    // report
    bool exact = false;

    // verify-rainbow
    std::string r_mode = "cd";
    std::int64_t enum_cap = 5'000'000;
    int samples = 10'000;
    bool force = false;
    std::string artifacts_dir = "counterexamples";

    // fan-check
    int fan_n = 0;
    int fan_m = 0;
    std::int64_t fan_enum_cap = 10'000'000;
    std::int64_t fan_samples = 0;
    int workers = 1;
    std::int64_t sd_vertex_cap = kDefaultSdVertexCap;

    // hardness-demo
    bool random_rho = false;
};

inline constexpr int kExitOk = 0;
/// Reserved for mathematical counterexamples: a rainbow sweep or fan check
/// failure, or the join identity not holding.
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs the configured subcommand, writes its JSON report, and returns the
/// process exit code. Usage problems and resource limits are reported on
/// stderr.
int run(const RunConfig& config);

} // namespace klab::cli
