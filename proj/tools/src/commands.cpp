#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "klab/chromatic.hpp"
#include "klab/hardness.hpp"
#include "klab/hg_io.hpp"
#include "klab/hypergraph.hpp"

#include "report_json.hpp"
#include "version.hpp"

namespace klab::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Resolves the input hypergraph and records how it was obtained.
Hypergraph load_input(const RunConfig& cfg, json& echo) {
    if (!cfg.input_path.empty()) {
        std::vector<ParseWarning> warnings;
        Hypergraph h = parse_hypergraph(read_file(cfg.input_path), &warnings);
        for (const auto& w : warnings)
            std::cerr << "warning: " << cfg.input_path << ":" << w.line << ": " << w.message
                      << "\n";
        echo["input"] = json{{"path", cfg.input_path}};
        return h;
    }
    if (cfg.n > 0) {
        if (cfg.k < 1 || cfg.k > cfg.n)
            throw std::invalid_argument("--k must be between 1 and --n");
        echo["input"] = json{{"n", cfg.n}, {"k", cfg.k}};
        return complete_ksubsets(cfg.n, cfg.k);
    }
    throw std::invalid_argument("no input: pass --input FILE or --n N --k K");
}

SearchBudget budget_of(const RunConfig& cfg) { return SearchBudget{cfg.budget_ms}; }

AltConfig alt_config_of(const RunConfig& cfg) {
    AltConfig c;
    c.exact_inner_cap = cfg.inner_cap;
    c.exact_outer_cap = cfg.outer_cap;
    c.heuristic_restarts = cfg.restarts;
    return c;
}

/// Uniformity with a default of 2 when the option was left out.
int require_q(const RunConfig& cfg) {
    if (cfg.q == 0) return 2;
    if (cfg.q < 2) throw std::invalid_argument("--q must be at least 2");
    return cfg.q;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

/// "kg.hg" -> "kg.json"; anything without the .hg suffix just gains ".json".
std::string sidecar_path(const std::string& hg_path) {
    if (hg_path.size() > 3 && hg_path.compare(hg_path.size() - 3, 3, ".hg") == 0)
        return hg_path.substr(0, hg_path.size() - 3) + ".json";
    return hg_path + ".json";
}

int cmd_kneser_build(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph base = load_input(cfg, echo);
    const int q = require_q(cfg);
    echo["q"] = q;
    echo["edge_cap"] = cfg.edge_cap;
    if (cfg.build_output.empty())
        throw std::invalid_argument("kneser build requires --output FILE.hg");

    KneserStructure ks = build_kneser(std::move(base), q, cfg.edge_cap);
    write_text_file(cfg.build_output, format_hypergraph(ks.kg));

    json map = json::array();
    for (int v = 1; v <= ks.kg.vertex_count(); ++v) map.push_back(ks.base_edge(v).elements());
    const std::string side = sidecar_path(cfg.build_output);
    json sidecar{{"q", q},
                 {"base", {{"vertices", ks.base.vertex_count()}, {"edges", ks.base.edge_count()}}},
                 {"vertex_map", map}};
    write_text_file(side, canonical_dump(sidecar));

    result = json{{"kg_vertices", ks.kg.vertex_count()},
                  {"kg_edges", ks.kg.edge_count()},
                  {"output", cfg.build_output},
                  {"sidecar", side}};
    return kExitOk;
}

/// The input itself, or its q-th Kneser hypergraph when --q was given.
Hypergraph coloring_target(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph h = load_input(cfg, echo);
    if (cfg.q <= 0) return h;
    const int q = require_q(cfg);
    echo["q"] = q;
    echo["edge_cap"] = cfg.edge_cap;
    KneserStructure ks = build_kneser(std::move(h), q, cfg.edge_cap);
    result["kneser"] = json{{"vertices", ks.kg.vertex_count()}, {"edges", ks.kg.edge_count()}};
    return std::move(ks.kg);
}

int cmd_chromatic(const RunConfig& cfg, json& echo, json& result) {
    echo["budget_ms"] = cfg.budget_ms;
    Hypergraph h = coloring_target(cfg, echo, result);
    ChromaticResult r = chromatic_number(h, budget_of(cfg));
    result.update(json(r));
    return r.status == ChromaticResult::Status::timed_out ? kExitResource : kExitOk;
}

int cmd_local_chromatic(const RunConfig& cfg, json& echo, json& result) {
    echo["budget_ms"] = cfg.budget_ms;
    Hypergraph h = coloring_target(cfg, echo, result);
    int max_t = cfg.max_t;
    if (max_t <= 0) {
        ChromaticResult chi = chromatic_number(h, budget_of(cfg));
        if (chi.status == ChromaticResult::Status::unbounded)
            throw std::invalid_argument("input has a singleton edge, no proper coloring exists");
        if (!chi.exact())
            throw ResourceLimitError(
                "chromatic number did not finish inside the budget; pass --max-t explicitly");
        max_t = default_local_max_t(h.vertex_count(), chi.value);
        result["chi"] = chi.value;
    }
    echo["max_t"] = cfg.max_t;
    LocalResult r = local_chromatic_number(h, max_t, budget_of(cfg));
    result.update(json(r));
    return r.timed_out ? kExitResource : kExitOk;
}

int cmd_defect(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph h = load_input(cfg, echo);
    const int q = require_q(cfg);
    echo["q"] = q;
    echo["budget_ms"] = cfg.budget_ms;
    DefectResult r = cd(h, q, budget_of(cfg));
    result = json(r);
    return r.timed_out ? kExitResource : kExitOk;
}

AltMode resolve_alt_mode(const std::string& name, int n, int outer_cap, bool* inner) {
    *inner = false;
    if (name == "exact") return AltMode::exact;
    if (name == "heuristic") return AltMode::heuristic;
    if (name == "inner") {
        *inner = true;
        return AltMode::exact_inner;
    }
    if (name == "auto") return n <= outer_cap ? AltMode::exact : AltMode::heuristic;
    throw std::invalid_argument("unknown alt mode: " + name);
}

int cmd_alt(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph h = load_input(cfg, echo);
    const int q = require_q(cfg);
    echo["q"] = q;
    echo["mode"] = cfg.alt_mode;
    echo["seed"] = cfg.seed;
    echo["budget_ms"] = cfg.budget_ms;
    const AltConfig ac = alt_config_of(cfg);
    bool inner = false;
    const AltMode mode = resolve_alt_mode(cfg.alt_mode, h.vertex_count(), ac.exact_outer_cap,
                                          &inner);
    AltResult r = inner ? max_alt_fixed_perm(h, q, identity_permutation(h.vertex_count()), ac,
                                             budget_of(cfg))
                        : alt_number(h, q, mode, cfg.seed, ac, budget_of(cfg));
    result = json(r);
    return r.timed_out ? kExitResource : kExitOk;
}

int cmd_report(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph h = load_input(cfg, echo);
    const int q = require_q(cfg);
    echo["q"] = q;
    echo["exact"] = cfg.exact;
    echo["alt_mode"] = cfg.alt_mode;
    echo["seed"] = cfg.seed;
    echo["budget_ms"] = cfg.budget_ms;

    BoundOptions opt;
    opt.exact_chi = cfg.exact;
    opt.exact_local = cfg.exact;
    opt.local_max_t = cfg.max_t;
    if (cfg.alt_mode == "exact")
        opt.alt = BoundOptions::AltStrategy::exact;
    else if (cfg.alt_mode == "heuristic")
        opt.alt = BoundOptions::AltStrategy::heuristic;
    else if (cfg.alt_mode == "off")
        opt.alt = BoundOptions::AltStrategy::off;
    else if (cfg.alt_mode == "auto")
        opt.alt = BoundOptions::AltStrategy::automatic;
    else
        throw std::invalid_argument("unknown alt mode: " + cfg.alt_mode);
    opt.alt_config = alt_config_of(cfg);
    opt.seed = cfg.seed;
    opt.budget = budget_of(cfg);
    opt.kg_edge_cap = cfg.edge_cap;

    BoundReport r = bound_report(h, q, opt);
    result = json(r);
    if (!r.consistent) {
        for (const auto& v : r.violations) std::cerr << "violation: " << v << "\n";
        return kExitCounterexample;
    }
    const bool timed_out = r.defect.timed_out || (r.alt && r.alt->timed_out) ||
                           (r.chi && r.chi->status == ChromaticResult::Status::timed_out) ||
                           (r.chi_local && r.chi_local->timed_out);
    return timed_out ? kExitResource : kExitOk;
}

int cmd_verify_rainbow(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph h = load_input(cfg, echo);
    const int p = require_q(cfg);
    echo["p"] = p;
    echo["r_mode"] = cfg.r_mode;
    echo["max_t"] = cfg.max_t;
    echo["enumeration_cap"] = cfg.enum_cap;
    echo["samples"] = cfg.samples;
    echo["seed"] = cfg.seed;
    echo["force"] = cfg.force;
    echo["budget_ms"] = cfg.budget_ms;

    SweepOptions opt;
    if (cfg.r_mode == "cd")
        opt.r_mode = SweepOptions::RMode::defect;
    else if (cfg.r_mode == "alt")
        opt.r_mode = SweepOptions::RMode::alternation;
    else
        throw std::invalid_argument("unknown r mode: " + cfg.r_mode);
    opt.max_t = cfg.max_t;
    opt.enumeration_cap = cfg.enum_cap;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.force = cfg.force;
    opt.budget = budget_of(cfg);
    opt.kg_edge_cap = cfg.edge_cap;
    opt.alt_config = alt_config_of(cfg);

    SweepReport r = sweep_verify(h, p, opt);
    result = json(r);

    json files = json::array();
    if (!r.counterexamples.empty()) {
        std::filesystem::create_directories(cfg.artifacts_dir);
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
            std::ostringstream name;
            name << "rainbow-counterexample-" << std::setw(3) << std::setfill('0') << i
                 << ".json";
            const auto path = (std::filesystem::path(cfg.artifacts_dir) / name.str()).string();
            write_text_file(path, canonical_dump(json(r.counterexamples[i])));
            files.push_back(path);
        }
    }
    result["counterexample_files"] = files;

    if (r.counterexample_count > 0) return kExitCounterexample;
    return r.timed_out ? kExitResource : kExitOk;
}

int cmd_fan_check(const RunConfig& cfg, json& echo, json& result) {
    const int q = require_q(cfg);
    if (cfg.fan_n < 1) throw std::invalid_argument("--n must be at least 1");
    if (cfg.fan_m < 1) throw std::invalid_argument("--m must be at least 1");
    echo["q"] = q;
    echo["n"] = cfg.fan_n;
    echo["m"] = cfg.fan_m;
    echo["enumeration_cap"] = cfg.fan_enum_cap;
    echo["samples"] = cfg.fan_samples;
    echo["seed"] = cfg.seed;
    echo["workers"] = cfg.workers;
    echo["budget_ms"] = cfg.budget_ms;

    FanOptions opt;
    opt.enumeration_cap = cfg.fan_enum_cap;
    opt.samples = cfg.fan_samples;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    opt.budget = budget_of(cfg);
    opt.vertex_cap = cfg.sd_vertex_cap;

    FanReport r = exhaustive_fan_check(q, cfg.fan_n, cfg.fan_m, opt);
    result = json(r);
    if (r.violations > 0) return kExitCounterexample;
    return r.timed_out ? kExitResource : kExitOk;
}

int cmd_hardness_demo(const RunConfig& cfg, json& echo, json& result) {
    Hypergraph g = load_input(cfg, echo);
    echo["random_rho"] = cfg.random_rho;
    echo["seed"] = cfg.seed;
    echo["budget_ms"] = cfg.budget_ms;

    std::vector<int> rho(static_cast<std::size_t>(g.vertex_count()));
    std::iota(rho.begin(), rho.end(), 1);
    if (cfg.random_rho) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(rho.begin(), rho.end(), rng);
    }

    const AltConfig ac = alt_config_of(cfg);
    ReductionVerdict v;
    if (cfg.random_rho) {
        JoinInstance inst = join_construction(g, rho);
        IndependenceResult ind = independence_number(g, budget_of(cfg));
        AltResult alt = max_alt_fixed_perm(inst.joined, 2,
                                           identity_permutation(inst.joined.vertex_count()), ac,
                                           budget_of(cfg));
        v.alpha = ind.value;
        v.max_alt_id = alt.value;
        v.independent_witness = ind.witness;
        v.alt_witness = alt.vector;
        v.joined_vertices = inst.joined.vertex_count();
        v.timed_out = ind.timed_out || alt.timed_out;
        v.equal = !v.timed_out && v.max_alt_id == 2 * v.alpha;
    } else {
        v = verify_reduction(g, ac, budget_of(cfg));
    }

    result = json(v);
    result["rho"] = rho;
    if (v.timed_out) return kExitResource;
    return v.equal ? kExitOk : kExitCounterexample;
}

void write_report(const RunConfig& cfg, const json& report) {
    const std::string text = canonical_dump(report);
    if (cfg.output_path.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        write_text_file(cfg.output_path, text);
    }
}

} // namespace

int run(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    try {
        json echo = json::object();
        json result = json::object();
        int code = kExitUsage;
        if (cfg.subcommand == "kneser-build")
            code = cmd_kneser_build(cfg, echo, result);
        else if (cfg.subcommand == "chromatic")
            code = cmd_chromatic(cfg, echo, result);
        else if (cfg.subcommand == "local-chromatic")
            code = cmd_local_chromatic(cfg, echo, result);
        else if (cfg.subcommand == "defect")
            code = cmd_defect(cfg, echo, result);
        else if (cfg.subcommand == "alt")
            code = cmd_alt(cfg, echo, result);
        else if (cfg.subcommand == "report")
            code = cmd_report(cfg, echo, result);
        else if (cfg.subcommand == "verify-rainbow")
            code = cmd_verify_rainbow(cfg, echo, result);
        else if (cfg.subcommand == "fan-check")
            code = cmd_fan_check(cfg, echo, result);
        else if (cfg.subcommand == "hardness-demo")
            code = cmd_hardness_demo(cfg, echo, result);
        else
            throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);

        json report{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                    {"command", cfg.subcommand},
                    {"config", std::move(echo)},
                    {"result", std::move(result)},
                    {"exit_code", code}};
        if (cfg.timings) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            report["elapsed_ms"] = elapsed.count();
        }
        write_report(cfg, report);
        return code;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << cfg.input_path << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace klab::cli
