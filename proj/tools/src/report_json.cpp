#include "report_json.hpp"

namespace klab {

void to_json(nlohmann::json& j, const VertexSet& s) {
    j = s.elements();
}

void to_json(nlohmann::json& j, const Coloring& c) {
    j = nlohmann::json{{"t", c.t}, {"colors", c.colors}};
}

void to_json(nlohmann::json& j, const SignedVector& x) {
    j = nlohmann::json{{"q", x.q}, {"entries", x.entries}};
}

void to_json(nlohmann::json& j, const ChromaticResult& r) {
    j = nlohmann::json::object();
    switch (r.status) {
    case ChromaticResult::Status::exact:
        j["status"] = "exact";
        j["value"] = r.value;
        break;
    case ChromaticResult::Status::unbounded:
        j["status"] = "unbounded";
        j["value"] = "unbounded";
        break;
    case ChromaticResult::Status::timed_out:
        j["status"] = "timed_out";
        j["value"] = nullptr;
        break;
    }
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const LocalResult& r) {
    j = nlohmann::json{
        {"value", r.value},
        {"witness", r.witness},
        {"witness_t", r.witness_t},
        {"max_t", r.max_t},
        {"timed_out", r.timed_out},
    };
}

void to_json(nlohmann::json& j, const DefectResult& r) {
    j = nlohmann::json{
        {"value", r.value},
        {"witness", r.witness},
        {"lower_bound", r.lower_bound},
        {"timed_out", r.timed_out},
    };
}

std::string alt_mode_name(AltMode mode) {
    switch (mode) {
    case AltMode::exact: return "exact";
    case AltMode::exact_inner: return "exact_inner";
    case AltMode::heuristic: return "heuristic";
    }
    return "unknown";
}

void to_json(nlohmann::json& j, const AltResult& r) {
    j = nlohmann::json{
        {"value", r.value},
        {"permutation", r.permutation},
        {"vector", r.vector ? nlohmann::json(*r.vector) : nlohmann::json(nullptr)},
        {"mode", alt_mode_name(r.mode)},
        {"timed_out", r.timed_out},
        {"seed", r.seed},
        {"restarts", r.restarts},
    };
}

void to_json(nlohmann::json& j, const TheoremBound& b) {
    j = nlohmann::json{
        {"target", b.target},
        {"bound", b.available ? nlohmann::json(b.bound) : nlohmann::json(nullptr)},
        {"applicable", b.applicable},
        {"available", b.available},
    };
    if (!b.note.empty()) j["note"] = b.note;
}

void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{
        {"n", r.n},
        {"q", r.q},
        {"kneser", {{"vertices", r.kg_vertices}, {"edges", r.kg_edges}}},
        {"defect", r.defect},
        {"alt", r.alt ? nlohmann::json(*r.alt) : nlohmann::json(nullptr)},
        {"chi", r.chi ? nlohmann::json(*r.chi) : nlohmann::json(nullptr)},
        {"chi_local", r.chi_local ? nlohmann::json(*r.chi_local) : nlohmann::json(nullptr)},
        {"consistent", r.consistent},
        {"violations", r.violations},
    };
    auto bounds = nlohmann::json::object();
    for (const auto& b : r.bounds) bounds[b.name] = b;
    j["bounds"] = bounds;
}

void to_json(nlohmann::json& j, const SweepReport& r) {
    j = nlohmann::json{
        {"p", r.p},
        {"r", r.r},
        {"r_mode", r.r_mode},
        {"max_t", r.max_t},
        {"kneser", {{"vertices", r.kg_vertices}, {"edges", r.kg_edges}}},
        {"chi", r.chi},
        {"prime_p", r.prime_p},
        {"forced", r.forced},
        {"exhaustive", r.exhaustive},
        {"capped", r.capped},
        {"timed_out", r.timed_out},
        {"colorings_checked", r.colorings_checked},
        {"witnesses_found", r.witnesses_found},
        {"improper_skipped", r.improper_skipped},
        {"sampled", r.sampled},
        {"counterexample_count", r.counterexample_count},
        {"seed", r.seed},
    };
}

void to_json(nlohmann::json& j, const FanLabel& l) {
    j = nlohmann::json{{"sign", l.sign}, {"abs", l.abs}};
}

void to_json(nlohmann::json& j, const FanReport& r) {
    j = nlohmann::json{
        {"q", r.q},
        {"n", r.n},
        {"m", r.m},
        {"vertices", r.vertices},
        {"orbits", r.orbits},
        {"total_labelings", r.total_labelings},
        {"exhaustive", r.exhaustive},
        {"enumerated", r.enumerated},
        {"proper", r.proper},
        {"with_chain", r.with_chain},
        {"violations", r.violations},
        {"sampled", r.sampled},
        {"seed", r.seed},
        {"timed_out", r.timed_out},
        {"counterexample",
         r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr)},
    };
}

void to_json(nlohmann::json& j, const ReductionVerdict& v) {
    j = nlohmann::json{
        {"equal", v.equal},
        {"alpha", v.alpha},
        {"max_alt_id", v.max_alt_id},
        {"independent_witness", v.independent_witness},
        {"alt_witness", v.alt_witness ? nlohmann::json(*v.alt_witness) : nlohmann::json(nullptr)},
        {"joined_vertices", v.joined_vertices},
        {"timed_out", v.timed_out},
    };
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

} // namespace klab
