#pragma once

#include <string>

#include "json.hpp"

#include "klab/bounds.hpp"
#include "klab/chromatic.hpp"
#include "klab/fan.hpp"
#include "klab/hardness.hpp"
#include "klab/hypergraph.hpp"
#include "klab/rainbow.hpp"
#include "klab/signed_vector.hpp"
#include "klab/vertex_set.hpp"

namespace klab {

// nlohmann picks these up by argument-dependent lookup. The default json
// object type keeps keys sorted, which is what makes reports byte-stable.

void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const Coloring& c);
void to_json(nlohmann::json& j, const SignedVector& x);
void to_json(nlohmann::json& j, const ChromaticResult& r);
void to_json(nlohmann::json& j, const LocalResult& r);
void to_json(nlohmann::json& j, const DefectResult& r);
void to_json(nlohmann::json& j, const AltResult& r);
void to_json(nlohmann::json& j, const TheoremBound& b);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const SweepReport& r);
void to_json(nlohmann::json& j, const FanLabel& l);
void to_json(nlohmann::json& j, const FanReport& r);
void to_json(nlohmann::json& j, const ReductionVerdict& v);

std::string alt_mode_name(AltMode mode);

/// Canonical serialization: two-space indent, sorted keys, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

} // namespace klab
