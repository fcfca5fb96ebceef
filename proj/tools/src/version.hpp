#pragma once

namespace klab::cli {

inline constexpr const char* kToolName = "kneser-lab";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace klab::cli
