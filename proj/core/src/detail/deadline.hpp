#pragma once

#include <algorithm>
#include <chrono>

#include "klab/chromatic.hpp"

namespace klab::detail {

/// Absolute form of a SearchBudget, shared by nested searches so that a
/// multi-phase computation drains one clock instead of restarting per phase.
struct Deadline {
    using Clock = std::chrono::steady_clock;

    bool active = false;
    Clock::time_point at{};

    static Deadline from(const SearchBudget& budget) {
        Deadline d;
        if (!budget.unlimited()) {
            d.active = true;
            d.at = Clock::now() + std::chrono::milliseconds(budget.time_limit_ms);
        }
        return d;
    }

    bool expired() const { return active && Clock::now() >= at; }

    /// Budget for a nested call. At least 1 ms so the callee flags its own
    /// timeout instead of treating the budget as unlimited.
    SearchBudget remaining() const {
        if (!active) return {};
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(at - Clock::now());
        return SearchBudget{std::max<std::int64_t>(1, left.count())};
    }
};

} // namespace klab::detail
