#pragma once

#include <cstdint>
#include <optional>

namespace polysieve {

/// Caller overrides for the randomized detection drivers. Field degrees are
/// chosen per algorithm as the smallest supported degree meeting the error
/// analysis; both knobs are exposed on the command line.
struct DetectOptions {
    std::optional<std::uint64_t> repetitions;
    std::optional<int> field_bits;
};

/// Instrumentation filled in by the sieve evaluators: how many label subsets
/// one full evaluation iterates over.
struct SieveStats {
    std::uint64_t label_subsets = 0;
};

}  // namespace polysieve
