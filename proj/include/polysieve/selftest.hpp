#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polysieve {

struct SelfTestReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

/// Compact oracle-equivalence sweep over every module: field algebra,
/// determinant identities, and each sieve against its brute-force monomial
/// sum on random desk-scale instances. Deterministic given the seed.
SelfTestReport run_selftest(std::uint64_t seed);

}  // namespace polysieve
