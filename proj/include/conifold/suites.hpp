#pragma once

#include "conifold/localization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace conifold {

/// Outcome of a batch check: counts plus the first few failure messages.
struct SuiteResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
    void record(bool good, const std::string& label);
    std::string str() const;
};

/**
 * Randomized identities of the character algebra (commutativity,
 * associativity, distributivity, bar involution, reduce/expand round
 * trips on constructed exact quotients), `cases` instances per law.
 */
SuiteResult run_algebra_suite(int cases, std::uint64_t seed);

/**
 * Checks that every fixed configuration with rank <= rank_max, twist <=
 * twist_max, total length <= order_max assembles to a Laurent polynomial
 * with zero unit coefficient.  With corrupt = true, runs the perturbed
 * sheaf as a negative control: configurations occupying the first framing
 * component must fail with FixedPart, all others must still assemble
 * cleanly.
 */
SuiteResult run_finiteness_scan(int rank_max, int twist_max, int order_max,
                                const VertexOptions& opts = {}, bool corrupt = false);

/**
 * Cross-validates the exact reduction of each assembled configuration
 * against a brute-force cone expansion of the same rational character up
 * to `expand_order`, for all configurations with total length <=
 * order_max.
 */
SuiteResult run_oracle_scan(int rank_max, int twist_max, int order_max, std::int64_t expand_order,
                            const VertexOptions& opts = {});

/**
 * Checks series(rank r) == series(rank 1)^r for the listed ranks/twists
 * up to order max_order.
 */
SuiteResult run_multiplicativity_suite(const std::vector<int>& ranks,
                                       const std::vector<int>& twists, int max_order,
                                       const VertexOptions& opts = {});

/**
 * Checks that `num_draws` independent generic specializations give the
 * same series for each (rank, twist) pair.
 */
SuiteResult run_specialization_suite(const std::vector<int>& ranks,
                                     const std::vector<int>& twists, int max_order, int num_draws,
                                     std::uint64_t seed, const VertexOptions& opts = {});

} // namespace conifold
