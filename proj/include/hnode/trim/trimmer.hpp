#pragma once

#include <cstdint>

#include "hnode/trim/params.hpp"
#include "hnode/trim/trimmed_chain.hpp"

namespace hnode::trim {

struct TrimReport {
    bool success = false;
    std::uint32_t level = 0;
    std::uint64_t old_trim_point = 0;
    std::uint64_t new_trim_point = 0;
    std::size_t blocks_before = 0;
    std::size_t blocks_after = 0;
    unsigned tail_retries = 0;
};

struct TrimResult {
    TrimmedChain chain;
    bool success = false;
};

/// First block index a trim at level mu covers: 0 above the highest range,
/// the range's own start when active, the current B' below the lowest.
std::uint64_t range_start(const TrimmedChain& D, std::uint32_t mu);

/// The `trim` function of Algorithm 1. On failure the input is returned unchanged.
TrimResult trim_to_level(const TrimmedChain& D, std::uint64_t trim_point, std::uint32_t mu, std::uint64_t g,
                         std::uint64_t f, double delta);

/// One trimming attempt (the caller decides when Q blocks have accrued).
/// With a tail override the trim point moves but nothing is deleted.
TrimmedChain try_trim(const TrimmedChain& P, const TrimParams& p, TrimReport* report = nullptr);

}  // namespace hnode::trim
