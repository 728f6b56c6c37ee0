#pragma once

#include <cstdint>

#include "hnode/chain/chain_view.hpp"

namespace hnode::trim {

// `up` must be a contiguous run of under↑mu. Downchain lengths are taken
// from block-index arithmetic, so `under` may itself be a trimmed chain:
// deleted blocks still count toward the length they covered.

/// Def. 5 for every g' in [g, |up|].
bool superquality_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g);

/// Practical dominance: for every lower level mu'' and suffix g' >= g,
/// 2^mu g' >= (1-delta) 2^mu'' |downchain↑mu''| over retained blocks, and no
/// run of non-mu-superblocks inside the downchain carries 2^level weight
/// of 2^mu g or more.
bool dominance_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g);

bool goodness_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g);

}  // namespace hnode::trim
