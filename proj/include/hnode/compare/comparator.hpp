#pragma once

#include <cstdint>

#include "hnode/trim/params.hpp"
#include "hnode/trim/trimmed_chain.hpp"

namespace hnode::compare {

struct CompareVerdict {
    int winner = 1;  // 1 or 2
    double w1 = 0;
    double w2 = 0;
    std::uint64_t lca_index = 0;
    bool lca_before_trim_point = false;  // b < B' of the first argument
};

/// Weight of P past block index b (Algorithm 2, func Weight). Blocks are
/// counted strictly after b. An untrimmed chain (B' = 0) skips the tail
/// length test and weighs as its plain length past b.
double weight_of(const trim::TrimmedChain& P, std::uint64_t b, const trim::TrimParams& p);

/// Ties go to P1, the incumbent.
CompareVerdict compare(const trim::TrimmedChain& P1, const trim::TrimmedChain& P2, const trim::TrimParams& p);

}  // namespace hnode::compare
