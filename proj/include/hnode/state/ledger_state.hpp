#pragma once

#include <cstdint>
#include <map>

#include "hnode/chain/block.hpp"

namespace hnode {

/// Account balances after applying block `height`. std::map keeps keys
/// sorted, which is the canonical order for commitments and snapshots.
struct LedgerState {
    std::map<AccountKey, std::uint64_t> accounts;
    std::uint64_t height = 0;

    bool operator==(const LedgerState&) const = default;

    [[nodiscard]] std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [k, v] : accounts) t += v;
        return t;
    }
};

}  // namespace hnode
