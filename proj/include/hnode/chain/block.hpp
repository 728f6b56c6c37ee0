#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "hnode/chain/digest.hpp"

namespace hnode {

using BlockId = Digest;
using AccountKey = Digest;

inline constexpr std::uint32_t GENESIS_INF = std::numeric_limits<std::uint32_t>::max();

struct Transaction {
    AccountKey from;
    AccountKey to;
    std::uint64_t amount = 0;
    Digest sig_stub;

    bool operator==(const Transaction&) const = default;
    [[nodiscard]] Digest hash() const;
};

struct Block {
    std::uint64_t index = 0;
    Digest tx_root;
    Digest state_commitment;
    std::uint64_t nonce = 0;
    std::vector<BlockId> interlink;
    BlockId id;
    std::uint32_t level = 0;
    // nullopt marks a header-only block; an empty vector is an empty block.
    std::optional<std::vector<Transaction>> body;

    bool operator==(const Block&) const = default;

    [[nodiscard]] bool is_genesis() const noexcept { return level == GENESIS_INF; }
    [[nodiscard]] bool has_body() const noexcept { return body.has_value(); }
    [[nodiscard]] bool at_least(std::uint32_t mu) const noexcept { return level >= mu; }
    [[nodiscard]] Block header_only() const;
};

using BlockPtr = std::shared_ptr<const Block>;

/// H(nonce, x, y, i, interlink) over the little-endian field encoding.
Digest compute_id(const Block& b);

/// Leading zero bits minus T. Throws InvalidBlock when the id has fewer than T.
std::uint32_t block_level(const BlockId& id, unsigned T);
/// As above, but genesis reports GENESIS_INF.
std::uint32_t block_level(const Block& b, unsigned T);

std::vector<BlockId> update_interlink(const Block& prev);

Digest tx_root_of(const std::vector<Transaction>& txs);

}  // namespace hnode
