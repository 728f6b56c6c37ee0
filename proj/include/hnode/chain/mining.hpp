#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "hnode/chain/block.hpp"

namespace hnode {

enum class MiningMode { Hash, Sim };

/// Produces valid blocks on top of a given parent.
///
/// Hash mode grinds nonces until the id has T leading zeros. Sim mode skips
/// the work: the level is drawn so that P(level >= mu) = 2^-mu and the id is
/// still the real header hash (with a counter nonce), so ids stay unique
/// and verifiable. Every id handed out is remembered; a repeat throws
/// IdCollision.
class MiningOracle {
public:
    MiningOracle(MiningMode mode, unsigned T, std::uint64_t seed);

    [[nodiscard]] MiningMode mode() const noexcept { return mode_; }
    [[nodiscard]] unsigned difficulty() const noexcept { return T_; }

    Block genesis(const Digest& state_commitment);
    Block mine(const Block& prev, std::vector<Transaction> body, const Digest& state_commitment);
    /// Header-only variant for tests that never look at bodies.
    Block mine_header(const Block& prev, const Digest& tx_root, const Digest& state_commitment);

    [[nodiscard]] std::size_t ids_issued() const noexcept { return seen_.size(); }

private:
    MiningMode mode_;
    unsigned T_;
    std::mt19937_64 rng_;
    std::uint64_t counter_ = 0;
    std::unordered_set<BlockId, DigestHash> seen_;

    void finish(Block& b);
    void remember(const BlockId& id);
};

/// Sample a geometric level from one 64-bit draw: trailing zero count.
std::uint32_t sample_level(std::uint64_t draw) noexcept;

}  // namespace hnode
