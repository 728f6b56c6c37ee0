#include "hnode/chain/mining.hpp"

#include <bit>

#include "hnode/error.hpp"

namespace hnode {

std::uint32_t sample_level(std::uint64_t draw) noexcept {
    return static_cast<std::uint32_t>(std::countr_zero(draw));
}

MiningOracle::MiningOracle(MiningMode mode, unsigned T, std::uint64_t seed) : mode_(mode), T_(T), rng_(seed) {
    if (mode == MiningMode::Hash && T > 32) throw Error(ErrorCode::ConfigInvalid, "difficulty too high for desk-scale mining");
}

void MiningOracle::remember(const BlockId& id) {
    if (!seen_.insert(id).second) throw Error(ErrorCode::IdCollision, "block id collision: " + id.hex());
}

Block MiningOracle::genesis(const Digest& state_commitment) {
    Block g;
    g.index = 0;
    g.body = std::vector<Transaction>{};
    g.tx_root = tx_root_of(*g.body);
    g.state_commitment = state_commitment;
    g.level = GENESIS_INF;
    g.id = compute_id(g);
    remember(g.id);
    return g;
}

void MiningOracle::finish(Block& b) {
    if (mode_ == MiningMode::Sim) {
        b.nonce = counter_++;
        b.id = compute_id(b);
        b.level = sample_level(rng_());
    } else {
        b.nonce = rng_();
        for (;;) {
            b.id = compute_id(b);
            if (b.id.leading_zero_bits() >= T_) break;
            ++b.nonce;
        }
        b.level = block_level(b.id, T_);
    }
    remember(b.id);
}

Block MiningOracle::mine(const Block& prev, std::vector<Transaction> body, const Digest& state_commitment) {
    Block b;
    b.index = prev.index + 1;
    b.tx_root = tx_root_of(body);
    b.body = std::move(body);
    b.state_commitment = state_commitment;
    b.interlink = update_interlink(prev);
    finish(b);
    return b;
}

Block MiningOracle::mine_header(const Block& prev, const Digest& tx_root, const Digest& state_commitment) {
    Block b;
    b.index = prev.index + 1;
    b.tx_root = tx_root;
    b.state_commitment = state_commitment;
    b.interlink = update_interlink(prev);
    finish(b);
    return b;
}

}  // namespace hnode
