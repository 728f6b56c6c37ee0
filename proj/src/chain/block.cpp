#include "hnode/chain/block.hpp"

#include "hnode/chain/merkle.hpp"
#include "hnode/error.hpp"

namespace hnode {

Digest Transaction::hash() const {
    Hasher h;
    h.update(from).update(to).update_u64(amount).update(sig_stub);
    return h.finish();
}

Block Block::header_only() const {
    Block b;
    b.index = index;
    b.tx_root = tx_root;
    b.state_commitment = state_commitment;
    b.nonce = nonce;
    b.interlink = interlink;
    b.id = id;
    b.level = level;
    return b;
}

Digest compute_id(const Block& b) {
    Hasher h;
    h.update_u64(b.nonce).update(b.tx_root).update(b.state_commitment).update_u64(b.index);
    h.update_u32(static_cast<std::uint32_t>(b.interlink.size()));
    for (const auto& link : b.interlink) h.update(link);
    return h.finish();
}

std::uint32_t block_level(const BlockId& id, unsigned T) {
    unsigned lz = id.leading_zero_bits();
    if (lz < T) throw Error(ErrorCode::InvalidBlock, "block id above difficulty target");
    return lz - T;
}

std::uint32_t block_level(const Block& b, unsigned T) {
    if (b.index == 0) return GENESIS_INF;
    return block_level(b.id, T);
}

std::vector<BlockId> update_interlink(const Block& prev) {
    if (prev.is_genesis()) return {prev.id};
    // The top entry of a well-formed interlink is always genesis.
    const BlockId genesis = prev.interlink.back();
    std::vector<BlockId> out = prev.interlink;
    if (out.size() < static_cast<std::size_t>(prev.level) + 1) out.resize(prev.level + 1);
    for (std::uint32_t mu = 0; mu <= prev.level; ++mu) out[mu] = prev.id;
    if (out.back() != genesis) out.push_back(genesis);
    return out;
}

Digest tx_root_of(const std::vector<Transaction>& txs) {
    std::vector<Digest> leaves;
    leaves.reserve(txs.size());
    for (const auto& tx : txs) leaves.push_back(tx.hash());
    return merkle_root(std::move(leaves));
}

}  // namespace hnode
