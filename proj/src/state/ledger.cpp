#include "hnode/state/ledger.hpp"

#include <string>

#include "hnode/chain/merkle.hpp"
#include "hnode/error.hpp"

namespace hnode {

AccountKey account_key(unsigned i) {
    std::string s = "acct" + std::to_string(i);
    return sha256({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

LedgerState genesis_state(unsigned accounts, std::uint64_t balance) {
    LedgerState s;
    for (unsigned i = 0; i < accounts; ++i) s.accounts[account_key(i)] = balance;
    return s;
}

Transaction make_coinbase(const AccountKey& miner, std::uint64_t height) {
    Transaction tx;
    tx.from = kMintKey;
    tx.to = miner;
    tx.amount = kCoinbaseMint;
    Hasher h;
    h.update_u64(height);
    tx.sig_stub = h.finish();
    return tx;
}

void apply_block_in_place(LedgerState& state, const Block& block) {
    if (block.index != state.height + 1) {
        throw InvalidTransaction(block.index, 0, "block does not follow state height " + std::to_string(state.height));
    }
    if (!block.body) throw Error(ErrorCode::MissingBody, "block " + std::to_string(block.index) + " has no body");
    const auto& txs = *block.body;
    if (txs.empty() || txs[0].from != kMintKey || txs[0].amount != kCoinbaseMint) {
        throw InvalidTransaction(block.index, 0, "missing or malformed coinbase");
    }
    state.accounts[txs[0].to] += kCoinbaseMint;
    for (std::size_t i = 1; i < txs.size(); ++i) {
        const auto& tx = txs[i];
        if (tx.amount == 0) throw InvalidTransaction(block.index, i, "zero amount");
        if (tx.from == kMintKey) throw InvalidTransaction(block.index, i, "mint outside coinbase");
        auto it = state.accounts.find(tx.from);
        if (it == state.accounts.end()) throw InvalidTransaction(block.index, i, "unknown sender");
        if (it->second < tx.amount) throw InvalidTransaction(block.index, i, "overdraft");
        it->second -= tx.amount;
        state.accounts[tx.to] += tx.amount;
    }
    state.height = block.index;
}

LedgerState apply_block(const LedgerState& state, const Block& block) {
    LedgerState next = state;
    apply_block_in_place(next, block);
    return next;
}

Digest state_commitment(const LedgerState& state) {
    std::vector<Digest> leaves;
    leaves.reserve(state.accounts.size());
    for (const auto& [key, balance] : state.accounts) {
        Hasher h;
        h.update(key).update_u64(balance);
        leaves.push_back(h.finish());
    }
    return merkle_root(std::move(leaves));
}

}  // namespace hnode
