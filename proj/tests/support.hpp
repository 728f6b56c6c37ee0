#pragma once

#include <vector>

#include "hnode/chain/chain_view.hpp"
#include "hnode/chain/mining.hpp"
#include "hnode/state/ledger.hpp"
#include "hnode/state/workload.hpp"

namespace testutil {

using namespace hnode;

inline BlockPtr next_block(const Block& prev, std::uint32_t level, std::uint64_t salt) {
    Block b;
    b.index = prev.index + 1;
    b.tx_root = sha256({});
    b.nonce = salt * 1000003 + b.index;
    b.interlink = update_interlink(prev);
    b.body = std::vector<Transaction>{};
    b.level = level;
    b.id = compute_id(b);
    return std::make_shared<const Block>(std::move(b));
}

inline BlockPtr genesis_block() {
    Block g;
    g.tx_root = sha256({});
    g.body = std::vector<Transaction>{};
    g.level = GENESIS_INF;
    g.id = compute_id(g);
    return std::make_shared<const Block>(std::move(g));
}

/// Genesis followed by one block per entry of `levels`. Levels are set
/// directly instead of being read off the id.
inline ChainView chain_with_levels(const std::vector<std::uint32_t>& levels, std::uint64_t salt = 1) {
    ChainView v(std::vector<BlockPtr>{genesis_block()});
    for (auto l : levels) v.push_back(next_block(v.back(), l, salt));
    return v;
}

inline ChainView extend(ChainView v, const std::vector<std::uint32_t>& levels, std::uint64_t salt) {
    for (auto l : levels) v.push_back(next_block(v.back(), l, salt));
    return v;
}

/// Fork of `base` after index F with `n` fresh blocks.
inline ChainView fork_at(const ChainView& base, std::uint64_t F, std::size_t n, std::uint64_t salt) {
    ChainView v = base.prefix(base.lower_bound(F + 1));
    for (std::size_t i = 0; i < n; ++i) v.push_back(next_block(v.back(), 0, salt));
    return v;
}

/// A chain with real bodies and commitments, plus S(0..n).
struct LedgerChain {
    ChainView chain;
    std::vector<LedgerState> states;
};

inline LedgerChain ledger_chain(std::size_t n, std::uint64_t seed) {
    MiningOracle oracle(MiningMode::Sim, 0, seed);
    Workload w(seed + 7, 3);
    LedgerChain out;
    LedgerState s = genesis_state();
    out.states.push_back(s);
    out.chain = ChainView(std::vector<BlockPtr>{std::make_shared<const Block>(oracle.genesis(state_commitment(s)))});
    for (std::size_t i = 0; i < n; ++i) {
        auto body = w.make_body(s, account_key(static_cast<unsigned>(i % 3)));
        Block probe;
        probe.index = s.height + 1;
        probe.body = body;
        apply_block_in_place(s, probe);
        out.chain.push_back(std::make_shared<const Block>(oracle.mine(out.chain.back(), std::move(body), state_commitment(s))));
        out.states.push_back(s);
    }
    return out;
}

}  // namespace testutil
