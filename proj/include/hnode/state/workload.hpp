#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hnode/state/ledger_state.hpp"

namespace hnode {

/// Seeded synthetic transfers. Every body starts with the coinbase and then
/// holds `txs_per_block` transfers that are valid in sequence against the
/// given state.
class Workload {
public:
    Workload(std::uint64_t seed, unsigned txs_per_block);

    std::vector<Transaction> make_body(const LedgerState& state, const AccountKey& miner);

private:
    std::mt19937_64 rng_;
    unsigned txs_per_block_;
    std::uint64_t counter_ = 0;
};

}  // namespace hnode
