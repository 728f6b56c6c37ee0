#pragma once

#include <cstdint>

#include "hnode/state/ledger_state.hpp"

namespace hnode {

inline constexpr std::uint64_t kCoinbaseMint = 50;
inline constexpr std::uint64_t kGenesisBalance = 1000;
inline constexpr unsigned kGenesisAccounts = 8;

/// Source of the coinbase transaction (tx 0 of every non-genesis block).
/// No account can hold this key.
inline const AccountKey kMintKey{};

AccountKey account_key(unsigned i);
LedgerState genesis_state(unsigned accounts = kGenesisAccounts, std::uint64_t balance = kGenesisBalance);
Transaction make_coinbase(const AccountKey& miner, std::uint64_t height);

/// F(S, b). Throws InvalidTransaction (with tx position) on a bad body and
/// MissingBody for a header-only block.
LedgerState apply_block(const LedgerState& state, const Block& block);
void apply_block_in_place(LedgerState& state, const Block& block);

/// Merkle root over leaves H(key || balance_le64) in key order.
Digest state_commitment(const LedgerState& state);

}  // namespace hnode
