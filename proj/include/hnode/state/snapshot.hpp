#pragma once

#include <span>

#include "hnode/chain/serialize.hpp"
#include "hnode/state/ledger_state.hpp"

namespace hnode {

/// "HNST", version, height, account count, then (key, balance) in key order.
Bytes encode_state(const LedgerState& s);
LedgerState decode_state(std::span<const std::uint8_t> in);

}  // namespace hnode
