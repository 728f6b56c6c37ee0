#pragma once

#include <cstdint>

#include "hnode/chain/chain_view.hpp"
#include "hnode/state/ledger_state.hpp"

namespace hnode {

/// A claimed sequence of states S(B'), S(B'+1), ... seen only through the
/// commitments it produces. The honest implementation applies blocks; the
/// simulator plugs in a forged one.
class StateSequence {
public:
    virtual ~StateSequence() = default;
    virtual Digest anchor() = 0;
    /// Advance past `b` and return the new commitment. May throw
    /// InvalidTransaction if the claimed state cannot absorb the block.
    virtual Digest step(const Block& b) = 0;
};

/// Checks the sequence against y of every retained block from B' to the tip.
/// The tail must be contiguous and carry bodies (MissingBody otherwise).
bool verify_state_sequence(const ChainView& P, std::uint64_t trim_point, StateSequence& seq);

/// Algorithm 3 with an extra anchor check: commitment(S) must equal y(B').
bool state_verify(const ChainView& P, std::uint64_t trim_point, const LedgerState& S);

}  // namespace hnode
