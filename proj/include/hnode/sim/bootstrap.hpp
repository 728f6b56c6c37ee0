#pragma once

#include <string>
#include <vector>

#include "hnode/compare/comparator.hpp"
#include "hnode/state/ledger_state.hpp"

namespace hnode::sim {

struct Offer {
    std::string source;
    trim::TrimmedChain chain;
    LedgerState state;  // claimed S(B') of `chain`
};

struct BootstrapOutcome {
    std::size_t chain_winner = 0;  // offer whose chain won the tournament
    std::size_t adopted = 0;       // first offer on that chain whose state verified
    std::vector<bool> state_ok;    // state_verify per offer, in arrival order
    std::vector<compare::CompareVerdict> rounds;
};

/// Pairwise Compare tournament in arrival order (incumbent first), then
/// state_verify. Throws VerificationFailed if no offer on the winning
/// chain carries a state that verifies.
BootstrapOutcome bootstrap_node(const std::vector<Offer>& offers, const trim::TrimParams& p);

}  // namespace hnode::sim
