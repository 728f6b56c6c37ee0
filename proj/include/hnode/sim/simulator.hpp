#pragma once

#include <vector>

#include "hnode/sim/config.hpp"
#include "hnode/sim/trace.hpp"
#include "hnode/state/ledger_state.hpp"
#include "hnode/trim/trimmed_chain.hpp"

namespace hnode::sim {

struct SimResult {
    SimTrace trace;
    trim::TrimmedChain final_chain;  // the honest node's P at the end
    LedgerState tip_state;           // S(B)
    LedgerState trim_state;          // S(B')
    std::vector<BlockPtr> archive;   // canonical full chain, if keep_archive
};

/// One seeded run. Validates the config first (ConfigInvalid).
SimResult run_simulation(const SimConfig& cfg);

}  // namespace hnode::sim
