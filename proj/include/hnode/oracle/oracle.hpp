#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hnode/chain/chain_view.hpp"
#include "hnode/sim/config.hpp"
#include "hnode/sim/trace.hpp"
#include "hnode/state/ledger_state.hpp"

// Reference implementations for tests. Nothing here calls into the
// trim, compare, state or sim libraries; only chain types are shared.
namespace hnode::oracle {

struct Counterexample {
    std::string input;  // seed or digest that reproduces it
    std::string expected;
    std::string got;
};

struct OracleReport {
    std::uint64_t checked = 0;
    std::uint64_t agreements = 0;
    std::vector<Counterexample> counterexamples;

    void record(bool ok, Counterexample c);
    [[nodiscard]] bool clean() const noexcept { return counterexamples.empty(); }
};

/// Longest chain wins, ties to C1. Chains must share genesis.
int full_compare(const ChainView& C1, const ChainView& C2);

/// Exhaustive dominance check on a contiguous chain of at most 20 blocks.
/// Throws TooLarge above that.
bool dominant_bruteforce(const ChainView& C, std::uint32_t mu, std::uint64_t g, double delta);

/// Naive fold of the transition function from the genesis allocation.
LedgerState replay_state(const ChainView& C);

/// Empirical Poisson tail checks at delta' = 0.3 on one trace.
OracleReport poisson_validators(const sim::SimTrace& trace, const sim::SimConfig& cfg);

/// The cross-process bound alone: adversary events while the honest
/// process produces its first n events are at most (1.3)^2 (la/lh) n.
bool adversary_count_bound(const sim::SimTrace& trace, const sim::SimConfig& cfg, std::uint64_t n);

}  // namespace hnode::oracle
