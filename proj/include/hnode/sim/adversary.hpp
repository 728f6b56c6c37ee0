#pragma once

#include <cstdint>
#include <vector>

#include "hnode/state/ledger_state.hpp"
#include "hnode/state/state_verify.hpp"
#include "hnode/trim/trimmed_chain.hpp"

namespace hnode::sim {

/// A private chain grown from block F of the honest chain.
struct SecretFork {
    bool active = false;
    std::uint64_t fork_point = 0;
    std::uint64_t attempt = 0;
    LedgerState fork_state;           // S(F)
    trim::TrimmedChain chain;         // honest chain cut at F, then the secret blocks
    std::vector<LedgerState> states;  // state after each secret block

    [[nodiscard]] std::uint64_t secret_length() const noexcept { return states.size(); }
    [[nodiscard]] const Block& tip() const { return chain.view().back(); }
    [[nodiscard]] const LedgerState& tip_state() const { return states.empty() ? fork_state : states.back(); }
    [[nodiscard]] std::vector<BlockPtr> secret_blocks() const;
    /// State the fork would hand out at its own trimming point.
    [[nodiscard]] LedgerState state_at_trim_point(const LedgerState& honest_trim_state) const;
};

SecretFork start_fork(const trim::TrimmedChain& honest, std::uint64_t F, LedgerState state_at_F, std::uint64_t attempt);

/// Attempt sizes for the short-tail attack: alpha_1 = 1 and
/// alpha_i = max(1, ceil(2 c0 ln(1 + sum_{j<i} alpha_j))).
std::uint64_t alpha_next(double c0, std::uint64_t i, std::uint64_t sum_before);
std::vector<std::uint64_t> alpha_sequence(double c0, std::size_t n);

struct AlphaSchedule {
    std::uint64_t index = 1;       // attempt i (1-based) that runs next or now
    std::uint64_t sum_before = 0;  // sum of alpha_j for j < i
    std::uint64_t alpha = 0;       // alpha_i of the running attempt
    bool running = false;
};

/// The state-forgery race. The forged sequence starts at `target` (a
/// trimming point) and has matched the commitments of `matched` headers.
struct ForgeState {
    bool active = false;
    std::uint64_t target = 0;
    std::uint64_t matched = 0;
    bool flagged = false;
};

/// Commitments of a forged state sequence: the ideal forging functionality
/// matches y(i) for every index below target + matched and nothing after.
class ForgedSequence : public StateSequence {
public:
    ForgedSequence(const ChainView& P, std::uint64_t trim_point, std::uint64_t covered_end, Digest junk);
    Digest anchor() override;
    Digest step(const Block& b) override;

private:
    const ChainView& P_;
    std::uint64_t trim_point_;
    std::uint64_t covered_end_;
    Digest junk_;
};

}  // namespace hnode::sim
