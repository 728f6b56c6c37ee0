#include "hnode/sim/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace hnode::sim {

std::vector<BlockPtr> SecretFork::secret_blocks() const {
    const ChainView& v = chain.view();
    std::vector<BlockPtr> out;
    for (std::size_t i = v.lower_bound(fork_point + 1); i < v.size(); ++i) out.push_back(v.ptr(i));
    return out;
}

LedgerState SecretFork::state_at_trim_point(const LedgerState& honest_trim_state) const {
    if (chain.trim_point() <= fork_point) return honest_trim_state;
    return states.empty() ? fork_state : states.front();
}

SecretFork start_fork(const trim::TrimmedChain& honest, std::uint64_t F, LedgerState state_at_F, std::uint64_t attempt) {
    SecretFork f;
    f.active = true;
    f.fork_point = F;
    f.attempt = attempt;
    f.fork_state = std::move(state_at_F);
    f.chain = honest.truncated(F);
    return f;
}

std::uint64_t alpha_next(double c0, std::uint64_t i, std::uint64_t sum_before) {
    if (i <= 1) return 1;
    double v = std::ceil(2 * c0 * std::log1p(static_cast<double>(sum_before)));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(v));
}

std::vector<std::uint64_t> alpha_sequence(double c0, std::size_t n) {
    std::vector<std::uint64_t> out;
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(alpha_next(c0, i, sum));
        sum += out.back();
    }
    return out;
}

ForgedSequence::ForgedSequence(const ChainView& P, std::uint64_t trim_point, std::uint64_t covered_end, Digest junk)
    : P_(P), trim_point_(trim_point), covered_end_(covered_end), junk_(junk) {}

Digest ForgedSequence::anchor() {
    auto pos = P_.find_index(trim_point_);
    if (!pos || trim_point_ >= covered_end_) return junk_;
    return P_[*pos].state_commitment;
}

Digest ForgedSequence::step(const Block& b) {
    return b.index < covered_end_ ? b.state_commitment : junk_;
}

}  // namespace hnode::sim
