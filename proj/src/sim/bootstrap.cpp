#include "hnode/sim/bootstrap.hpp"

#include "hnode/error.hpp"
#include "hnode/state/state_verify.hpp"

namespace hnode::sim {

BootstrapOutcome bootstrap_node(const std::vector<Offer>& offers, const trim::TrimParams& p) {
    if (offers.empty()) throw Error(ErrorCode::VerificationFailed, "no offers");
    BootstrapOutcome out;
    for (std::size_t i = 1; i < offers.size(); ++i) {
        auto v = compare::compare(offers[out.chain_winner].chain, offers[i].chain, p);
        out.rounds.push_back(v);
        if (v.winner == 2) out.chain_winner = i;
    }
    for (const auto& o : offers) {
        bool ok = false;
        try {
            ok = state_verify(o.chain.view(), o.chain.trim_point(), o.state);
        } catch (const Error&) {
            ok = false;
        }
        out.state_ok.push_back(ok);
    }
    const BlockId& want = offers[out.chain_winner].chain.view().back().id;
    for (std::size_t i = 0; i < offers.size(); ++i) {
        if (offers[i].chain.view().back().id == want && out.state_ok[i]) {
            out.adopted = i;
            return out;
        }
    }
    throw Error(ErrorCode::VerificationFailed, "no offer on the winning chain has a verifiable state");
}

}  // namespace hnode::sim
