#include "hnode/state/state_verify.hpp"

#include <string>

#include "hnode/error.hpp"
#include "hnode/state/ledger.hpp"

namespace hnode {

namespace {

class AppliedSequence : public StateSequence {
public:
    explicit AppliedSequence(const LedgerState& s) : s_(s) {}
    Digest anchor() override { return state_commitment(s_); }
    Digest step(const Block& b) override {
        apply_block_in_place(s_, b);
        return state_commitment(s_);
    }

private:
    LedgerState s_;
};

}  // namespace

bool verify_state_sequence(const ChainView& P, std::uint64_t trim_point, StateSequence& seq) {
    auto pos = P.find_index(trim_point);
    if (!pos) throw Error(ErrorCode::MissingBody, "trimming point block " + std::to_string(trim_point) + " not retained");
    if (seq.anchor() != P[*pos].state_commitment) return false;
    std::uint64_t expect = trim_point + 1;
    for (std::size_t i = *pos + 1; i < P.size(); ++i, ++expect) {
        const Block& b = P[i];
        if (b.index != expect) throw Error(ErrorCode::MissingBody, "gap in untrimmed tail at " + std::to_string(expect));
        if (!b.has_body()) throw Error(ErrorCode::MissingBody, "tail block " + std::to_string(b.index) + " has no body");
        try {
            if (seq.step(b) != b.state_commitment) return false;
        } catch (const InvalidTransaction&) {
            return false;
        }
    }
    return true;
}

bool state_verify(const ChainView& P, std::uint64_t trim_point, const LedgerState& S) {
    if (S.height != trim_point) return false;
    AppliedSequence seq(S);
    return verify_state_sequence(P, trim_point, seq);
}

}  // namespace hnode
