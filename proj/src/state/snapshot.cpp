#include "hnode/state/snapshot.hpp"

#include "hnode/error.hpp"

namespace hnode {

Bytes encode_state(const LedgerState& s) {
    ByteWriter w;
    w.magic("HNST");
    w.u32(1);
    w.u64(s.height);
    w.u64(s.accounts.size());
    for (const auto& [key, balance] : s.accounts) {
        w.digest(key);
        w.u64(balance);
    }
    return w.take();
}

LedgerState decode_state(std::span<const std::uint8_t> in) {
    ByteReader r(in);
    r.expect_magic("HNST");
    if (r.u32() != 1) throw Error(ErrorCode::Serialization, "unsupported state snapshot version");
    LedgerState s;
    s.height = r.u64();
    std::uint64_t n = r.u64();
    for (std::uint64_t i = 0; i < n; ++i) {
        Digest key = r.digest();
        if (!s.accounts.empty() && !(s.accounts.rbegin()->first < key)) {
            throw Error(ErrorCode::Serialization, "snapshot keys not in canonical order");
        }
        s.accounts.emplace_hint(s.accounts.end(), key, r.u64());
    }
    r.expect_done();
    return s;
}

}  // namespace hnode
