#include "hnode/trim/serialize.hpp"

#include "hnode/error.hpp"

namespace hnode::trim {

Bytes encode_trimmed(const TrimmedChain& P) {
    ByteWriter w;
    w.magic("HNTC");
    w.u32(1);
    w.u64(P.trim_point());
    w.u32(static_cast<std::uint32_t>(P.ranges().size()));
    for (const auto& r : P.ranges()) {
        w.u32(r.level);
        w.u64(r.first);
        w.u64(r.last);
    }
    w.u64(P.view().size());
    for (const auto& b : P.view()) write_block(w, *b);
    return w.take();
}

TrimmedChain decode_trimmed(std::span<const std::uint8_t> in) {
    ByteReader r(in);
    r.expect_magic("HNTC");
    if (r.u32() != 1) throw Error(ErrorCode::Serialization, "unsupported trimmed chain version");
    std::uint64_t trim_point = r.u64();
    std::uint32_t nr = r.u32();
    if (nr > 4096) throw Error(ErrorCode::Serialization, "implausible level range count");
    std::vector<LevelRange> ranges;
    for (std::uint32_t i = 0; i < nr; ++i) {
        LevelRange lr;
        lr.level = r.u32();
        lr.first = r.u64();
        lr.last = r.u64();
        ranges.push_back(lr);
    }
    std::uint64_t n = r.u64();
    std::vector<BlockPtr> blocks;
    for (std::uint64_t i = 0; i < n; ++i) blocks.push_back(std::make_shared<const Block>(read_block(r)));
    r.expect_done();
    return TrimmedChain(ChainView(std::move(blocks)), std::move(ranges), trim_point);
}

}  // namespace hnode::trim
