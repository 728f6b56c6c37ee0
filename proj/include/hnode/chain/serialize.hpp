#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnode/chain/chain_view.hpp"

namespace hnode {

using Bytes = std::vector<std::uint8_t>;

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void digest(const Digest& d) { out_.insert(out_.end(), d.bytes.begin(), d.bytes.end()); }
    void magic(std::string_view m) { out_.insert(out_.end(), m.begin(), m.end()); }

    [[nodiscard]] const Bytes& bytes() const noexcept { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

/// Bounds-checked reader; any overrun throws Serialization.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    Digest digest();
    void expect_magic(std::string_view m);
    [[nodiscard]] bool done() const noexcept { return pos_ == in_.size(); }
    void expect_done() const;

private:
    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;

    void need(std::size_t n) const;
};

inline constexpr std::uint32_t kChainFormatVersion = 1;

void write_transaction(ByteWriter& w, const Transaction& tx);
Transaction read_transaction(ByteReader& r);
void write_block(ByteWriter& w, const Block& b);
Block read_block(ByteReader& r);

Bytes encode_block(const Block& b);
Block decode_block(std::span<const std::uint8_t> in);
/// "HNCV" magic, format version, block count, blocks.
Bytes encode_chain(const ChainView& v);
ChainView decode_chain(std::span<const std::uint8_t> in);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);

}  // namespace hnode
