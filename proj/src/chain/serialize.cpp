#include "hnode/chain/serialize.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

#include "hnode/error.hpp"

namespace hnode {

void ByteWriter::u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteReader::need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw Error(ErrorCode::Serialization, "truncated input");
}

std::uint8_t ByteReader::u8() {
    need(1);
    return in_[pos_++];
}

std::uint32_t ByteReader::u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in_[pos_++]) << (8 * i);
    return v;
}

std::uint64_t ByteReader::u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in_[pos_++]) << (8 * i);
    return v;
}

Digest ByteReader::digest() {
    need(32);
    Digest d;
    std::memcpy(d.bytes.data(), in_.data() + pos_, 32);
    pos_ += 32;
    return d;
}

void ByteReader::expect_magic(std::string_view m) {
    need(m.size());
    if (std::memcmp(in_.data() + pos_, m.data(), m.size()) != 0) {
        throw Error(ErrorCode::Serialization, "bad magic, expected " + std::string(m));
    }
    pos_ += m.size();
}

void ByteReader::expect_done() const {
    if (!done()) throw Error(ErrorCode::Serialization, "trailing bytes after payload");
}

void write_transaction(ByteWriter& w, const Transaction& tx) {
    w.digest(tx.from);
    w.digest(tx.to);
    w.u64(tx.amount);
    w.digest(tx.sig_stub);
}

Transaction read_transaction(ByteReader& r) {
    Transaction tx;
    tx.from = r.digest();
    tx.to = r.digest();
    tx.amount = r.u64();
    tx.sig_stub = r.digest();
    return tx;
}

void write_block(ByteWriter& w, const Block& b) {
    w.u64(b.index);
    w.digest(b.tx_root);
    w.digest(b.state_commitment);
    w.u64(b.nonce);
    w.u32(static_cast<std::uint32_t>(b.interlink.size()));
    for (const auto& link : b.interlink) w.digest(link);
    w.digest(b.id);
    w.u32(b.level);
    if (!b.body) {
        w.u8(0);
        return;
    }
    w.u8(1);
    w.u32(static_cast<std::uint32_t>(b.body->size()));
    for (const auto& tx : *b.body) write_transaction(w, tx);
}

Block read_block(ByteReader& r) {
    Block b;
    b.index = r.u64();
    b.tx_root = r.digest();
    b.state_commitment = r.digest();
    b.nonce = r.u64();
    std::uint32_t links = r.u32();
    if (links > 4096) throw Error(ErrorCode::Serialization, "implausible interlink length");
    b.interlink.reserve(links);
    for (std::uint32_t i = 0; i < links; ++i) b.interlink.push_back(r.digest());
    b.id = r.digest();
    b.level = r.u32();
    std::uint8_t has_body = r.u8();
    if (has_body > 1) throw Error(ErrorCode::Serialization, "bad body marker");
    if (has_body) {
        std::uint32_t n = r.u32();
        std::vector<Transaction> txs;
        for (std::uint32_t i = 0; i < n; ++i) txs.push_back(read_transaction(r));
        b.body = std::move(txs);
    }
    return b;
}

Bytes encode_block(const Block& b) {
    ByteWriter w;
    write_block(w, b);
    return w.take();
}

Block decode_block(std::span<const std::uint8_t> in) {
    ByteReader r(in);
    Block b = read_block(r);
    r.expect_done();
    return b;
}

Bytes encode_chain(const ChainView& v) {
    ByteWriter w;
    w.magic("HNCV");
    w.u32(kChainFormatVersion);
    w.u64(v.size());
    for (const auto& b : v) write_block(w, *b);
    return w.take();
}

ChainView decode_chain(std::span<const std::uint8_t> in) {
    ByteReader r(in);
    r.expect_magic("HNCV");
    if (r.u32() != kChainFormatVersion) throw Error(ErrorCode::Serialization, "unsupported chain format version");
    std::uint64_t n = r.u64();
    std::vector<BlockPtr> blocks;
    for (std::uint64_t i = 0; i < n; ++i) blocks.push_back(std::make_shared<const Block>(read_block(r)));
    r.expect_done();
    return ChainView(std::move(blocks));
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Serialization, "cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Serialization, "cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

}  // namespace hnode
