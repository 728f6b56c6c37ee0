#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hnode {

/// 256-bit SHA-256 output. Read big-endian, a digest is the binary fraction
/// 0.b0b1b2... in [0,1), which is how block ids are compared to 2^-(T+mu).
struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Digest&) const = default;

    /// Number of leading zero bits (256 for the all-zero digest).
    [[nodiscard]] unsigned leading_zero_bits() const noexcept;
    [[nodiscard]] std::string hex() const;
    [[nodiscard]] static Digest from_hex(std::string_view hex);
};

struct DigestHash {
    std::size_t operator()(const Digest& d) const noexcept;
};

/// Incremental SHA-256 over little-endian encoded fields.
class Hasher {
public:
    Hasher();
    ~Hasher();
    Hasher(const Hasher&) = delete;
    Hasher& operator=(const Hasher&) = delete;

    Hasher& update(std::span<const std::uint8_t> data);
    Hasher& update(const Digest& d) { return update(d.bytes); }
    Hasher& update_u64(std::uint64_t v);
    Hasher& update_u32(std::uint32_t v);
    Digest finish();

private:
    void* ctx_;
};

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256_pair(const Digest& left, const Digest& right);

}  // namespace hnode
